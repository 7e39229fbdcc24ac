#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "tapps/bytecode.hpp"
#include "tapps/error.hpp"
#include "tapps/parser.hpp"

#include <map>
#include <set>

using namespace tapps;

namespace {

Bytecode one(const std::string& statement) {
    auto code = compile(parse(statement));
    REQUIRE(code.size() == 1);
    return code.front();
}

}  // namespace

TEST_CASE("opcode table") {
    CHECK(kAllOpcodes.size() == 23);
    std::set<std::string_view> names;
    for (auto op : kAllOpcodes) {
        names.insert(opcode_name(op));
        CHECK(opcode_from_name(opcode_name(op)) == op);
    }
    CHECK(names.size() == kAllOpcodes.size());
    CHECK_FALSE(opcode_from_name("select"));
}

TEST_CASE("worked session compiles to the expected opcodes") {
    auto golden = testing::load_golden("transcript_opcodes.tsv");
    REQUIRE(golden.size() == 19);
    for (const auto& g : golden) {
        INFO(g.statement);
        CHECK(opcode_name(one(g.statement).opcode()) == g.opcode);
    }
}

TEST_CASE("corpus compiles to the expected opcodes and covers every opcode") {
    auto golden = testing::load_golden("corpus_opcodes.tsv");
    std::set<std::string> seen;
    for (const auto& g : golden) {
        INFO(g.statement);
        auto code = one(g.statement);
        CHECK(opcode_name(code.opcode()) == g.opcode);
        CHECK(arity_ok(code.opcode(), code.operands()));
        seen.insert(g.opcode);
    }
    CHECK(seen.size() == kAllOpcodes.size());
}

TEST_CASE("rendering") {
    CHECK(render(one("select from STI as STI_Low where Open < 820")) ==
          "idsearch STI STI_Low Open < 820");
    CHECK(render(one("select from STI as G where >= \"two words\"")) ==
          "greedysearch STI G >= \"\\\"two words\\\"\"");
    CHECK(render(one("pythonshell")) == "pythonshell");
    CHECK(render(one("cast Open,High in STI as nonalpha")) == "cast nonalpha Open,High STI");
    CHECK(render(one("new STI_summarize dataframe from testingA results")) ==
          "newdataframe STI_summarize testingA results");
    CHECK(render(one("set parameter dataframe in testingA as STI_A")) ==
          "set parameterdataframe testingA STI_A");
    CHECK(render(one("set ocwd")) == "set ocwd");
    CHECK(render(one("show plugin summarize")) == "show plugin summarize");
    CHECK(render(one("describe \"Adj Close\"")) == "describe \"Adj Close\"");
}

TEST_CASE("operand layouts") {
    auto c = one("cast \"Adj Close\", Open in STI as integer");
    CHECK(c.operands() == std::vector<std::string>{"integer", "\"Adj Close\",Open", "STI"});
    CHECK(parse_id_list(c.operand(1)) == SeriesSelector{false, {"Adj Close", "Open"}});
    auto all = one("cast all in STI as alpha");
    CHECK(parse_id_list(all.operand(1)).all);
    auto m = one("merge series a,b from X to Y");
    CHECK(m.operands() == std::vector<std::string>{"a,b", "X", "Y"});
    CHECK(one("load noheader csv x.csv as X").opcode() == Opcode::LoadCsv2);
    CHECK(one("merge replace labels from X to Y").opcode() == Opcode::MergeLabels2);
}

TEST_CASE("value operands keep number and text apart") {
    auto num = one("select from S as T where x == 820");
    auto txt = one("select from S as T where x == \"820\"");
    CHECK(num.operand(4) != txt.operand(4));
    CHECK(value_operand(num.operand(4)) == CellValue(820));
    CHECK(value_operand(txt.operand(4)) == CellValue("820"));
    CHECK(value_operand(one("set fillin NA").operand(1)) == CellValue("NA"));
    CHECK(value_operand(one("set fillin -2.5").operand(1)) == CellValue(-2.5));
}

TEST_CASE("arity is enforced") {
    CHECK_THROWS_AS(Bytecode(Opcode::Describe), Error);
    CHECK_THROWS_AS(Bytecode(Opcode::PythonShell, {"x"}), Error);
    CHECK_THROWS_AS(Bytecode(Opcode::Set, {"parameter", "a"}), Error);
    CHECK_THROWS_AS(Bytecode(Opcode::Set, {"colour", "red"}), Error);
    CHECK_THROWS_AS(Bytecode(Opcode::Show, {}), Error);
    CHECK_THROWS_AS(Bytecode(Opcode::NewDataFrame, {"a", "b", "elsewhere"}), Error);
    CHECK_NOTHROW(Bytecode(Opcode::Show, {"plugin", "x"}));
    try {
        Bytecode(Opcode::IdSearch, {"a"});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidArgument);
    }
}

TEST_CASE("distinct statements compile to distinct bytecode") {
    std::map<std::string, std::string> by_render;
    for (const auto& text : testing::grammar_corpus()) {
        auto canonical = ast::format(parse(text));
        auto rendered = render(one(text));
        auto [it, inserted] = by_render.emplace(rendered, canonical);
        INFO(rendered);
        if (!inserted) CHECK(it->second == canonical);
    }
}
