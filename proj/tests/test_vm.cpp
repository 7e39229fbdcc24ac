#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "tapps/error.hpp"
#include "tapps/parser.hpp"
#include "tapps/vm.hpp"

#include <random>

using namespace tapps;
using testing::TempDir;

namespace {

struct Machine {
    TempDir dir;
    Session session = testing::session_with_plugins();
    Environment env = Environment::at(dir.path());

    ExecResult run(const std::string& statement) {
        auto code = compile(parse(statement));
        return execute(code.at(0), session, env);
    }
    ErrorKind fails(const std::string& statement) {
        try {
            run(statement);
        } catch (const Error& e) {
            return e.kind();
        }
        FAIL("expected an Error from: " << statement);
        return ErrorKind::InvalidArgument;
    }
};

}  // namespace

TEST_CASE("load, select, merge") {
    Machine m;
    m.dir.write("p.csv", "Open,Close\n$900,1\n700,2\n2500,3\n");
    m.run("load csv p.csv as P");
    m.run("cast Open in P as nonalpha");
    m.run("select from P as Low where Open < 820");
    m.run("select from P as High where Open > 2000");
    CHECK(m.session.mdf.get("Low").labels() == std::vector<std::string>{"2"});
    CHECK(m.session.mdf.get("High").labels() == std::vector<std::string>{"3"});
    m.run("select from Low as Both");
    m.run("merge labels from High to Both");
    CHECK(m.session.mdf.get("Both").row_count() == 2);
    m.run("select from P as Any where >= 3");
    CHECK(m.session.mdf.get("Any").labels() == std::vector<std::string>{"1", "2", "3"});
    CHECK(m.fails("load csv p.csv as P") == ErrorKind::DuplicateFrameName);
    CHECK(m.fails("load csv none.csv as N") == ErrorKind::FileNotFound);
    CHECK(m.fails("select from P as Low") == ErrorKind::DuplicateFrameName);
    CHECK(m.fails("select from Q as R") == ErrorKind::UnknownDataFrame);
    CHECK(m.fails("select from P as R where Nope < 1") == ErrorKind::UnknownSeries);
}

TEST_CASE("rename and delete") {
    Machine m;
    m.dir.write("p.csv", "a,b\n1,2\n");
    m.run("load csv p.csv as P");
    m.run("rename series in P from a to A");
    m.run("rename labels in P from 1 to first");
    CHECK(m.session.mdf.get("P").series_names() == std::vector<std::string>{"A", "b"});
    CHECK(m.session.mdf.get("P").labels() == std::vector<std::string>{"first"});
    m.run("delete dataframe P");
    CHECK(m.session.mdf.size() == 0);
    CHECK(m.fails("delete dataframe P") == ErrorKind::UnknownDataFrame);
    CHECK(m.fails("delete parameter nope") == ErrorKind::UnknownParameterSet);
    m.run("new template parameter as t");
    m.run("delete parameter t");
    CHECK(m.session.parameters.empty());
}

TEST_CASE("directories") {
    Machine m;
    std::filesystem::create_directories(m.dir / "data" / "deep");
    m.run("set rcwd data");
    CHECK(m.env.cwd == m.dir / "data");
    m.run("set cwd deep");
    CHECK(m.env.cwd == m.dir / "data" / "deep");
    m.run("set cwd ..");
    CHECK(m.env.cwd == m.dir / "data");
    m.run("set ocwd");
    CHECK(m.env.cwd == m.dir.path());
    m.run("set cwd \"" + (m.dir / "data").string() + "\"");
    CHECK(m.env.cwd == m.dir / "data");
    CHECK(m.fails("set rcwd missing") == ErrorKind::FileNotFound);
    CHECK(m.env.cwd == m.dir / "data");
    CHECK(m.env.starting_cwd == m.dir.path());
}

TEST_CASE("environment settings") {
    Machine m;
    m.run("set separator ;");
    CHECK(m.env.separator == ';');
    m.run("set fillin NA");
    CHECK(m.env.fillin == CellValue("NA"));
    m.run("set fillin 0");
    CHECK(m.env.fillin == CellValue(0));
    m.run("set displayast TRUE");
    CHECK(m.env.display_ast);
    CHECK(m.fails("set displayast maybe") == ErrorKind::InvalidArgument);
    CHECK(m.env.display_ast);
    m.dir.write("s.csv", "a;b\n1\n");
    m.run("load csv s.csv as S");
    CHECK(m.session.mdf.get("S").row("1")[1] == CellValue("0"));
}

TEST_CASE("show output") {
    Machine m;
    auto env_text = m.run("show environment").output;
    CHECK(env_text == "Current Working Directory: " + m.dir.path().string() + "\n" +
                          "Starting Working Directory: " + m.dir.path().string() + "\n" +
                          "Separator: ,\nFillin: (not set)\nDisplay AST: false\n");
    CHECK(m.run("show plugin list").output ==
          "Loaded plugin(s) (n = 2): summarize, template\nFailed plugin(s) (n = 0):\n");
    auto plugin = m.run("show plugin summarize").output;
    CHECK(plugin.rfind("Plugin Name: summarize\nRelease: 1\nDescription: ", 0) == 0);
    CHECK(plugin.find("\nFolder: summarize_1\nInstructions:\n") != std::string::npos);
    CHECK(m.fails("show plugin glm") == ErrorKind::UnknownPlugin);
    CHECK(m.run("show dataframe").output == "Current Dataframe(s) (n = 0):\n");
    CHECK(m.run("show parameter").output == "Parameter Set(s) (n = 0):\n");
    CHECK(m.run("show session").output ==
          "Dataframe(s) (n = 0):\nParameter Set(s) (n = 0):\n"
          "Loaded plugin(s) (n = 2): summarize, template\nFailed plugin(s) (n = 0):\n"
          "History entries: 0\n");
    m.session.history = {{1, "a"}, {2, "b"}};
    CHECK(m.run("show history").output == "1: a\n2: b\n");
    CHECK(m.run("show asthistory").output.empty());
}

TEST_CASE("listing and parameter display") {
    Machine m;
    m.dir.write("p.csv", "a,b\n1,2\n3,4\n");
    m.run("load csv p.csv as P");
    m.run("new summarize parameter as s");
    m.run("set parameter analysis_name in s as trialA");
    m.run("set parameter alpha in s as 0.05");
    m.run("set parameter dataframe in s as P");
    CHECK(m.run("show dataframe").output ==
          "Current Dataframe(s) (n = 1):\n\nDataframe Name: P\nSeries Names: a,b\n"
          "Number of Series: 2\nNumber of Labels (data rows): 2\n");
    CHECK(m.run("show parameter").output ==
          "Parameter Set(s) (n = 1):\n\nParameter Set: s\nplugin_name: summarize\n"
          "analysis_name: trialA\nalpha: 0.05\ninput dataframe: P (2 series, 2 labels)\n"
          "results dataframe: (none)\n");
    CHECK(m.fails("set parameter plugin_name in s as template") == ErrorKind::InvalidArgument);
    CHECK(m.fails("set parameter results in s as x") == ErrorKind::InvalidArgument);
    CHECK(m.fails("set parameter alpha in nope as 1") == ErrorKind::UnknownParameterSet);
}

TEST_CASE("plugin round trip through the machine") {
    Machine m;
    m.dir.write("p.csv", "a,b\n1,2\n3,4\n");
    m.run("load csv p.csv as P");
    m.run("new summarize parameter as s");
    CHECK(m.fails("runplugin s") == ErrorKind::MissingInputFrame);
    CHECK(m.fails("new R dataframe from s results") == ErrorKind::EmptySlot);
    CHECK(m.fails("new R dataframe from s dataframe") == ErrorKind::EmptySlot);
    m.run("set parameter dataframe in s as P");
    // the bound frame is a snapshot
    m.run("rename series in P from a to z");
    CHECK(m.session.parameters.at("s").input_frame->series_names() == std::vector<std::string>{"a", "b"});
    m.run("runplugin s");
    m.run("new R dataframe from s results");
    m.run("new I dataframe from s dataframe");
    CHECK(m.session.mdf.get("R").labels() == std::vector<std::string>{"a", "b"});
    CHECK(m.session.mdf.get("R").series_count() == 7);
    CHECK(m.session.mdf.get("I").name() == "I");
    CHECK(m.fails("new R dataframe from s results") == ErrorKind::DuplicateFrameName);
    CHECK(m.fails("new R2 dataframe from nope results") == ErrorKind::UnknownParameterSet);
    CHECK(m.fails("new glm parameter as g") == ErrorKind::UnknownPlugin);
    CHECK(m.fails("new summarize parameter as s") == ErrorKind::DuplicateParameterSetName);
    CHECK(m.fails("runplugin nope") == ErrorKind::UnknownParameterSet);
    m.run("describe R");
    m.run("set parameter analytical_method in s as by_nothing");
    CHECK(m.fails("runplugin s") == ErrorKind::PluginFailure);
}

TEST_CASE("only show and describe print") {
    Machine m;
    m.dir.write("p.csv", "a\n1\n");
    CHECK(m.run("load csv p.csv as P").output.empty());
    CHECK(m.run("save dataframe P as csv out.csv").output.empty());
    CHECK(m.run("save session as s.txt").output.empty());
    CHECK_FALSE(m.run("describe P").output.empty());
    CHECK(testing::slurp(m.dir / "out.csv") == "a\n1\n");
}

TEST_CASE("shell escape needs a terminal") {
    Machine m;
    m.env.interactive = false;
    CHECK(m.fails("pythonshell") == ErrorKind::SpawnFailure);
}

TEST_CASE("failed statements leave session and environment unchanged") {
    Machine m;
    m.dir.write("p.csv", "a,b\n1,x\n2,3\n");
    m.dir.write("bad.csv", "a,b\n1\n");
    m.dir.write("bad_session.txt", "TAPPS-SESSION v1\n[environment]\ncwd=/\n[end]\n[dataframe Q]\n");
    m.run("load csv p.csv as P");
    m.run("select from P as Q where a == 1");
    m.run("new summarize parameter as s");
    m.run("set parameter dataframe in s as P");
    m.run("new template parameter as t");

    const std::vector<std::string> statements = {
        "cast a in P as integer", "cast zz in P as integer", "cast all in Nope as real",
        "delete dataframe Q", "delete dataframe Nope", "delete parameter t", "delete parameter nope",
        "describe Nope", "load csv bad.csv as B", "load csv p.csv as P", "load csv p.csv as P2",
        "load session as bad_session.txt", "load session as none.txt",
        "merge labels from Q to P", "merge replace labels from P to Q", "merge labels from P to Nope",
        "merge series b from P to Q", "merge series a from P to Q",
        "new X dataframe from s results", "new X dataframe from s dataframe", "new X dataframe from t dataframe",
        "new summarize parameter as t", "new template parameter as u",
        "rename series in P from a to b", "rename series in P from zz to y", "rename labels in P from 1 to 2",
        "rename labels in Q from 1 to one", "runplugin s", "runplugin t", "runplugin nope",
        "save dataframe Nope as csv x.csv", "save dataframe P as csv no/dir/x.csv",
        "save session as no/dir/s.txt", "select from P as Q", "select from P as R where b > 1",
        "select from P as S where >= x", "set rcwd nowhere", "set displayast sometimes",
        "set parameter plugin_name in s as template", "set parameter dataframe in s as Nope",
        "set parameter dataframe in t as Q", "set parameter narrative in nope as x",
        "show plugin nope", "pythonshell", "set fillin 5", "set separator ;", "set ocwd",
    };
    std::mt19937_64 rng(3);
    std::size_t failures = 0;
    for (int round = 0; round < 300; ++round) {
        const auto& statement = statements[std::uniform_int_distribution<std::size_t>(0, statements.size() - 1)(rng)];
        const Session before = m.session;
        const Environment env_before = m.env;
        try {
            m.run(statement);
        } catch (const Error& e) {
            ++failures;
            INFO(statement << ": " << e.what());
            CHECK(m.session == before);
            CHECK(m.env == env_before);
            CHECK(m.env.interactive == env_before.interactive);
        }
    }
    CHECK(failures > 50);
}
