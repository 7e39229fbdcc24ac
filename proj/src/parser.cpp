#include "tapps/parser.hpp"

#include "tapps/error.hpp"

namespace tapps {

namespace {

constexpr std::string_view kSeparators = ",:;\\|.+-*/<>";

class Parser {
public:
    explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

    ast::Statement statement() {
        if (tokens_.empty()) {
            throw ParseError(ErrorKind::ParseError, "empty statement", 0, "");
        }
        const Token& head = peek();
        if (head.kind != TokenKind::Keyword) fail("a statement keyword");
        ast::Statement result = dispatch(head.lexeme);
        if (!at_end()) fail("end of statement");
        return result;
    }

    SeriesSelector id_list_only() {
        auto list = id_list();
        if (!at_end()) fail("end of list");
        return list;
    }

private:
    ast::Statement dispatch(const std::string& kw) {
        if (kw == "cast") return cast();
        if (kw == "delete") return del();
        if (kw == "describe") {
            advance();
            return ast::Describe{id()};
        }
        if (kw == "load") return load();
        if (kw == "merge") return merge();
        if (kw == "new") return new_statement();
        if (kw == "rename") return rename();
        if (kw == "runplugin") {
            advance();
            return ast::RunPlugin{id()};
        }
        if (kw == "save") return save();
        if (kw == "select") return select();
        if (kw == "set") return set();
        if (kw == "pythonshell") {
            advance();
            return ast::Shell{};
        }
        if (kw == "show") return show();
        fail("a statement keyword");
    }

    ast::Cast cast() {
        advance();
        ast::Cast c;
        c.series = id_list();
        expect("in");
        c.frame = id();
        expect("as");
        const Token& t = peek();
        auto type = t.kind == TokenKind::Keyword ? cast_type_from_name(t.lexeme) : std::nullopt;
        if (!type) fail("a data type (alpha, nonalpha, float, real, integer)");
        advance();
        c.type = *type;
        return c;
    }

    ast::Delete del() {
        advance();
        ast::Delete d;
        if (accept("dataframe")) {
            d.target = ast::Delete::Target::DataFrame;
        } else if (accept("parameter")) {
            d.target = ast::Delete::Target::Parameter;
        } else {
            fail("'dataframe' or 'parameter'");
        }
        d.name = id();
        return d;
    }

    ast::Load load() {
        advance();
        ast::Load l;
        if (accept("session")) {
            l.kind = ast::Load::Kind::Session;
            expect("from");
            l.file = filename();
            return l;
        }
        if (accept("noheader")) {
            l.kind = ast::Load::Kind::NoHeaderCsv;
            expect("csv");
        } else if (accept("csv")) {
            l.kind = ast::Load::Kind::Csv;
        } else {
            fail("'csv', 'noheader' or 'session'");
        }
        l.file = filename();
        expect("as");
        l.frame = id();
        return l;
    }

    ast::Merge merge() {
        advance();
        ast::Merge m;
        if (accept("series")) {
            m.kind = ast::Merge::Kind::Series;
            auto list = id_list();
            if (list.all) fail_at(index_ - 1, "series names");
            m.series = std::move(list.names);
        } else if (accept("labels")) {
            m.kind = ast::Merge::Kind::Labels;
        } else if (accept("replace")) {
            m.kind = ast::Merge::Kind::ReplaceLabels;
            expect("labels");
        } else {
            fail("'series', 'labels' or 'replace'");
        }
        expect("from");
        m.source = id();
        expect("to");
        m.destination = id();
        return m;
    }

    ast::New new_statement() {
        advance();
        ast::New n;
        n.subject = id();
        if (accept("parameter")) {
            n.kind = ast::New::Kind::Parameter;
            expect("as");
            n.target = id();
            return n;
        }
        if (accept("dataframe")) {
            n.kind = ast::New::Kind::DataFrame;
            expect("from");
            n.target = id();
            if (accept("results")) {
                n.location = ast::PLocation::Results;
            } else if (accept("dataframe")) {
                n.location = ast::PLocation::DataFrame;
            } else {
                fail("'results' or 'dataframe'");
            }
            return n;
        }
        fail("'parameter' or 'dataframe'");
    }

    ast::Rename rename() {
        advance();
        ast::Rename r;
        if (accept("series")) {
            r.axis = Axis::Series;
        } else if (accept("labels")) {
            r.axis = Axis::Labels;
        } else {
            fail("'series' or 'labels'");
        }
        expect("in");
        r.frame = id();
        expect("from");
        r.from = id();
        expect("to");
        r.to = id();
        return r;
    }

    ast::Save save() {
        advance();
        ast::Save s;
        if (accept("session")) {
            s.kind = ast::Save::Kind::Session;
            expect("as");
            s.file = filename();
            return s;
        }
        if (accept("dataframe")) {
            s.kind = ast::Save::Kind::DataFrameCsv;
            s.frame = id();
            expect("as");
            expect("csv");
            s.file = filename();
            return s;
        }
        fail("'session' or 'dataframe'");
    }

    ast::Select select() {
        advance();
        ast::Select s;
        expect("from");
        s.source = id();
        expect("as");
        s.destination = id();
        if (accept("where")) {
            ast::Where w;
            if (peek_kind() != TokenKind::Operator) w.series = id();
            w.op = binop();
            w.value = value();
            s.where = std::move(w);
        }
        return s;
    }

    ast::Set set() {
        advance();
        ast::Set s;
        using T = ast::Set::Target;
        if (accept("displayast")) {
            s.target = T::DisplayAst;
            s.argument = id();
        } else if (accept("cwd")) {
            s.target = T::Cwd;
            s.argument = filename();
        } else if (accept("separator")) {
            s.target = T::Separator;
            const Token& t = peek();
            if ((t.kind != TokenKind::Delimiter && t.kind != TokenKind::Operator) ||
                t.lexeme.size() != 1 || kSeparators.find(t.lexeme[0]) == std::string_view::npos) {
                fail("a separator character");
            }
            s.argument = t.lexeme;
            advance();
        } else if (accept("fillin")) {
            s.target = T::Fillin;
            s.fillin = value();
        } else if (accept("parameter")) {
            if (accept("dataframe")) {
                s.target = T::ParameterDataFrame;
                expect("in");
                s.parameter_set = id();
                expect("as");
                s.argument = id();
            } else {
                s.target = T::Parameter;
                s.key = id();
                expect("in");
                s.parameter_set = id();
                expect("as");
                s.argument = id();
            }
        } else if (accept("rcwd")) {
            s.target = T::Rcwd;
            s.argument = id();
        } else if (accept("ocwd")) {
            s.target = T::Ocwd;
        } else {
            fail("a set target");
        }
        return s;
    }

    ast::Show show() {
        advance();
        ast::Show s;
        using T = ast::Show::Target;
        if (accept("asthistory")) {
            s.target = T::AstHistory;
        } else if (accept("environment")) {
            s.target = T::Environment;
        } else if (accept("history")) {
            s.target = T::History;
        } else if (accept("plugin")) {
            if (accept("list")) {
                s.target = T::PluginList;
            } else {
                s.target = T::Plugin;
                s.plugin = id();
            }
        } else if (accept("session")) {
            s.target = T::Session;
        } else if (accept("dataframe")) {
            s.target = T::DataFrame;
        } else if (accept("parameter")) {
            s.target = T::Parameter;
        } else {
            fail("a show target");
        }
        return s;
    }

    SeriesSelector id_list() {
        if (accept("all")) return SeriesSelector::every();
        SeriesSelector sel;
        sel.names.push_back(id());
        while (!at_end() && peek().kind == TokenKind::Delimiter && peek().lexeme == ",") {
            advance();
            sel.names.push_back(id());
        }
        return sel;
    }

    BinOp binop() {
        const Token& t = peek();
        std::optional<BinOp> op;
        if (t.kind == TokenKind::Operator) op = binop_from_symbol(t.lexeme);
        if (!op) fail("a comparison operator");
        advance();
        return *op;
    }

    ast::Value value() {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::Number:
                advance();
                return {ast::Value::Kind::Number, t.lexeme};
            case TokenKind::Identifier:
            case TokenKind::String:
            case TokenKind::Filename:
            case TokenKind::Keyword:
                advance();
                return {ast::Value::Kind::Text, name_of(t)};
            default:
                fail("a value");
        }
    }

    // ID positions take identifiers, numbers (e.g. headerless series "1"),
    // quoted names and keywords spelled as written.
    std::string id() {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::Identifier:
            case TokenKind::Number:
            case TokenKind::String:
            case TokenKind::Keyword:
                if (t.lexeme.empty()) fail("a non-empty name");
                advance();
                return name_of(t);
            default:
                fail("an identifier");
        }
    }

    std::string filename() {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::Filename:
            case TokenKind::Identifier:
            case TokenKind::Number:
            case TokenKind::String:
                if (t.lexeme.empty()) fail("a non-empty file name");
                advance();
                return t.lexeme;
            default:
                fail("a file name");
        }
    }

    static std::string name_of(const Token& t) {
        return t.kind == TokenKind::Keyword ? t.spelling : t.lexeme;
    }

    bool at_end() const { return index_ >= tokens_.size(); }

    const Token& peek() const {
        if (at_end()) fail_end();
        return tokens_[index_];
    }

    TokenKind peek_kind() const { return peek().kind; }

    void advance() { ++index_; }

    bool accept(std::string_view kw) {
        if (!at_end() && tokens_[index_].is_keyword(kw)) {
            ++index_;
            return true;
        }
        return false;
    }

    void expect(std::string_view kw) {
        if (!accept(kw)) fail("'" + std::string(kw) + "'");
    }

    [[noreturn]] void fail_end() const {
        throw ParseError(ErrorKind::ParseError,
                         "unexpected end of statement after '" + tokens_.back().spelling + "'",
                         tokens_.size() - 1, "");
    }

    [[noreturn]] void fail(const std::string& expected) const { fail_at(index_, expected); }

    [[noreturn]] void fail_at(std::size_t index, const std::string& expected) const {
        if (index >= tokens_.size()) {
            throw ParseError(ErrorKind::ParseError,
                             "expected " + expected + " but the statement ended", tokens_.size() - 1,
                             "");
        }
        const Token& t = tokens_[index];
        throw ParseError(ErrorKind::ParseError,
                         "expected " + expected + " but found '" + t.spelling + "' at column " +
                             std::to_string(t.column),
                         index, t.spelling);
    }

    std::span<const Token> tokens_;
    std::size_t index_ = 0;
};

}  // namespace

ast::Statement parse_statement(std::span<const Token> tokens) {
    return Parser(tokens).statement();
}

ast::Statement parse(std::string_view text) {
    auto tokens = tokenize(text);
    return parse_statement(tokens);
}

SeriesSelector parse_id_list(std::string_view text) {
    auto tokens = tokenize(text);
    if (tokens.empty()) {
        throw ParseError(ErrorKind::ParseError, "empty series list", 0, "");
    }
    return Parser(tokens).id_list_only();
}

}  // namespace tapps
