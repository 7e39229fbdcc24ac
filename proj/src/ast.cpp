#include "tapps/ast.hpp"

#include "tapps/error.hpp"
#include "tapps/lexer.hpp"

#include <sstream>

namespace tapps::ast {

namespace {

std::string id(const std::string& name) { return quote_if_needed(name); }
std::string path(const std::string& file) { return quote_path_if_needed(file); }

struct Formatter {
    std::ostringstream os;

    void operator()(const Cast& c) {
        os << "cast " << format_id_list(c.series) << " in " << id(c.frame) << " as "
           << cast_type_name(c.type);
    }
    void operator()(const Delete& d) {
        os << "delete " << (d.target == Delete::Target::DataFrame ? "dataframe " : "parameter ")
           << id(d.name);
    }
    void operator()(const Describe& d) { os << "describe " << id(d.frame); }
    void operator()(const Load& l) {
        switch (l.kind) {
            case Load::Kind::Csv: os << "load csv " << path(l.file) << " as " << id(l.frame); break;
            case Load::Kind::NoHeaderCsv:
                os << "load noheader csv " << path(l.file) << " as " << id(l.frame);
                break;
            case Load::Kind::Session: os << "load session from " << path(l.file); break;
        }
    }
    void operator()(const Merge& m) {
        switch (m.kind) {
            case Merge::Kind::Series:
                os << "merge series " << format_id_list(SeriesSelector{false, m.series});
                break;
            case Merge::Kind::Labels: os << "merge labels"; break;
            case Merge::Kind::ReplaceLabels: os << "merge replace labels"; break;
        }
        os << " from " << id(m.source) << " to " << id(m.destination);
    }
    void operator()(const New& n) {
        if (n.kind == New::Kind::Parameter) {
            os << "new " << id(n.subject) << " parameter as " << id(n.target);
        } else {
            os << "new " << id(n.subject) << " dataframe from " << id(n.target)
               << (n.location == PLocation::Results ? " results" : " dataframe");
        }
    }
    void operator()(const Rename& r) {
        os << "rename " << (r.axis == Axis::Series ? "series" : "labels") << " in " << id(r.frame)
           << " from " << id(r.from) << " to " << id(r.to);
    }
    void operator()(const RunPlugin& r) { os << "runplugin " << id(r.parameter_set); }
    void operator()(const Save& s) {
        if (s.kind == Save::Kind::Session) {
            os << "save session as " << path(s.file);
        } else {
            os << "save dataframe " << id(s.frame) << " as csv " << path(s.file);
        }
    }
    void operator()(const Select& s) {
        os << "select from " << id(s.source) << " as " << id(s.destination);
        if (s.where) {
            os << " where ";
            if (s.where->series) os << id(*s.where->series) << ' ';
            os << binop_symbol(s.where->op) << ' ' << format_value(s.where->value);
        }
    }
    void operator()(const Set& s) {
        using T = Set::Target;
        os << "set ";
        switch (s.target) {
            case T::DisplayAst: os << "displayast " << id(s.argument); break;
            case T::Cwd: os << "cwd " << path(s.argument); break;
            case T::Separator: os << "separator " << s.argument; break;
            case T::Fillin: os << "fillin " << format_value(s.fillin); break;
            case T::Parameter:
                os << "parameter " << id(s.key) << " in " << id(s.parameter_set) << " as "
                   << id(s.argument);
                break;
            case T::ParameterDataFrame:
                os << "parameter dataframe in " << id(s.parameter_set) << " as " << id(s.argument);
                break;
            case T::Rcwd: os << "rcwd " << id(s.argument); break;
            case T::Ocwd: os << "ocwd"; break;
        }
    }
    void operator()(const Shell&) { os << "pythonshell"; }
    void operator()(const Show& s) {
        using T = Show::Target;
        os << "show ";
        switch (s.target) {
            case T::AstHistory: os << "asthistory"; break;
            case T::Environment: os << "environment"; break;
            case T::History: os << "history"; break;
            case T::PluginList: os << "plugin list"; break;
            case T::Plugin: os << "plugin " << id(s.plugin); break;
            case T::Session: os << "session"; break;
            case T::DataFrame: os << "dataframe"; break;
            case T::Parameter: os << "parameter"; break;
        }
    }
};

}  // namespace

std::string format_value(const Value& value) {
    if (value.kind == Value::Kind::Number) return value.text;
    // Numeric-looking text has to stay quoted or it would re-parse as a number.
    try {
        auto tokens = tokenize(value.text);
        if (tokens.size() == 1 && tokens[0].kind == TokenKind::Identifier &&
            tokens[0].lexeme == value.text) {
            return value.text;
        }
    } catch (const Error&) {
    }
    return quote(value.text);
}

std::string format_id_list(const SeriesSelector& selector) {
    if (selector.all) return "all";
    std::string out;
    for (std::size_t i = 0; i < selector.names.size(); ++i) {
        if (i) out += ',';
        out += id(selector.names[i]);
    }
    return out;
}

std::string format(const Statement& statement) {
    Formatter f;
    std::visit(f, statement);
    return f.os.str();
}

}  // namespace tapps::ast
