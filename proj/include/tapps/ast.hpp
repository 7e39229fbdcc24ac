#pragma once

#include "tapps/frame_ops.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tapps::ast {

/// A literal in a where-clause or FILLIN: NUMBER tokens are numeric, every
/// other token (identifier, quoted string, ...) is text.
struct Value {
    enum class Kind { Number, Text };
    Kind kind = Kind::Text;
    std::string text;

    bool operator==(const Value&) const = default;
};

struct Cast {
    SeriesSelector series;
    std::string frame;
    CastType type = CastType::Alpha;
    bool operator==(const Cast&) const = default;
};

struct Delete {
    enum class Target { DataFrame, Parameter };
    Target target = Target::DataFrame;
    std::string name;
    bool operator==(const Delete&) const = default;
};

struct Describe {
    std::string frame;
    bool operator==(const Describe&) const = default;
};

struct Load {
    enum class Kind { Csv, NoHeaderCsv, Session };
    Kind kind = Kind::Csv;
    std::string file;
    std::string frame;  // empty for sessions
    bool operator==(const Load&) const = default;
};

struct Merge {
    enum class Kind { Series, Labels, ReplaceLabels };
    Kind kind = Kind::Labels;
    std::vector<std::string> series;  // Series only
    std::string source;
    std::string destination;
    bool operator==(const Merge&) const = default;
};

enum class PLocation { Results, DataFrame };

struct New {
    enum class Kind { Parameter, DataFrame };
    Kind kind = Kind::Parameter;
    // Parameter: NEW <plugin> PARAMETER AS <set>
    // DataFrame: NEW <frame> DATAFRAME FROM <set> <location>
    std::string subject;
    std::string target;
    PLocation location = PLocation::Results;
    bool operator==(const New&) const = default;
};

struct Rename {
    Axis axis = Axis::Series;
    std::string frame;
    std::string from;
    std::string to;
    bool operator==(const Rename&) const = default;
};

struct RunPlugin {
    std::string parameter_set;
    bool operator==(const RunPlugin&) const = default;
};

struct Save {
    enum class Kind { Session, DataFrameCsv };
    Kind kind = Kind::Session;
    std::string frame;  // DataFrameCsv only
    std::string file;
    bool operator==(const Save&) const = default;
};

struct Where {
    std::optional<std::string> series;  // absent: greedy search over every series
    BinOp op = BinOp::EQ;
    Value value;
    bool operator==(const Where&) const = default;
};

struct Select {
    std::string source;
    std::string destination;
    std::optional<Where> where;
    bool operator==(const Select&) const = default;
};

struct Set {
    enum class Target { DisplayAst, Cwd, Separator, Fillin, Parameter, ParameterDataFrame, Rcwd, Ocwd };
    Target target = Target::Ocwd;
    // DisplayAst/Cwd/Rcwd: argument. Separator: the character.
    // Parameter: key, parameter_set, argument. ParameterDataFrame: parameter_set, argument.
    std::string key;
    std::string parameter_set;
    std::string argument;
    Value fillin;  // Fillin only
    bool operator==(const Set&) const = default;
};

struct Shell {
    bool operator==(const Shell&) const = default;
};

struct Show {
    enum class Target { AstHistory, Environment, History, PluginList, Plugin, Session, DataFrame, Parameter };
    Target target = Target::DataFrame;
    std::string plugin;  // Plugin only
    bool operator==(const Show&) const = default;
};

using Statement = std::variant<Cast, Delete, Describe, Load, Merge, New, Rename, RunPlugin, Save,
                               Select, Set, Shell, Show>;

/// Canonical one-line source form; parsing it yields an equal Statement.
std::string format(const Statement& statement);

std::string format_value(const Value& value);
std::string format_id_list(const SeriesSelector& selector);

}  // namespace tapps::ast
