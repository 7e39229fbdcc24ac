#include "tapps/bytecode.hpp"

#include "tapps/error.hpp"
#include "tapps/lexer.hpp"

namespace tapps {

std::string_view opcode_name(Opcode op) {
    switch (op) {
        case Opcode::Cast: return "cast";
        case Opcode::DelDataFrame: return "deldataframe";
        case Opcode::DelParam: return "delparam";
        case Opcode::Describe: return "describe";
        case Opcode::DuplicateFrame: return "duplicateframe";
        case Opcode::GreedySearch: return "greedysearch";
        case Opcode::IdSearch: return "idsearch";
        case Opcode::LoadCsv1: return "loadcsv1";
        case Opcode::LoadCsv2: return "loadcsv2";
        case Opcode::LoadSession: return "loadsession";
        case Opcode::MergeLabels1: return "mergelabels1";
        case Opcode::MergeLabels2: return "mergelabels2";
        case Opcode::MergeSeries: return "mergeseries";
        case Opcode::NewDataFrame: return "newdataframe";
        case Opcode::NewParam: return "newparam";
        case Opcode::PythonShell: return "pythonshell";
        case Opcode::RenameSeries: return "renameseries";
        case Opcode::RenameLabels: return "renamelabels";
        case Opcode::RunPlugin: return "runplugin";
        case Opcode::SaveCsv: return "savecsv";
        case Opcode::SaveSession: return "savesession";
        case Opcode::Set: return "set";
        case Opcode::Show: return "show";
    }
    return "?";
}

std::optional<Opcode> opcode_from_name(std::string_view name) {
    for (auto op : kAllOpcodes) {
        if (opcode_name(op) == name) return op;
    }
    return std::nullopt;
}

namespace {

std::optional<std::size_t> set_arity(const std::string& variable) {
    if (variable == "ocwd") return 1;
    if (variable == "displayast" || variable == "cwd" || variable == "separator" ||
        variable == "fillin" || variable == "rcwd") {
        return 2;
    }
    if (variable == "parameterdataframe") return 3;
    if (variable == "parameter") return 4;
    return std::nullopt;
}

std::optional<std::size_t> show_arity(const std::string& item) {
    if (item == "plugin") return 2;
    if (item == "asthistory" || item == "environment" || item == "history" ||
        item == "pluginlist" || item == "session" || item == "dataframe" || item == "parameter") {
        return 1;
    }
    return std::nullopt;
}

std::size_t fixed_arity(Opcode op) {
    switch (op) {
        case Opcode::PythonShell: return 0;
        case Opcode::DelDataFrame:
        case Opcode::DelParam:
        case Opcode::Describe:
        case Opcode::LoadSession:
        case Opcode::RunPlugin:
        case Opcode::SaveSession: return 1;
        case Opcode::DuplicateFrame:
        case Opcode::LoadCsv1:
        case Opcode::LoadCsv2:
        case Opcode::MergeLabels1:
        case Opcode::MergeLabels2:
        case Opcode::NewParam:
        case Opcode::SaveCsv: return 2;
        case Opcode::Cast:
        case Opcode::MergeSeries:
        case Opcode::NewDataFrame:
        case Opcode::RenameSeries:
        case Opcode::RenameLabels: return 3;
        case Opcode::GreedySearch: return 4;
        case Opcode::IdSearch: return 5;
        case Opcode::Set:
        case Opcode::Show: break;
    }
    return 0;
}

}  // namespace

bool arity_ok(Opcode opcode, const std::vector<std::string>& operands) {
    if (opcode == Opcode::Set || opcode == Opcode::Show) {
        if (operands.empty()) return false;
        auto n = opcode == Opcode::Set ? set_arity(operands[0]) : show_arity(operands[0]);
        return n && *n == operands.size();
    }
    if (opcode == Opcode::NewDataFrame && operands.size() == 3) {
        return operands[2] == "dataframe" || operands[2] == "results";
    }
    return operands.size() == fixed_arity(opcode);
}

Bytecode::Bytecode(Opcode opcode, std::vector<std::string> operands)
    : opcode_(opcode), operands_(std::move(operands)) {
    if (!arity_ok(opcode_, operands_)) {
        throw Error(ErrorKind::InvalidArgument, "bad operands for opcode '" +
                                                    std::string(opcode_name(opcode_)) + "'");
    }
}

namespace {

struct Compiler {
    Bytecode operator()(const ast::Cast& c) const {
        return {Opcode::Cast,
                {std::string(cast_type_name(c.type)), ast::format_id_list(c.series), c.frame}};
    }
    Bytecode operator()(const ast::Delete& d) const {
        return {d.target == ast::Delete::Target::DataFrame ? Opcode::DelDataFrame : Opcode::DelParam,
                {d.name}};
    }
    Bytecode operator()(const ast::Describe& d) const { return {Opcode::Describe, {d.frame}}; }
    Bytecode operator()(const ast::Load& l) const {
        switch (l.kind) {
            case ast::Load::Kind::Csv: return {Opcode::LoadCsv1, {l.file, l.frame}};
            case ast::Load::Kind::NoHeaderCsv: return {Opcode::LoadCsv2, {l.file, l.frame}};
            case ast::Load::Kind::Session: break;
        }
        return {Opcode::LoadSession, {l.file}};
    }
    Bytecode operator()(const ast::Merge& m) const {
        switch (m.kind) {
            case ast::Merge::Kind::Series:
                return {Opcode::MergeSeries,
                        {ast::format_id_list(SeriesSelector{false, m.series}), m.source,
                         m.destination}};
            case ast::Merge::Kind::Labels:
                return {Opcode::MergeLabels1, {m.source, m.destination}};
            case ast::Merge::Kind::ReplaceLabels: break;
        }
        return {Opcode::MergeLabels2, {m.source, m.destination}};
    }
    Bytecode operator()(const ast::New& n) const {
        if (n.kind == ast::New::Kind::Parameter) return {Opcode::NewParam, {n.subject, n.target}};
        return {Opcode::NewDataFrame,
                {n.subject, n.target,
                 n.location == ast::PLocation::Results ? "results" : "dataframe"}};
    }
    Bytecode operator()(const ast::Rename& r) const {
        return {r.axis == Axis::Series ? Opcode::RenameSeries : Opcode::RenameLabels,
                {r.frame, r.from, r.to}};
    }
    Bytecode operator()(const ast::RunPlugin& r) const {
        return {Opcode::RunPlugin, {r.parameter_set}};
    }
    Bytecode operator()(const ast::Save& s) const {
        if (s.kind == ast::Save::Kind::Session) return {Opcode::SaveSession, {s.file}};
        return {Opcode::SaveCsv, {s.frame, s.file}};
    }
    Bytecode operator()(const ast::Select& s) const {
        if (!s.where) return {Opcode::DuplicateFrame, {s.source, s.destination}};
        const auto& w = *s.where;
        std::string op(binop_symbol(w.op));
        if (!w.series) {
            return {Opcode::GreedySearch,
                    {s.source, s.destination, op, ast::format_value(w.value)}};
        }
        return {Opcode::IdSearch,
                {s.source, s.destination, *w.series, op, ast::format_value(w.value)}};
    }
    Bytecode operator()(const ast::Set& s) const {
        using T = ast::Set::Target;
        switch (s.target) {
            case T::DisplayAst: return {Opcode::Set, {"displayast", s.argument}};
            case T::Cwd: return {Opcode::Set, {"cwd", s.argument}};
            case T::Separator: return {Opcode::Set, {"separator", s.argument}};
            case T::Fillin: return {Opcode::Set, {"fillin", ast::format_value(s.fillin)}};
            case T::Parameter:
                return {Opcode::Set, {"parameter", s.key, s.parameter_set, s.argument}};
            case T::ParameterDataFrame:
                return {Opcode::Set, {"parameterdataframe", s.parameter_set, s.argument}};
            case T::Rcwd: return {Opcode::Set, {"rcwd", s.argument}};
            case T::Ocwd: break;
        }
        return {Opcode::Set, {"ocwd"}};
    }
    Bytecode operator()(const ast::Shell&) const { return {Opcode::PythonShell}; }
    Bytecode operator()(const ast::Show& s) const {
        using T = ast::Show::Target;
        switch (s.target) {
            case T::AstHistory: return {Opcode::Show, {"asthistory"}};
            case T::Environment: return {Opcode::Show, {"environment"}};
            case T::History: return {Opcode::Show, {"history"}};
            case T::PluginList: return {Opcode::Show, {"pluginlist"}};
            case T::Plugin: return {Opcode::Show, {"plugin", s.plugin}};
            case T::Session: return {Opcode::Show, {"session"}};
            case T::DataFrame: return {Opcode::Show, {"dataframe"}};
            case T::Parameter: break;
        }
        return {Opcode::Show, {"parameter"}};
    }
};

bool needs_quotes(const std::string& operand) {
    if (operand.empty()) return true;
    for (char c : operand) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '"' || c == '\\') return true;
    }
    return false;
}

}  // namespace

std::vector<Bytecode> compile(const ast::Statement& statement) {
    return {std::visit(Compiler{}, statement)};
}

CellValue value_operand(const std::string& operand) {
    if (!operand.empty() && (operand.front() == '"' || operand.front() == '\'')) {
        auto tokens = tokenize(operand);
        if (tokens.size() == 1 && tokens[0].kind == TokenKind::String) return CellValue(tokens[0].lexeme);
    }
    return cell_from_literal(operand);
}

std::string render(const Bytecode& bytecode) {
    std::string out(opcode_name(bytecode.opcode()));
    for (const auto& operand : bytecode.operands()) {
        out.push_back(' ');
        out += needs_quotes(operand) ? quote(operand) : operand;
    }
    return out;
}

}  // namespace tapps
