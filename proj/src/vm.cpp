#include "tapps/vm.hpp"

#include "tapps/csv.hpp"
#include "tapps/error.hpp"
#include "tapps/frame_ops.hpp"
#include "tapps/parser.hpp"
#include "tapps/session_file.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace tapps {

namespace {

template <typename S>
auto& require_parameter_set(S& session, const std::string& name) {
    auto it = session.parameters.find(name);
    if (it == session.parameters.end()) {
        throw Error(ErrorKind::UnknownParameterSet, "no parameter set named '" + name + "'");
    }
    return it->second;
}

void require_new_frame_name(const Session& session, const std::string& name) {
    if (session.mdf.contains(name)) {
        throw Error(ErrorKind::DuplicateFrameName, "data frame '" + name + "' already exists");
    }
}

BinOp operator_operand(const std::string& symbol) {
    if (auto op = binop_from_symbol(symbol)) return *op;
    throw Error(ErrorKind::InvalidArgument, "unknown comparison operator '" + symbol + "'");
}

std::string join(const std::vector<std::string>& items, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

fs::path existing_directory(const fs::path& path) {
    std::error_code ec;
    if (!fs::is_directory(path, ec)) {
        throw Error(ErrorKind::FileNotFound, "no such directory '" + path.string() + "'");
    }
    return fs::weakly_canonical(path);
}

ExecResult exec_set(const std::vector<std::string>& ops, Session& session, Environment& env) {
    const auto& variable = ops[0];
    if (variable == "displayast") {
        std::string v = ops[1];
        std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
        if (v != "true" && v != "false") {
            throw Error(ErrorKind::InvalidArgument, "displayast must be true or false, got '" + ops[1] + "'");
        }
        env.display_ast = v == "true";
    } else if (variable == "cwd" || variable == "rcwd") {
        env.cwd = existing_directory(env.resolve(ops[1]));
    } else if (variable == "ocwd") {
        env.cwd = env.starting_cwd;
    } else if (variable == "separator") {
        if (ops[1].size() != 1) {
            throw Error(ErrorKind::InvalidArgument, "separator must be a single character");
        }
        env.separator = ops[1][0];
    } else if (variable == "fillin") {
        env.fillin = value_operand(ops[1]);
    } else if (variable == "parameter") {
        return exec_set_parameter(session, ops[1], ops[2], ops[3]);
    } else if (variable == "parameterdataframe") {
        return exec_set_parameter_dataframe(session, ops[1], ops[2]);
    } else {
        throw Error(ErrorKind::InvalidArgument, "unknown set variable '" + variable + "'");
    }
    return {"", true};
}

std::string show_environment(const Environment& env) {
    std::ostringstream os;
    os << "Current Working Directory: " << env.cwd.string() << '\n'
       << "Starting Working Directory: " << env.starting_cwd.string() << '\n'
       << "Separator: " << env.separator << '\n'
       << "Fillin: " << (env.fillin ? env.fillin->render() : "(not set)") << '\n'
       << "Display AST: " << (env.display_ast ? "true" : "false") << '\n';
    return os.str();
}

std::string show_history(const std::vector<HistoryEntry>& entries) {
    std::string out;
    for (const auto& e : entries) out += std::to_string(e.index) + ": " + e.text + "\n";
    return out;
}

std::string counted_list(const char* title, const std::vector<std::string>& names) {
    std::string out = std::string(title) + " (n = " + std::to_string(names.size()) + "):";
    if (!names.empty()) out += " " + join(names, ", ");
    return out + "\n";
}

std::string show_plugin_list(const Session& session) {
    std::ostringstream os;
    os << counted_list("Loaded plugin(s)", session.plugins_loaded);
    os << "Failed plugin(s) (n = " << session.plugins_load_failed.size() << "):";
    for (const auto& f : session.plugins_load_failed) os << "\n  " << f.name << ": " << f.reason;
    os << '\n';
    return os.str();
}

std::string show_plugin(const Session& session, const std::string& name) {
    auto it = session.plugin_registry.find(name);
    if (it == session.plugin_registry.end()) {
        throw Error(ErrorKind::UnknownPlugin, "no loaded plugin named '" + name + "'");
    }
    const auto& m = it->second.manifest;
    std::ostringstream os;
    os << "Plugin Name: " << m.plugin_name << '\n'
       << "Release: " << m.release << '\n'
       << "Description: " << m.description << '\n'
       << "Folder: " << it->second.folder.filename().string() << '\n';
    if (!m.instructions.empty()) os << "Instructions:\n" << m.instructions;
    return os.str();
}

std::string describe_slot(const std::optional<DataFrame>& frame) {
    if (!frame) return "(none)";
    return frame->name() + " (" + std::to_string(frame->series_count()) + " series, " +
           std::to_string(frame->row_count()) + " labels)";
}

std::string show_parameters(const Session& session) {
    std::ostringstream os;
    os << "Parameter Set(s) (n = " << session.parameters.size() << "):\n";
    for (const auto& [name, p] : session.parameters) {
        os << '\n' << "Parameter Set: " << name << '\n';
        os << "plugin_name: " << p.plugin_name() << '\n';
        if (p.analysis_name) os << "analysis_name: " << *p.analysis_name << '\n';
        if (p.analytical_method) os << "analytical_method: " << *p.analytical_method << '\n';
        if (p.narrative) os << "narrative: " << *p.narrative << '\n';
        for (const auto& [k, v] : p.options) os << k << ": " << v << '\n';
        os << "input dataframe: " << describe_slot(p.input_frame) << '\n';
        os << "results dataframe: " << describe_slot(p.results_frame) << '\n';
    }
    return os.str();
}

std::string show_session(const Session& session) {
    std::vector<std::string> frames, sets, failed;
    for (const auto& df : session.mdf.frames()) frames.push_back(df.name());
    for (const auto& [name, p] : session.parameters) sets.push_back(name);
    for (const auto& f : session.plugins_load_failed) failed.push_back(f.name);
    return counted_list("Dataframe(s)", frames) + counted_list("Parameter Set(s)", sets) +
           counted_list("Loaded plugin(s)", session.plugins_loaded) +
           counted_list("Failed plugin(s)", failed) +
           "History entries: " + std::to_string(session.history.size()) + "\n";
}

}  // namespace

std::string render_dataframe_listing(const MultiDataFrame& mdf) {
    std::string out = "Current Dataframe(s) (n = " + std::to_string(mdf.size()) + "):\n";
    for (const auto& df : mdf.frames()) {
        out += '\n';
        out += frame_header(df);
    }
    return out;
}

ExecResult exec_set_parameter(Session& session, const std::string& key,
                              const std::string& param_name, const std::string& value) {
    auto& p = require_parameter_set(session, param_name);
    if (key == "analysis_name") {
        p.analysis_name = value;
    } else if (key == "analytical_method") {
        p.analytical_method = value;
    } else if (key == "narrative") {
        p.narrative = value;
    } else if (key == "plugin_name") {
        throw Error(ErrorKind::InvalidArgument, "plugin_name of a parameter set cannot be changed");
    } else if (key == "results") {
        throw Error(ErrorKind::InvalidArgument, "the results data frame is set by runplugin");
    } else {
        p.options[key] = value;
    }
    return {"", true};
}

ExecResult exec_set_parameter_dataframe(Session& session, const std::string& param_name,
                                        const std::string& frame_name) {
    auto& p = require_parameter_set(session, param_name);
    p.input_frame = session.mdf.get(frame_name);
    return {"", true};
}

ExecResult exec_show(const Session& session, const Environment& env,
                     const std::vector<std::string>& item) {
    const auto& what = item.at(0);
    if (what == "asthistory") return {show_history(session.ast_history), false};
    if (what == "environment") return {show_environment(env), false};
    if (what == "history") return {show_history(session.history), false};
    if (what == "pluginlist") return {show_plugin_list(session), false};
    if (what == "plugin") return {show_plugin(session, item.at(1)), false};
    if (what == "session") return {show_session(session), false};
    if (what == "dataframe") return {render_dataframe_listing(session.mdf), false};
    if (what == "parameter") return {show_parameters(session), false};
    throw Error(ErrorKind::InvalidArgument, "unknown show item '" + what + "'");
}

ExecResult exec_new_dataframe(Session& session, const std::string& new_name,
                              const std::string& param_name, ast::PLocation location) {
    const auto& p = require_parameter_set(session, param_name);
    const bool results = location == ast::PLocation::Results;
    const auto& slot = results ? p.results_frame : p.input_frame;
    if (!slot) {
        throw Error(ErrorKind::EmptySlot,
                    "parameter set '" + param_name + "' has no " +
                        (results ? "results (run the plugin first)" : "input data frame"));
    }
    require_new_frame_name(session, new_name);
    session.mdf.attach(new_name, select_all(*slot, new_name));
    return {"", true};
}

ExecResult exec_shell(const Environment& env) {
    if (!env.interactive || !isatty(STDIN_FILENO)) {
        throw Error(ErrorKind::SpawnFailure, "pythonshell needs an interactive terminal");
    }
    const char* shell = std::getenv("SHELL");
    if (!shell || !*shell) shell = "/bin/sh";
    pid_t pid = fork();
    if (pid < 0) {
        throw Error(ErrorKind::SpawnFailure, std::string("cannot start a shell: ") + std::strerror(errno));
    }
    if (pid == 0) {
        if (chdir(env.cwd.c_str()) != 0) _exit(127);
        execl(shell, shell, static_cast<char*>(nullptr));
        _exit(127);
    }
    int status = 0;
    while (waitpid(pid, &status, 0) < 0 && errno == EINTR) {
    }
    if (WIFEXITED(status) && WEXITSTATUS(status) == 127) {
        throw Error(ErrorKind::SpawnFailure, std::string("cannot start '") + shell + "'");
    }
    return {"", false};
}

ExecResult execute(const Bytecode& bytecode, Session& session, Environment& env) {
    const auto& ops = bytecode.operands();
    switch (bytecode.opcode()) {
        case Opcode::Cast: {
            auto type = cast_type_from_name(ops[0]);
            if (!type) throw Error(ErrorKind::InvalidArgument, "unknown data type '" + ops[0] + "'");
            DataFrame copy = session.mdf.get(ops[2]);
            cast_values(copy, parse_id_list(ops[1]), *type);
            session.mdf.replace(ops[2], std::move(copy));
            return {"", true};
        }
        case Opcode::DelDataFrame:
            session.mdf.remove(ops[0]);
            return {"", true};
        case Opcode::DelParam:
            require_parameter_set(session, ops[0]);
            session.parameters.erase(ops[0]);
            return {"", true};
        case Opcode::Describe:
            return {describe(session.mdf.get(ops[0])).render(), false};
        case Opcode::DuplicateFrame: {
            const auto& src = session.mdf.get(ops[0]);
            require_new_frame_name(session, ops[1]);
            session.mdf.attach(ops[1], select_all(src, ops[1]));
            return {"", true};
        }
        case Opcode::GreedySearch: {
            const auto& src = session.mdf.get(ops[0]);
            require_new_frame_name(session, ops[1]);
            auto result = select_greedy(src, ops[1], operator_operand(ops[2]), value_operand(ops[3]));
            session.mdf.attach(ops[1], std::move(result));
            return {"", true};
        }
        case Opcode::IdSearch: {
            const auto& src = session.mdf.get(ops[0]);
            require_new_frame_name(session, ops[1]);
            auto result = select_by_series(src, ops[1], ops[2], operator_operand(ops[3]),
                                           value_operand(ops[4]));
            session.mdf.attach(ops[1], std::move(result));
            return {"", true};
        }
        case Opcode::LoadCsv1:
        case Opcode::LoadCsv2: {
            require_new_frame_name(session, ops[1]);
            auto df = load_csv(ops[0], bytecode.opcode() == Opcode::LoadCsv1, env, ops[1]);
            session.mdf.attach(ops[1], std::move(df));
            return {"", true};
        }
        case Opcode::LoadSession:
            load_session(ops[0], session, env);
            return {"", true};
        case Opcode::MergeLabels1:
        case Opcode::MergeLabels2: {
            const auto& src = session.mdf.get(ops[0]);
            DataFrame dst = session.mdf.get(ops[1]);
            merge_labels(src, dst, bytecode.opcode() == Opcode::MergeLabels2);
            session.mdf.replace(ops[1], std::move(dst));
            return {"", true};
        }
        case Opcode::MergeSeries: {
            auto selector = parse_id_list(ops[0]);
            const auto& src = session.mdf.get(ops[1]);
            DataFrame dst = session.mdf.get(ops[2]);
            merge_series(selector.all ? src.series_names() : selector.names, src, dst);
            session.mdf.replace(ops[2], std::move(dst));
            return {"", true};
        }
        case Opcode::NewDataFrame:
            return exec_new_dataframe(session, ops[0], ops[1],
                                      ops[2] == "results" ? ast::PLocation::Results
                                                          : ast::PLocation::DataFrame);
        case Opcode::NewParam:
            new_parameter_set(session, ops[0], ops[1]);
            return {"", true};
        case Opcode::PythonShell:
            return exec_shell(env);
        case Opcode::RenameSeries:
        case Opcode::RenameLabels: {
            DataFrame copy = session.mdf.get(ops[0]);
            rename(copy, bytecode.opcode() == Opcode::RenameSeries ? Axis::Series : Axis::Labels,
                   ops[1], ops[2]);
            session.mdf.replace(ops[0], std::move(copy));
            return {"", true};
        }
        case Opcode::RunPlugin:
            return run_plugin(session, ops[0]);
        case Opcode::SaveCsv:
            save_csv(session.mdf.get(ops[0]), ops[1], env);
            return {"", false};
        case Opcode::SaveSession:
            save_session(ops[0], session, env);
            return {"", false};
        case Opcode::Set:
            return exec_set(ops, session, env);
        case Opcode::Show:
            return exec_show(session, env, ops);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown opcode");
}

}  // namespace tapps
