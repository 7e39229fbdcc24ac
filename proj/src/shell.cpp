#include "tapps/shell.hpp"

#include "tapps/bytecode.hpp"
#include "tapps/error.hpp"
#include "tapps/parser.hpp"
#include "tapps/preprocessor.hpp"
#include "tapps/vm.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

namespace fs = std::filesystem;

namespace tapps {

namespace {

std::string_view trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string error_line(const Error& e) {
    return "Error (" + std::string(error_kind_name(e.kind())) + "): " + e.what();
}

void print_outcome(const StatementOutcome& outcome, std::ostream& out, std::ostream& err,
                   const std::string& where) {
    if (!outcome.ast.empty()) out << outcome.ast << '\n';
    if (!outcome.output.empty()) {
        out << outcome.output;
        if (outcome.output.back() != '\n') out << '\n';
    }
    if (!outcome.ok) err << where << outcome.error << '\n';
}

}  // namespace

Interpreter::Interpreter(Environment env, Session session)
    : env_(std::move(env)), session_(std::move(session)) {}

StatementOutcome Interpreter::submit(std::string_view statement) {
    const std::string text(trim(statement));
    const int index = next_index();
    session_.history.push_back({index, text});

    StatementOutcome outcome;
    ast::Statement parsed;
    try {
        parsed = parse(text);
    } catch (const Error& e) {
        session_.ast_history.push_back({index, "<parse error>"});
        outcome.ok = false;
        outcome.error = error_line(e);
        return outcome;
    }
    const auto formatted = ast::format(parsed);
    session_.ast_history.push_back({index, formatted});
    if (env_.display_ast) outcome.ast = "AST: " + formatted;

    try {
        for (const auto& bytecode : compile(parsed)) {
            auto result = execute(bytecode, session_, env_);
            outcome.output += result.output;
        }
    } catch (const Error& e) {
        outcome.ok = false;
        outcome.error = error_line(e);
    } catch (const std::exception& e) {
        outcome.ok = false;
        outcome.error = std::string("Error: ") + e.what();
    }
    return outcome;
}

Interpreter make_interpreter(const ShellConfig& cfg, std::ostream& err) {
    fs::path cwd = cfg.initial_cwd.empty() ? fs::current_path() : cfg.initial_cwd;
    std::error_code ec;
    if (!fs::is_directory(cwd, ec)) {
        throw Error(ErrorKind::FileNotFound, "no such directory '" + cwd.string() + "'");
    }
    Interpreter interpreter(Environment::at(cwd));
    if (!fs::is_directory(cfg.plugins_dir, ec)) {
        err << "warning: plugins directory '" << cfg.plugins_dir.string()
            << "' not found; no plugins loaded\n";
        return interpreter;
    }
    install_plugins(interpreter.session(),
                    discover_plugins(cfg.plugins_dir, PluginRegistry::builtin()));
    return interpreter;
}

bool is_ignorable(std::string_view line) {
    auto t = trim(line);
    return t.empty() || t.front() == '#';
}

bool is_exit_command(std::string_view line) {
    std::string t(trim(line));
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    return t == "exit" || t == "quit";
}

std::string prompt(int index) { return "TAPPS: " + std::to_string(index) + "> "; }

int repl_loop(Interpreter& interpreter, std::istream& in, std::ostream& out, std::ostream& err) {
    std::string line;
    while (true) {
        out << prompt(interpreter.next_index()) << std::flush;
        if (!std::getline(in, line)) {
            out << '\n';
            return 0;
        }
        if (is_ignorable(line)) continue;
        if (is_exit_command(line)) return 0;
        auto outcome = interpreter.submit(line);
        print_outcome(outcome, out, err, "");
        out << std::flush;
    }
}

int run_script(Interpreter& interpreter, const fs::path& script, std::ostream& out,
               std::ostream& err) {
    ScriptSource source;
    try {
        source = preprocess(script);
    } catch (const Error& e) {
        err << error_line(e) << '\n';
        return 1;
    }
    int status = 0;
    for (const auto& line : source.lines) {
        if (is_ignorable(line.text)) continue;
        if (is_exit_command(line.text)) break;
        out << prompt(interpreter.next_index()) << trim(line.text) << '\n';
        auto outcome = interpreter.submit(line.text);
        print_outcome(outcome, out, err,
                      line.file.filename().string() + ":" + std::to_string(line.line) + ": ");
        if (!outcome.ok) status = 1;
    }
    out << std::flush;
    return status;
}

}  // namespace tapps
