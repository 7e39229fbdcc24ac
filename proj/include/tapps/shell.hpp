#pragma once

#include "tapps/session.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace tapps {

struct ShellConfig {
    std::optional<std::filesystem::path> script;  // absent: interactive
    std::filesystem::path plugins_dir = "plugins";
    std::filesystem::path initial_cwd;  // empty: the process working directory
};

/// Outcome of one submitted statement.
struct StatementOutcome {
    bool ok = true;
    std::string ast;     // formatted AST when display_ast is on
    std::string output;  // listing text, possibly empty
    std::string error;   // one line when !ok
};

/// Parse -> compile -> execute for single statements, with history kept in
/// the session.
class Interpreter {
public:
    explicit Interpreter(Environment env, Session session = {});

    Session& session() noexcept { return session_; }
    const Session& session() const noexcept { return session_; }
    Environment& environment() noexcept { return env_; }
    const Environment& environment() const noexcept { return env_; }

    /// Number shown in the next prompt: history size + 1.
    int next_index() const noexcept { return static_cast<int>(session_.history.size()) + 1; }

    /// Records the statement in history, then runs it. Errors are returned in
    /// the outcome, never thrown.
    StatementOutcome submit(std::string_view statement);

private:
    Environment env_;
    Session session_;
};

/// Interpreter rooted at cfg.initial_cwd with plugins discovered from
/// cfg.plugins_dir. Problems with the plugins directory are reported to err.
Interpreter make_interpreter(const ShellConfig& cfg, std::ostream& err);

/// Blank lines and '#' comments are not statements.
bool is_ignorable(std::string_view line);
/// "exit" or "quit", any case, surrounding blanks allowed.
bool is_exit_command(std::string_view line);

std::string prompt(int index);

/// Prompts with "TAPPS: n> " and runs each line until exit or end of input.
int repl_loop(Interpreter& interpreter, std::istream& in, std::ostream& out, std::ostream& err);

/// Preprocesses the script and runs every statement, echoing each one after
/// its prompt. Returns 0 when every statement succeeded, 1 otherwise.
/// Include errors abort before anything runs.
int run_script(Interpreter& interpreter, const std::filesystem::path& script, std::ostream& out,
               std::ostream& err);

}  // namespace tapps
