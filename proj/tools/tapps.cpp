// tapps [script] [--plugins DIR] [--cwd DIR]

#include "tapps/error.hpp"
#include "tapps/shell.hpp"

#include <CLI11.hpp>

#include <iostream>

#include <unistd.h>

int main(int argc, char** argv) {
    CLI::App app{"TAPPS command-line interpreter"};
    std::string script;
    std::string plugins;
    std::string cwd;
    app.add_option("script", script, "Script file to run; interactive mode when omitted");
    app.add_option("--plugins", plugins, "Plugins directory (default: ./plugins)");
    app.add_option("--cwd", cwd, "Initial working directory");
    CLI11_PARSE(app, argc, argv);

    tapps::ShellConfig cfg;
    if (!script.empty()) cfg.script = script;
    if (!plugins.empty()) {
        cfg.plugins_dir = plugins;
    } else {
        std::error_code ec;
        if (!std::filesystem::is_directory(cfg.plugins_dir, ec)) {
            cfg.plugins_dir = TAPPS_DEFAULT_PLUGINS_DIR;
        }
    }
    cfg.initial_cwd = cwd;

    try {
        auto interpreter = tapps::make_interpreter(cfg, std::cerr);
        if (cfg.script) {
            return tapps::run_script(interpreter, *cfg.script, std::cout, std::cerr);
        }
        interpreter.environment().interactive = isatty(STDIN_FILENO) != 0;
        return tapps::repl_loop(interpreter, std::cin, std::cout, std::cerr);
    } catch (const tapps::Error& e) {
        std::cerr << "tapps: " << e.what() << '\n';
        return 2;
    }
}
