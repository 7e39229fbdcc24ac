#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "tapps/shell.hpp"

#include <cstdlib>
#include <sstream>

#include <sys/wait.h>

using namespace tapps;
using testing::TempDir;

namespace {

struct Run {
    int status = -1;
    std::string out, err;
};

Interpreter fresh(const TempDir& dir) {
    return Interpreter(Environment::at(dir.path()), testing::session_with_plugins());
}

Run repl(Interpreter& interp, const std::string& input) {
    std::istringstream in(input);
    std::ostringstream out, err;
    Run r;
    r.status = repl_loop(interp, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

Run script(Interpreter& interp, const std::filesystem::path& path) {
    std::ostringstream out, err;
    Run r;
    r.status = run_script(interp, path, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') out += "'\\''";
        else out.push_back(c);
    }
    return out + "'";
}

// Runs the command-line binary with stdin from a file.
Run cli(const TempDir& dir, const std::string& args, const std::string& input = "") {
    auto in = dir.write("cli.in", input);
    std::string cmd = "cd " + shell_quote(dir.path().string()) + " && " + shell_quote(TAPPS_CLI) + " " +
                      args + " < " + shell_quote(in.string()) + " > cli.out 2> cli.err";
    int raw = std::system(cmd.c_str());
    Run r;
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = testing::slurp(dir / "cli.out");
    r.err = testing::slurp(dir / "cli.err");
    return r;
}

}  // namespace

TEST_CASE("helpers") {
    CHECK(prompt(3) == "TAPPS: 3> ");
    CHECK(is_ignorable(""));
    CHECK(is_ignorable("   # comment"));
    CHECK_FALSE(is_ignorable("show dataframe"));
    CHECK(is_exit_command(" EXIT "));
    CHECK(is_exit_command("quit"));
    CHECK_FALSE(is_exit_command("exit now"));
}

TEST_CASE("prompts count statements, including failed ones") {
    TempDir dir;
    auto interp = fresh(dir);
    auto r = repl(interp, "show dataframe\n\n# skip\nselect banana\nshow session\nexit\nshow dataframe\n");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "TAPPS: 1> Current Dataframe(s) (n = 0):\n"
          "TAPPS: 2> TAPPS: 2> TAPPS: 2> TAPPS: 3> "
          "Dataframe(s) (n = 0):\nParameter Set(s) (n = 0):\n"
          "Loaded plugin(s) (n = 2): summarize, template\nFailed plugin(s) (n = 0):\n"
          "History entries: 3\n"
          "TAPPS: 4> ");
    CHECK(r.err.rfind("Error (ParseError): ", 0) == 0);
    REQUIRE(interp.session().history.size() == 3);
    CHECK(interp.session().history[1] == HistoryEntry{2, "select banana"});
    CHECK(interp.session().ast_history[1] == HistoryEntry{2, "<parse error>"});
    CHECK(interp.session().ast_history[2] == HistoryEntry{3, "show session"});
}

TEST_CASE("end of input ends the loop") {
    TempDir dir;
    auto interp = fresh(dir);
    auto r = repl(interp, "show history");
    CHECK(r.status == 0);
    CHECK(r.out == "TAPPS: 1> 1: show history\nTAPPS: 2> \n");
}

TEST_CASE("display of the AST") {
    TempDir dir;
    auto interp = fresh(dir);
    auto r = repl(interp, "set displayast true\nSHOW   plugin   LIST\n");
    CHECK(r.out.find("AST: show plugin list\nLoaded plugin(s)") != std::string::npos);
    CHECK(r.out.find("AST: set displayast true") == std::string::npos);
}

TEST_CASE("runtime errors do not stop the loop") {
    TempDir dir;
    auto interp = fresh(dir);
    auto r = repl(interp, "describe Nope\nshow dataframe\n");
    CHECK(r.err == "Error (UnknownDataFrame): no data frame named 'Nope'\n");
    CHECK(r.out.find("TAPPS: 2> Current Dataframe(s) (n = 0):") != std::string::npos);
}

TEST_CASE("scripts echo statements and report failures with their line") {
    TempDir dir;
    dir.write("p.csv", "a\n1\n");
    auto path = dir.write("s.tapps", "# header\nload csv p.csv as P\n\ndescribe Q\nshow dataframe\n");
    auto interp = fresh(dir);
    auto r = script(interp, path);
    CHECK(r.status == 1);
    CHECK(r.out.rfind("TAPPS: 1> load csv p.csv as P\nTAPPS: 2> describe Q\nTAPPS: 3> show dataframe\n", 0) == 0);
    CHECK(r.err == "s.tapps:4: Error (UnknownDataFrame): no data frame named 'Q'\n");

    auto ok = dir.write("ok.tapps", "load csv p.csv as P2\nquit\ndescribe Q\n");
    auto interp2 = fresh(dir);
    auto r2 = script(interp2, ok);
    CHECK(r2.status == 0);
    CHECK(interp2.session().history.size() == 1);
}

TEST_CASE("include errors stop a script before it runs") {
    TempDir dir;
    dir.write("a.tapps", "load csv p.csv as P\n@include b.tapps\n");
    dir.write("b.tapps", "@include a.tapps\n");
    dir.write("p.csv", "a\n1\n");
    auto interp = fresh(dir);
    auto r = script(interp, dir / "a.tapps");
    CHECK(r.status == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("Error (CyclicInclude)") != std::string::npos);
    CHECK(r.err.find("a.tapps") != std::string::npos);
    CHECK(r.err.find("b.tapps") != std::string::npos);
    CHECK(interp.session().history.empty());
    CHECK(interp.session().mdf.size() == 0);
}

TEST_CASE("make_interpreter") {
    TempDir dir;
    std::ostringstream err;
    auto interp = make_interpreter({std::nullopt, TAPPS_PLUGINS_DIR, dir.path()}, err);
    CHECK(err.str().empty());
    CHECK(interp.session().plugins_loaded == std::vector<std::string>{"summarize", "template"});
    CHECK(interp.environment().cwd == dir.path());
    auto bare = make_interpreter({std::nullopt, dir / "none", dir.path()}, err);
    CHECK(err.str().find("warning: plugins directory") == 0);
    CHECK(bare.session().plugins_loaded.empty());
}

TEST_CASE("command-line binary") {
    TempDir dir;
    dir.write("p.csv", "a\n1\n");
    auto r = cli(dir, "--plugins " + shell_quote(TAPPS_PLUGINS_DIR), "load csv p.csv as P\nshow dataframe\n");
    CHECK(r.status == 0);
    CHECK(r.out.find("TAPPS: 1> TAPPS: 2> Current Dataframe(s) (n = 1):") == 0);

    dir.write("s.tapps", "load csv p.csv as P\nsave dataframe P as csv copy.csv\n");
    auto s = cli(dir, "s.tapps");
    CHECK(s.status == 0);
    CHECK(testing::slurp(dir / "copy.csv") == "a\n1\n");

    dir.write("bad.tapps", "describe Nope\n");
    CHECK(cli(dir, "bad.tapps").status == 1);
    auto missing = cli(dir, "--cwd /no/such/dir");
    CHECK(missing.status == 2);
    CHECK(missing.err.find("no such directory") != std::string::npos);

    std::filesystem::create_directories(dir / "work");
    dir.write("work/w.csv", "x\n5\n");
    auto moved = cli(dir, "--cwd work", "load csv w.csv as W\ndescribe W\n");
    CHECK(moved.err.empty());
    CHECK(moved.out.find("Describing Dataframe - W") != std::string::npos);

    auto shell = cli(dir, "", "pythonshell\n");
    CHECK(shell.err.find("Error (SpawnFailure)") != std::string::npos);
}
