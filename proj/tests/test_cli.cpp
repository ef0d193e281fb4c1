// End-to-end checks of the installed binary; the path comes from the
// KAO_CLI_PATH environment variable set by the test harness.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("KAO_CLI_PATH");
    REQUIRE_MESSAGE(p != nullptr, "KAO_CLI_PATH not set");
    return p;
}

RunResult run(const std::string& args) {
    std::string out_file =
        std::string(std::tmpnam(nullptr)) + "_kao_cli_out.txt";
    std::string cmd =
        cli_path() + " " + args + " > " + out_file + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream in(out_file);
    std::stringstream buf;
    buf << in.rdbuf();
    std::remove(out_file.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, buf.str()};
}

}  // namespace

TEST_CASE("decide exit codes and output") {
    RunResult eq = run("decide 'x + x' 'x'");
    CHECK(eq.exit_code == 0);
    CHECK(eq.out == "equivalent\n");

    RunResult ne = run("decide '[a /\\ b]' '[a];[b]'");
    CHECK(ne.exit_code == 1);
    CHECK(ne.out == "inequivalent: {a} {b}\n");

    RunResult antinomy = run("decide '[p];x;[!p]' '0'");
    CHECK(antinomy.exit_code == 1);
    CHECK(antinomy.out == "inequivalent: {p} x {}\n");
}

TEST_CASE("json output parses") {
    RunResult r = run("decide --json '[a /\\ b]' '[a];[b]'");
    CHECK(r.exit_code == 1);
    auto obj = nlohmann::json::parse(r.out);
    CHECK(obj.at("result") == "inequivalent");
    CHECK(obj.at("witness") == "{a} {b}");

    RunResult e = run("decide --json 'x' 'x + 0'");
    CHECK(e.exit_code == 0);
    CHECK(nlohmann::json::parse(e.out).at("result") == "equivalent");
}

TEST_CASE("explicit signature flags override inference") {
    // y is unused but declared, so the automaton has an extra letter;
    // the verdict must not change
    RunResult r = run("decide --obs a,b --act x,y '[a];x' '[a];x + 0'");
    CHECK(r.exit_code == 0);
    // an undeclared symbol is an error once flags pin the signature
    CHECK(run("decide --act x '[a];x' 'z'").exit_code == 2);
}

TEST_CASE("derive prints the tables") {
    RunResult r = run("derive --obs a --act x '[a] ; x'");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "epsilon: 0\n"
          "zeta {}: {}\n"
          "zeta {a}: {1 ; x}\n"
          "delta x: {}\n");
}

TEST_CASE("automaton dot export") {
    RunResult r = run("automaton --dot '[a];x'");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("digraph nda {") == 0);
    CHECK(r.out.find("doublecircle") != std::string::npos);

    std::string out_file = std::string(std::tmpnam(nullptr)) + "_kao.dot";
    RunResult f = run("automaton --dot -o " + out_file + " '[a];x'");
    CHECK(f.exit_code == 0);
    std::ifstream in(out_file);
    std::stringstream buf;
    buf << in.rdbuf();
    std::remove(out_file.c_str());
    CHECK(buf.str() == r.out);
}

TEST_CASE("hat prints and checks") {
    RunResult r = run("hat --obs a,b '[a]'");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "[a /\\ !b] + [a /\\ b]\n");
    // inference only sees observable a, so [a] is already atomic
    RunResult plain = run("hat '[a]'");
    CHECK(plain.out == "[a]\n");
    RunResult checked = run("hat --check '[a];[b]'");
    CHECK(checked.exit_code == 0);
    CHECK(checked.out.find("atomic: yes") != std::string::npos);
    CHECK(checked.out.find("equivalent: yes") != std::string::npos);
}

TEST_CASE("oracle lists bounded closed-language words") {
    RunResult r = run("oracle --max-len 2 --obs p '([p])*'");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "\n{p}\n{p} {p}\n");
}

TEST_CASE("crossval is reproducible") {
    RunResult a = run("crossval --seed 3 --pairs 10 --size 5");
    RunResult b = run("crossval --seed 3 --pairs 10 --size 5");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    std::istringstream lines(a.out);
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) {
        CHECK(nlohmann::json::parse(line).at("ok") == true);
        ++n;
    }
    CHECK(n == 10);
}

TEST_CASE("errors exit with code 2") {
    CHECK(run("decide 'x +' 'x'").exit_code == 2);
    CHECK(run("decide '[x' 'x'").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("decide 'x'").exit_code == 2);  // missing operand
}

TEST_CASE("repeated invocations are byte-identical") {
    RunResult a = run("decide --json '[a /\\ b]' '[a];[b]'");
    RunResult b = run("decide --json '[a /\\ b]' '[a];[b]'");
    CHECK(a.out == b.out);
}
