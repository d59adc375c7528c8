#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string binary() {
    const char* p = std::getenv("NREGULAR_BIN");
    REQUIRE_MESSAGE(p != nullptr, "NREGULAR_BIN must point at the CLI binary");
    return p;
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + binary() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("fast run exits zero and reports passes") {
    RunResult r = run("run --suites algebra,tensor --n 1,2 --lmax 1 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PASS") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("json reports are byte-identical across repeats and thread counts") {
    std::string args = "run --suites algebra,basis --n 1,2 --lmax 1 --seed 7 --format json";
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    RunResult c = run(args, "NREGULAR_THREADS=1 ");
    CHECK(c.exit_code == 0);
    CHECK(c.output == a.output);
    // a different seed still passes but the config block differs
    RunResult d = run("run --suites algebra,basis --n 1,2 --lmax 1 --seed 8 --format json");
    CHECK(d.exit_code == 0);
    CHECK(d.output != a.output);
}

TEST_CASE("output file matches stdout payload") {
    std::string path = "cli_report_tmp.json";
    std::string args = "run --suites tensor --n 1 --lmax 1 --format json";
    RunResult direct = run(args);
    RunResult filed = run(args + " --out " + path);
    CHECK(filed.exit_code == 0);
    CHECK(filed.output.empty());
    CHECK(slurp(path) == direct.output);
    std::remove(path.c_str());
}

TEST_CASE("rank guard: values outside 1..4 are usage errors") {
    CHECK(run("run --suites algebra --n 5 --lmax 1").exit_code == 2);
    CHECK(run("run --suites algebra --n 0 --lmax 1").exit_code == 2);
    CHECK(run("run --suites algebra --n 1,banana --lmax 1").exit_code == 2);
    CHECK(run("run --suites nosuchsuite --n 1 --lmax 1").exit_code == 2);
}

TEST_CASE("explain") {
    RunResult r = run("explain diffops.identities");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("diffops.identities") != std::string::npos);
    CHECK(run("explain no.such.check").exit_code == 2);
}

TEST_CASE("golden report fixture") {
    const char* dir = std::getenv("NREGULAR_FIXTURES");
    REQUIRE_MESSAGE(dir != nullptr, "NREGULAR_FIXTURES must point at tests/fixtures");
    RunResult r = run("run --suites algebra,tensor,diffops --n 1,2 --lmax 1 --seed 1 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output == slurp(std::string(dir) + "/report_algebra_tensor_diffops.json"));
}
