#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <string>

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string output;
};

CmdResult run_cli(const std::string& args) {
    std::string cmd = std::string(QORBIT_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    CmdResult r;
    std::array<char, 4096> buf;
    while (size_t got = fread(buf.data(), 1, buf.size(), p)) r.output.append(buf.data(), got);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("verify exit code 0 on a passing grid") {
    CmdResult r = run_cli("verify --suite tridiag --n-min 1 --n-max 2 --m-max 2");
    CHECK(r.exit_code == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("verify --suite eigen --n-min 0 --n-max 0").exit_code == 2);
    CHECK(run_cli("verify --suite nosuch").exit_code == 2);
    CHECK(run_cli("verify --suite norm --n-min 1 --n-max 2").exit_code == 2);
    CHECK(run_cli("coeffs --op XX --m 0 --n 1").exit_code == 2);
    CHECK(run_cli("norm --m 0 --n 1").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
}

TEST_CASE("json report shape and determinism") {
    const std::string args =
        "verify --suite eigen --n-min 1 --n-max 2 --m-max 3 --format json --no-timing";
    CmdResult a = run_cli(args);
    CmdResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);  // byte-identical with timing suppressed

    nlohmann::json j = nlohmann::json::parse(a.output);
    CHECK(j["suite"] == "eigen");
    CHECK(j["params"]["n_min"] == 1);
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["cases"].is_array());
    CHECK(!j["cases"].empty());
    for (const auto& c : j["cases"]) {
        CHECK(c.contains("m"));
        CHECK(c.contains("n"));
        CHECK(c.contains("check"));
        CHECK((c["status"] == "pass" || c["status"] == "fail"));
    }
}

TEST_CASE("coeffs text output") {
    CmdResult r = run_cli("coeffs --op EK --m 0 --n 1 --format text");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "alpha=0  beta=(i*u^4)/(u^8 + 1)  gamma=(i*u^4)/(u^8 + 1)\n");
}

TEST_CASE("coeffs classical values") {
    CmdResult r = run_cli("coeffs --op EK --m 1 --n 1 --q 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "(1/2*i, 3/2*i, i)\n");
}

TEST_CASE("coeffs latex renders in q") {
    CmdResult r = run_cli("coeffs --op K2 --m 0 --n 1 --format latex");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\\alpha") != std::string::npos);
    CHECK(r.output.find("q^{") != std::string::npos);
    CHECK(r.output.find("u^") == std::string::npos);
}

TEST_CASE("psi command prints factored and expanded forms") {
    CmdResult r = run_cli("psi --m 1 --n 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("u^4*z - i") != std::string::npos);  // q^2 z - i via u
    CHECK(r.output.find("/") != std::string::npos);
}

TEST_CASE("norm command") {
    CmdResult closed = run_cli("norm --m 0 --n 2 --method closed");
    CHECK(closed.exit_code == 0);
    CHECK(closed.output == "pi/4\n");

    CmdResult quad = run_cli("norm --m 0 --n 2 --method quadrature --tol 1e-8");
    CHECK(quad.exit_code == 0);
    CHECK(std::abs(std::stod(quad.output) - std::numbers::pi / 4.0) < 1e-7);
    CHECK(quad.output.find("est err") != std::string::npos);
}

TEST_CASE("verification failure exits 1") {
    // quadrature cannot hit 1e-15 inside the evaluation budget
    CmdResult r = run_cli("verify --suite norm --n-min 2 --n-max 2 --m-max 0 --tol 1e-15");
    CHECK(r.exit_code == 1);
}
