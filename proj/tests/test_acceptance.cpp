// Acceptance suite: one pass/fail line per criterion, all tolerances pinned.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qorbit/classical.hpp"
#include "qorbit/qdiscrete.hpp"
#include "qorbit/suites.hpp"

#include <cstdio>

using namespace qorbit;

namespace {

SuiteConfig grid_config(Suite s, int n_min, int n_max, int m_max) {
    SuiteConfig cfg;
    cfg.suite = s;
    cfg.n_min = n_min;
    cfg.n_max = n_max;
    cfg.m_max = m_max;
    cfg.threads = 4;
    return cfg;
}

bool report_criterion(int index, const char* what, const RunSummary& summary) {
    bool ok = summary.ok();
    std::printf("%s criterion %d: %s (%zu passed, %zu failed, %.2f s)\n", ok ? "PASS" : "FAIL",
                index, what, summary.passed(), summary.failed(), summary.seconds);
    if (!ok) {
        for (const auto& rep : summary.reports)
            for (const auto& c : rep.cases())
                if (!c.pass)
                    std::printf("    m=%d n=%d %s: %s\n", c.m, c.n, c.check.c_str(),
                                c.residual.c_str());
    }
    return ok;
}

}  // namespace

TEST_CASE("1: defining relations exactly zero for sigma = -n, n in 0..8") {
    RunSummary s = run(grid_config(Suite::Relations, 0, 8, 0));
    CHECK(report_criterion(1, "operator relations", s));
}

TEST_CASE("2: compact eigen identity exact on n in 1..6, m in 0..12") {
    RunSummary s = run(grid_config(Suite::Eigen, 1, 6, 12));
    CHECK(report_criterion(2, "eigen identity", s));
}

TEST_CASE("3: tridiagonal identities field-exact on the grid, alpha = 0 at m = 0") {
    RunSummary s = run(grid_config(Suite::Tridiag, 1, 6, 12));
    bool alpha_ok = true;
    for (int n = 1; n <= 6; ++n)
        for (TriOp which : {TriOp::EKinv, TriOp::FKinv, TriOp::Kinv2})
            alpha_ok = alpha_ok && expected_coeffs(which, {0, n}).alpha.is_zero();
    CHECK(alpha_ok);
    CHECK(report_criterion(3, "tridiagonal coefficients", s));
}

TEST_CASE("4: classical limit of triples and of the basis functions") {
    RunSummary s = run(grid_config(Suite::Limit, 1, 6, 12));
    CHECK(report_criterion(4, "u = 1 limit", s));
}

TEST_CASE("5: classical representation identities and the literal-form regression") {
    RunSummary s = run(grid_config(Suite::Classical, 1, 6, 12));
    CHECK(report_criterion(5, "classical representation", s));
}

TEST_CASE("6: group action homomorphism on 20 seeded random det-1 pairs") {
    RunSummary s = run(grid_config(Suite::Group, 1, 1, 0));
    CHECK(report_criterion(6, "group homomorphism", s));
}

TEST_CASE("7: norms and orthogonality within relative 1e-6") {
    SuiteConfig cfg = grid_config(Suite::Norm, 2, 5, 3);
    cfg.tol = 1e-8;
    RunSummary s = run(cfg);
    // spot value: ||psi_0||^2 = pi/4 at n = 2
    CHECK(norm_closed(0, 2).coeff == Rat(1, 4));
    CHECK(report_criterion(7, "norm quadrature", s));
}

TEST_CASE("8: Hopf consistency (Leibniz to jmax = 10, star on all relations)") {
    SuiteConfig leib = grid_config(Suite::Leibniz, 1, 1, 10);
    RunSummary s1 = run(leib);
    RunSummary s2 = run(grid_config(Suite::Star, 0, 8, 0));
    bool ok = report_criterion(8, "Hopf consistency", s1) & report_criterion(8, "star structure", s2);
    CHECK(ok);
}

TEST_CASE("9: kernel property suites on 1000 seeded instances each") {
    SuiteConfig cfg = grid_config(Suite::Field, 1, 1, 0);
    cfg.property_count = 1000;
    RunSummary s = run(cfg);
    CHECK(report_criterion(9, "kernel properties", s));
}
