#include "qorbit/quadrature.hpp"
#include "qorbit/suites.hpp"

#include <omp.h>

#include <chrono>
#include <iostream>

// Serial vs OpenMP timings for the two parallel kernels: the exact
// verification grid and the norm quadrature.

namespace {

double time_suite(qorbit::Suite s, int threads) {
    qorbit::SuiteConfig cfg;
    cfg.suite = s;
    cfg.threads = threads;
    if (s == qorbit::Suite::Norm) {
        cfg.n_min = 2;
        cfg.n_max = 5;
        cfg.m_max = 3;
    }
    auto t0 = std::chrono::steady_clock::now();
    qorbit::RunSummary r = qorbit::run(cfg);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!r.ok()) std::cerr << "warning: suite reported failures\n";
    return dt;
}

}  // namespace

int main() {
    const int threads = omp_get_max_threads();
    std::cout << "threads available: " << threads << "\n";
    for (qorbit::Suite s : {qorbit::Suite::Eigen, qorbit::Suite::Tridiag, qorbit::Suite::Norm}) {
        double serial = time_suite(s, 1);
        double parallel = time_suite(s, threads);
        std::cout << qorbit::suite_name(s) << ": serial " << serial << " s, parallel " << parallel
                  << " s, speedup " << serial / parallel << "x\n";
    }
    return 0;
}
