#include "qorbit/classical.hpp"
#include "qorbit/errors.hpp"
#include "qorbit/qdiscrete.hpp"
#include "qorbit/quadrature.hpp"
#include "qorbit/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

int max_threads_from_env() {
    int t = omp_get_max_threads();
    if (const char* cap = std::getenv("QORBIT_THREADS")) {
        int c = std::atoi(cap);
        if (c >= 1 && c < t) t = c;
    }
    return t;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file " + path);
    os << text;
}

std::string triple_text(const qorbit::TridiagonalCoeffs& t) {
    return "alpha=" + t.alpha.str() + "  beta=" + t.beta.str() + "  gamma=" + t.gamma.str();
}

std::string triple_latex(const qorbit::TridiagonalCoeffs& t) {
    return "\\alpha = " + t.alpha.latex() + ",\\quad \\beta = " + t.beta.latex() +
           ",\\quad \\gamma = " + t.gamma.latex();
}

}  // namespace

int main(int argc, char** argv) {
    using namespace qorbit;
    CLI::App app{"Exact verification of the q-deformed discrete series operators"};
    app.require_subcommand(1);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run a verification suite over a parameter grid");
    std::string suite_str = "all", format = "text", output;
    SuiteConfig cfg;
    cfg.threads = max_threads_from_env();
    bool nmin_set = false;
    verify->add_option("--suite", suite_str, "suite name")->capture_default_str();
    verify->add_option("--n-min", cfg.n_min, "minimum weight n")->capture_default_str();
    verify->add_option("--n-max", cfg.n_max, "maximum weight n")->capture_default_str();
    verify->add_option("--m-max", cfg.m_max, "maximum basis index m")->capture_default_str();
    verify->add_option("--tol", cfg.tol, "quadrature tolerance (norm suite)")->capture_default_str();
    verify->add_option("--seed", cfg.seed, "seed for randomized suites")->capture_default_str();
    verify->add_option("--count", cfg.property_count, "instances per randomized property")
        ->capture_default_str();
    verify->add_option("--threads", cfg.threads, "worker threads")->capture_default_str();
    verify->add_option("--format", format, "text or json")->capture_default_str();
    verify->add_option("--output", output, "output path (default stdout)");
    verify->add_flag("--no-timing", "omit wall time from JSON for reproducible bytes");

    // ---- coeffs ----
    auto* coeffs = app.add_subcommand("coeffs", "tridiagonal coefficient triple for one operator");
    std::string op_str = "EK", cformat = "text";
    int cm = 0, cn = 1, qflag = 0;
    coeffs->add_option("--op", op_str, "EK, FK or K2")->capture_default_str();
    coeffs->add_option("--m", cm, "basis index m")->capture_default_str();
    coeffs->add_option("--n", cn, "weight n")->capture_default_str();
    coeffs->add_option("--q", qflag, "set 1 to print the u = 1 classical values");
    coeffs->add_option("--format", cformat, "text, json or latex")->capture_default_str();

    // ---- psi ----
    auto* psi_cmd = app.add_subcommand("psi", "print a basis function, factored and expanded");
    int pm = 0, pn = 1;
    std::string pformat = "text";
    psi_cmd->add_option("--m", pm, "basis index m")->capture_default_str();
    psi_cmd->add_option("--n", pn, "weight n")->capture_default_str();
    psi_cmd->add_option("--format", pformat, "text or json")->capture_default_str();

    // ---- norm ----
    auto* norm_cmd = app.add_subcommand("norm", "squared norm of a basis function");
    int nm = 0, nn = 2;
    std::string method = "closed";
    double ntol = 1e-8;
    norm_cmd->add_option("--m", nm, "basis index m")->capture_default_str();
    norm_cmd->add_option("--n", nn, "weight n (>= 2)")->capture_default_str();
    norm_cmd->add_option("--method", method, "closed or quadrature")->capture_default_str();
    norm_cmd->add_option("--tol", ntol, "quadrature tolerance")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            if (!parse_suite(suite_str, cfg.suite)) {
                std::cerr << "unknown suite: " << suite_str << "\n";
                return 2;
            }
            if (format != "text" && format != "json") {
                std::cerr << "verify supports --format text|json\n";
                return 2;
            }
            try {
                cfg.validate();
            } catch (const std::invalid_argument& e) {
                std::cerr << "invalid parameters: " << e.what() << "\n";
                return 2;
            }
            RunSummary summary = run(cfg);
            bool timing = verify->count("--no-timing") == 0;
            write_output(output, format == "json" ? summary_to_json(cfg, summary, timing)
                                                  : summary_to_text(cfg, summary));
            return summary.ok() ? 0 : 1;
        }

        if (coeffs->parsed()) {
            TriOp which;
            if (op_str == "EK")
                which = TriOp::EKinv;
            else if (op_str == "FK")
                which = TriOp::FKinv;
            else if (op_str == "K2")
                which = TriOp::Kinv2;
            else {
                std::cerr << "unknown operator " << op_str << " (want EK, FK or K2)\n";
                return 2;
            }
            if (cm < 0 || cn < 1) {
                std::cerr << "invalid parameters: need m >= 0, n >= 1\n";
                return 2;
            }
            QSeriesParams p(cm, cn);
            if (qflag == 1) {
                ClassicalTriple t = classical_limit_coeffs(which, p);
                std::cout << "(" << gaussian_to_string(t.value[0]) << ", "
                          << gaussian_to_string(t.value[1]) << ", "
                          << gaussian_to_string(t.value[2]) << ")\n";
                return t.matches_classical ? 0 : 1;
            }
            TridiagonalCoeffs expected = expected_coeffs(which, p);
            GeneratorSet gs = generators(-cn);
            QDiffOperator A = (which == TriOp::EKinv)   ? op_mul(gs.E, gs.Kinv)
                              : (which == TriOp::FKinv) ? op_mul(gs.F, gs.Kinv)
                                                        : op_mul(gs.Kinv, gs.Kinv);
            TridiagonalCoeffs derived = decompose_tridiagonal(A, p);
            bool agree = derived == expected;
            if (cformat == "json") {
                nlohmann::ordered_json j;
                j["op"] = op_str;
                j["m"] = cm;
                j["n"] = cn;
                j["transcribed"] = {{"alpha", expected.alpha.str()},
                                    {"beta", expected.beta.str()},
                                    {"gamma", expected.gamma.str()}};
                j["derived"] = {{"alpha", derived.alpha.str()},
                                {"beta", derived.beta.str()},
                                {"gamma", derived.gamma.str()}};
                j["agree"] = agree;
                std::cout << j.dump(2) << "\n";
            } else if (cformat == "latex") {
                std::cout << triple_latex(derived) << "\n";
            } else {
                std::cout << triple_text(derived) << "\n";
                if (!agree)
                    std::cout << "MISMATCH transcribed: " << triple_text(expected) << "\n";
            }
            return agree ? 0 : 1;
        }

        if (psi_cmd->parsed()) {
            if (pm < 0 || pn < 1) {
                std::cerr << "invalid parameters: need m >= 0, n >= 1\n";
                return 2;
            }
            FactoredZ f = psi(QSeriesParams(pm, pn));
            if (pformat == "json") {
                nlohmann::ordered_json j;
                j["m"] = pm;
                j["n"] = pn;
                j["factored"] = f.str();
                j["expanded"] = f.expand().str();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << f.str() << "\n" << f.expand().str() << "\n";
            }
            return 0;
        }

        if (norm_cmd->parsed()) {
            if (nm < 0) {
                std::cerr << "invalid parameters: need m >= 0\n";
                return 2;
            }
            if (nn < 2) {
                std::cerr << "invalid parameters: norm requires n >= 2\n";
                return 2;
            }
            if (method == "closed") {
                std::cout << norm_closed(nm, nn).str() << "\n";
            } else if (method == "quadrature") {
                QuadratureResult r = norm_quadrature(nm, nn, ntol, max_threads_from_env());
                std::cout.precision(12);
                std::cout << r.value << " (est err < " << r.error_estimate << ")\n";
            } else {
                std::cerr << "unknown method " << method << "\n";
                return 2;
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
