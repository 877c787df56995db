#pragma once

#include "qorbit/report.hpp"

#include <string>
#include <vector>

namespace qorbit {

enum class Suite { Field, Relations, Leibniz, Star, Eigen, Tridiag, Limit, Classical, Group, Norm, All };

const char* suite_name(Suite s);
bool parse_suite(const std::string& name, Suite& out);

struct SuiteConfig {
    Suite suite = Suite::All;
    int n_min = 1;
    int n_max = 6;
    int m_max = 12;
    double tol = 1e-8;
    unsigned seed = 20260826;
    int threads = 1;
    int property_count = 1000;  // instances per randomized property

    void validate() const;  // throws std::invalid_argument
};

struct RunSummary {
    std::vector<VerificationReport> reports;
    double seconds = 0.0;

    std::size_t passed() const;
    std::size_t failed() const;
    bool ok() const { return failed() == 0; }
};

/// Executes the configured suite (grid cells may fan out over OpenMP;
/// reports are merged in (n, m) lexicographic order).
RunSummary run(const SuiteConfig& config);

/// JSON per the shipped schema. Wall time is the only nondeterministic
/// byte; pass include_timing = false for reproducible output.
std::string summary_to_json(const SuiteConfig& config, const RunSummary& summary,
                            bool include_timing = true);
std::string summary_to_text(const SuiteConfig& config, const RunSummary& summary);

}  // namespace qorbit
