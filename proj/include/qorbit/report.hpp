#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qorbit {

struct VerificationCase {
    int m = -1;  // -1 when the check has no basis index
    int n = -1;
    std::string check;
    bool pass = true;
    std::string residual;  // empty on pass; reproducible text form on failure
};

/// Accumulating pass/fail report for one verification suite.
class VerificationReport {
public:
    VerificationReport() = default;
    explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

    void add(VerificationCase c) {
        if (c.pass)
            ++passed_;
        else
            ++failed_;
        cases_.push_back(std::move(c));
    }
    void add(int m, int n, std::string check, bool pass, std::string residual = "") {
        add(VerificationCase{m, n, std::move(check), pass, std::move(residual)});
    }
    void merge(const VerificationReport& other) {
        for (const auto& c : other.cases_) add(c);
    }

    const std::string& suite() const { return suite_; }
    const std::vector<VerificationCase>& cases() const { return cases_; }
    std::size_t passed_count() const { return passed_; }
    std::size_t failed_count() const { return failed_; }
    bool passed() const { return failed_ == 0; }

private:
    std::string suite_;
    std::vector<VerificationCase> cases_;
    std::size_t passed_ = 0;
    std::size_t failed_ = 0;
};

}  // namespace qorbit
