#pragma once

#include <stdexcept>
#include <string>

namespace qorbit {

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

struct EvaluationPole : std::domain_error {
    explicit EvaluationPole(const std::string& what) : std::domain_error(what) {}
};

struct NotAFactor : std::domain_error {
    explicit NotAFactor(const std::string& what) : std::domain_error(what) {}
};

struct NotInTridiagonalSpan : std::domain_error {
    explicit NotInTridiagonalSpan(const std::string& what) : std::domain_error(what) {}
};

struct SingularSystem : std::logic_error {
    explicit SingularSystem(const std::string& what) : std::logic_error(what) {}
};

struct InvariantViolation : std::domain_error {
    explicit InvariantViolation(const std::string& what) : std::domain_error(what) {}
};

struct DivergentIntegral : std::domain_error {
    explicit DivergentIntegral(const std::string& what) : std::domain_error(what) {}
};

struct QuadratureFailure : std::runtime_error {
    explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qorbit
