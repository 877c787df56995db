#pragma once

#include "qorbit/zrational.hpp"

#include <vector>

namespace qorbit {

/// scalar * prod (a_k z + b_k)^{e_k}, kept unexpanded. Products of many
/// shifted linear factors (the psi basis) live here so ratios telescope
/// instead of being expanded and re-divided.
class FactoredZ {
public:
    struct Factor {
        QScalar a;
        QScalar b;
        int e = 1;
    };

    FactoredZ() : scalar_(1) {}
    explicit FactoredZ(const QScalar& scalar) : scalar_(scalar) {}

    const QScalar& scalar() const { return scalar_; }
    const std::vector<Factor>& factors() const { return factors_; }

    /// Multiply by (a z + b)^e, merging with an existing equal factor.
    FactoredZ& times_factor(const QScalar& a, const QScalar& b, int e = 1);
    FactoredZ& times_scalar(const QScalar& s) {
        scalar_ *= s;
        return *this;
    }

    /// Ratio this / other, factor lists merged by exact (a, b) match.
    FactoredZ ratio(const FactoredZ& other) const;

    /// Substitution z -> q^k z; each factor (a z + b) becomes (a q^k z + b).
    FactoredZ q_shifted(int k) const;

    /// Positive exponents into the numerator, negative into the denominator.
    ZRational expand() const;

    std::string str() const;

private:
    QScalar scalar_;
    std::vector<Factor> factors_;
};

/// Exact division of f by the linear factor (a z + b). Throws NotAFactor
/// when a = b = 0.
ZRational divide_known_factor(const ZRational& f, const QScalar& a, const QScalar& b);

}  // namespace qorbit
