#pragma once

#include "qorbit/zrational.hpp"

#include <map>
#include <string>
#include <utility>

namespace qorbit {

/// Element of the twisted Laurent algebra generated by z^{±1} and the
/// q-shift S, with S z = q z S. Normal form: sum of c_{a,b} z^a S^b with
/// z-powers to the left of shift-powers; equality is term-map equality.
class QDiffOperator {
public:
    QDiffOperator() = default;

    static QDiffOperator identity() { return term(0, 0, QScalar(1)); }
    /// c * z^a * S^b.
    static QDiffOperator term(int a, int b, const QScalar& c);

    bool is_zero() const { return terms_.empty(); }

    QScalar coeff(int a, int b) const;
    void set_coeff(int a, int b, const QScalar& c);

    friend QDiffOperator operator+(const QDiffOperator& A, const QDiffOperator& B);
    friend QDiffOperator operator-(const QDiffOperator& A, const QDiffOperator& B);
    friend QDiffOperator operator-(const QDiffOperator& A);
    friend QDiffOperator operator*(const QScalar& s, const QDiffOperator& A);
    QDiffOperator& operator+=(const QDiffOperator& B) { return *this = *this + B; }
    QDiffOperator& operator-=(const QDiffOperator& B) { return *this = *this - B; }

    friend bool operator==(const QDiffOperator& A, const QDiffOperator& B) {
        return A.terms_ == B.terms_;
    }
    friend bool operator!=(const QDiffOperator& A, const QDiffOperator& B) { return !(A == B); }

    const std::map<std::pair<int, int>, QScalar>& terms() const { return terms_; }

    /// `c * z^a * S^b` terms joined by ` + `.
    std::string str() const;

private:
    std::map<std::pair<int, int>, QScalar> terms_;
};

/// Product in normal form: z^a S^b * z^c S^d = q^{bc} z^{a+c} S^{b+d}.
QDiffOperator op_mul(const QDiffOperator& A, const QDiffOperator& B);
QDiffOperator commutator(const QDiffOperator& A, const QDiffOperator& B);

/// Apply to a rational function: sum of c_{a,b} z^a f(q^b z).
ZRational apply(const QDiffOperator& A, const ZRational& f);

enum class Gen { K, Kinv, E, F };

const char* gen_name(Gen g);

/// The sigma-modified action realized as q-difference operators. With
/// n = -sigma: K = q^{n/2} S, E = z(q^{3n/2} S - q^{-n/2} S^{-1})/(q - q^{-1}),
/// F = -q^{-n/2} z^{-1} (S - S^{-1})/(q - q^{-1}).
struct GeneratorSet {
    int sigma = 0;
    QDiffOperator K, Kinv, E, F;

    const QDiffOperator& gen(Gen g) const;
};

GeneratorSet generators(int sigma);

/// Closed-form action on the monomial z^j: K z^j = q^{(2j-sigma)/2} z^j,
/// E z^j = q^{-sigma/2} [j-sigma]_q z^{j+1}, F z^j = -q^{sigma/2} [j]_q z^{j-1}.
std::pair<QScalar, int> monomial_action(Gen X, int sigma, int j);

}  // namespace qorbit
