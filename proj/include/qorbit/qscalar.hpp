#pragma once

#include "qorbit/ulaurent.hpp"

#include <complex>
#include <string>

namespace qorbit {

/// Element of the field Q(i)(u), u^2 = q, kept in a unique canonical form:
/// the denominator is a monic u-polynomial with nonzero constant term and is
/// coprime to the polynomial part of the numerator; any pure u-power unit
/// lives in the numerator. Equality is field-by-field comparison.
class QScalar {
public:
    QScalar() : den_(ULaurent::one()) {}
    QScalar(int c) : num_(ULaurent(c)), den_(ULaurent::one()) {}
    explicit QScalar(const GaussianRational& c) : num_(ULaurent(c)), den_(ULaurent::one()) {}
    QScalar(const ULaurent& num, const ULaurent& den) { canonicalize(num, den); }
    explicit QScalar(const ULaurent& num) : num_(num), den_(ULaurent::one()) {}

    static QScalar i_unit() { return QScalar(GaussianRational::i_unit()); }
    /// u^k (i.e. q^{k/2}).
    static QScalar u_pow(int k) { return QScalar(ULaurent::u_pow(k)); }
    /// q^k = u^{2k}.
    static QScalar q_pow(int k) { return u_pow(2 * k); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    const ULaurent& num() const { return num_; }
    const ULaurent& den() const { return den_; }

    friend QScalar operator+(const QScalar& a, const QScalar& b);
    friend QScalar operator-(const QScalar& a, const QScalar& b);
    friend QScalar operator-(const QScalar& a);
    friend QScalar operator*(const QScalar& a, const QScalar& b);
    friend QScalar operator/(const QScalar& a, const QScalar& b);
    QScalar inv() const;
    QScalar& operator+=(const QScalar& b) { return *this = *this + b; }
    QScalar& operator-=(const QScalar& b) { return *this = *this - b; }
    QScalar& operator*=(const QScalar& b) { return *this = *this * b; }
    QScalar& operator/=(const QScalar& b) { return *this = *this / b; }

    friend bool operator==(const QScalar& a, const QScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

    /// Formal conjugation i -> -i, u -> u^-1 (the shadow of |q| = 1).
    QScalar star_conj() const;

    /// Exact value at u = 1; throws EvaluationPole when the denominator vanishes there.
    GaussianRational eval_one() const;
    /// Exact value at a rational u = u0 != 0; throws EvaluationPole at a pole.
    GaussianRational eval_rat(const Rat& u0) const;
    /// Floating value at a given complex u.
    std::complex<double> eval(std::complex<double> u) const;

    /// `num` or `(num)/(den)` in the interchange grammar, terms in decreasing u-power.
    std::string str() const;
    /// LaTeX in the variable q: u^k renders as q^{k/2}.
    std::string latex() const;

private:
    void canonicalize(ULaurent num, ULaurent den);
    ULaurent num_;
    ULaurent den_;
};

/// q-number [x]_{q^step} = (q^{sx} - q^{-sx})/(q^s - q^{-s}), step in {1,2}.
QScalar q_number(int x, int step = 1);

}  // namespace qorbit
