#pragma once

#include "qorbit/qscalar.hpp"

#include <map>
#include <string>
#include <utility>

namespace qorbit {

/// Polynomial in z with QScalar coefficients, nonnegative exponents,
/// no stored zero coefficients.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(const QScalar& c);
    ZPoly(int c) : ZPoly(QScalar(c)) {}

    static ZPoly z_pow(int k, const QScalar& c = QScalar(1));
    static ZPoly one() { return ZPoly(1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const { return terms_.empty() || terms_.rbegin()->first == 0; }

    int degree() const;  // requires nonzero
    int lowdeg() const;  // requires nonzero
    const QScalar& leading() const;
    QScalar coeff(int k) const;
    void set_coeff(int k, const QScalar& c);

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator-(const ZPoly& a);
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const QScalar& s, const ZPoly& a);
    ZPoly& operator+=(const ZPoly& b) { return *this = *this + b; }
    ZPoly& operator-=(const ZPoly& b) { return *this = *this - b; }
    ZPoly& operator*=(const ZPoly& b) { return *this = *this * b; }

    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

    /// Coefficient of z^j multiplied by q^{k j} (the substitution z -> q^k z).
    ZPoly q_shifted(int k) const;

    /// Formal d/dz.
    ZPoly derivative() const;

    /// Shift all exponents by k >= -lowdeg().
    ZPoly z_shifted(int k) const;

    std::complex<double> eval(std::complex<double> z, std::complex<double> u) const;

    const std::map<int, QScalar>& terms() const { return terms_; }

    std::string str() const;

private:
    std::map<int, QScalar> terms_;
};

std::pair<ZPoly, ZPoly> zpoly_divmod(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_gcd(ZPoly a, ZPoly b);  // monic, gcd(0,0) = 0

}  // namespace qorbit
