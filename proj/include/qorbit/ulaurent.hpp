#pragma once

#include "qorbit/gaussian.hpp"

#include <complex>
#include <map>
#include <string>
#include <utility>

namespace qorbit {

/// Laurent polynomial in u over Q(i), u^2 = q. Finitely supported map
/// exponent -> nonzero coefficient; the zero polynomial is the empty map.
class ULaurent {
public:
    ULaurent() = default;
    explicit ULaurent(const GaussianRational& c);
    ULaurent(int c) : ULaurent(GaussianRational(c)) {}

    static ULaurent u_pow(int k, const GaussianRational& c = GaussianRational(1));
    static ULaurent one() { return ULaurent(1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    int lowdeg() const;  // requires nonzero
    int topdeg() const;  // requires nonzero
    const GaussianRational& leading() const;  // requires nonzero
    GaussianRational coeff(int k) const;

    /// True iff all exponents are >= 0.
    bool is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }

    void set_coeff(int k, const GaussianRational& c);

    friend ULaurent operator+(const ULaurent& a, const ULaurent& b);
    friend ULaurent operator-(const ULaurent& a, const ULaurent& b);
    friend ULaurent operator-(const ULaurent& a);
    friend ULaurent operator*(const ULaurent& a, const ULaurent& b);
    ULaurent& operator+=(const ULaurent& b) { return *this = *this + b; }
    ULaurent& operator-=(const ULaurent& b) { return *this = *this - b; }
    ULaurent& operator*=(const ULaurent& b) { return *this = *this * b; }

    friend bool operator==(const ULaurent& a, const ULaurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ULaurent& a, const ULaurent& b) { return !(a == b); }

    /// Multiply by u^k.
    ULaurent shifted(int k) const;

    /// Coefficient-wise i -> -i together with u -> u^-1.
    ULaurent star_conj() const;

    GaussianRational eval_one() const;  // value at u = 1
    GaussianRational eval_rat(const Rat& u0) const;  // exact value at rational u = u0 != 0
    std::complex<double> eval(std::complex<double> u) const;

    const std::map<int, GaussianRational>& terms() const { return terms_; }

    std::string str() const;

private:
    std::map<int, GaussianRational> terms_;
};

/// Quotient and remainder of polynomial division (nonnegative exponents only).
std::pair<ULaurent, ULaurent> poly_divmod(const ULaurent& a, const ULaurent& b);

/// Monic gcd of two u-polynomials via the Euclidean algorithm; gcd(0,0) = 0.
ULaurent poly_gcd(ULaurent a, ULaurent b);

}  // namespace qorbit
