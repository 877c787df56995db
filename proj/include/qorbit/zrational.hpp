#pragma once

#include "qorbit/zpoly.hpp"

namespace qorbit {

/// Rational function of z over Q(i)(u): z^zshift * num/den with num, den
/// coprime polynomials of nonzero constant term and den monic. The zero
/// function is uniquely (0, 1, 0).
class ZRational {
public:
    ZRational() : den_(ZPoly::one()) {}
    ZRational(int c) : ZRational(ZPoly(c), ZPoly::one(), 0) {}
    explicit ZRational(const QScalar& c) : ZRational(ZPoly(c), ZPoly::one(), 0) {}
    explicit ZRational(const ZPoly& num) : ZRational(num, ZPoly::one(), 0) {}
    ZRational(const ZPoly& num, const ZPoly& den, int zshift = 0) {
        canonicalize(num, den, zshift);
    }

    /// z^k.
    static ZRational z_pow(int k, const QScalar& c = QScalar(1)) {
        return ZRational(ZPoly(c), ZPoly::one(), k);
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return zshift_ == 0 && num_.is_one() && den_.is_one(); }

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }
    int zshift() const { return zshift_; }

    friend ZRational operator+(const ZRational& a, const ZRational& b);
    friend ZRational operator-(const ZRational& a, const ZRational& b);
    friend ZRational operator-(const ZRational& a);
    friend ZRational operator*(const ZRational& a, const ZRational& b);
    friend ZRational operator*(const QScalar& s, const ZRational& a);
    friend ZRational operator/(const ZRational& a, const ZRational& b);
    ZRational& operator+=(const ZRational& b) { return *this = *this + b; }
    ZRational& operator-=(const ZRational& b) { return *this = *this - b; }
    ZRational& operator*=(const ZRational& b) { return *this = *this * b; }
    ZRational& operator/=(const ZRational& b) { return *this = *this / b; }

    friend bool operator==(const ZRational& a, const ZRational& b) {
        return a.zshift_ == b.zshift_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ZRational& a, const ZRational& b) { return !(a == b); }

    /// The substitution z -> q^k z.
    ZRational q_shifted(int k) const;

    /// Multiply by z^k.
    ZRational z_shifted(int k) const {
        ZRational r = *this;
        if (!r.is_zero()) r.zshift_ += k;
        return r;
    }

    /// Formal d/dz.
    ZRational derivative() const;

    std::complex<double> eval(std::complex<double> z, std::complex<double> u) const;

    std::string str() const;

private:
    void canonicalize(ZPoly num, ZPoly den, int zshift);
    ZPoly num_;
    ZPoly den_;
    int zshift_ = 0;
};

}  // namespace qorbit
