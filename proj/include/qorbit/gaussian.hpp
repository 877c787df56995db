#pragma once

#include "qorbit/errors.hpp"
#include "qorbit/rational.hpp"

#include <complex>
#include <string>

namespace qorbit {

/// Element of Q(i): re + i*im with arbitrary-precision rational parts.
struct GaussianRational {
    Rat re;
    Rat im;

    GaussianRational() = default;
    GaussianRational(Rat r, Rat i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(int r) : re(r), im(0) {}

    static GaussianRational i_unit() { return {Rat(0), Rat(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    Rat norm2() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussianRational inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero Gaussian rational");
        Rat n = norm2();
        return {re / n, -im / n};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inv();
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {rat_to_double(re), rat_to_double(im)}; }

    /// Prints `a`, `b*i`, or `a+b*i` (negative b renders as `a-|b|*i`).
    std::string str() const;
};

std::string gaussian_to_string(const GaussianRational& g);

inline std::string GaussianRational::str() const { return gaussian_to_string(*this); }

}  // namespace qorbit
