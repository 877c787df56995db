#include "qorbit/qscalar.hpp"

#include "qorbit/errors.hpp"

#include <sstream>

namespace qorbit {

void QScalar::canonicalize(ULaurent num, ULaurent den) {
    if (den.is_zero()) throw DivisionByZero("QScalar with zero denominator");
    if (num.is_zero()) {
        num_ = ULaurent();
        den_ = ULaurent::one();
        return;
    }
    // strip the u-power unit of the denominator, then of the numerator
    int d = den.lowdeg();
    den = den.shifted(-d);
    num = num.shifted(-d);
    int e = num.lowdeg();
    ULaurent num0 = num.shifted(-e);
    ULaurent g = poly_gcd(num0, den);
    if (!g.is_one()) {
        num0 = poly_divmod(num0, g).first;
        den = poly_divmod(den, g).first;
    }
    GaussianRational lcinv = den.leading().inv();
    ULaurent monic_den, scaled_num;
    for (const auto& [k, c] : den.terms()) monic_den.set_coeff(k, c * lcinv);
    for (const auto& [k, c] : num0.terms()) scaled_num.set_coeff(k, c * lcinv);
    num_ = scaled_num.shifted(e);
    den_ = monic_den;
}

QScalar operator+(const QScalar& a, const QScalar& b) {
    return QScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QScalar operator-(const QScalar& a, const QScalar& b) {
    return QScalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QScalar operator-(const QScalar& a) {
    QScalar r = a;
    r.num_ = -r.num_;
    return r;
}

QScalar operator*(const QScalar& a, const QScalar& b) {
    return QScalar(a.num_ * b.num_, a.den_ * b.den_);
}

QScalar QScalar::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero QScalar");
    return QScalar(den_, num_);
}

QScalar operator/(const QScalar& a, const QScalar& b) {
    if (b.is_zero()) throw DivisionByZero("QScalar division by zero");
    return QScalar(a.num_ * b.den_, a.den_ * b.num_);
}

QScalar QScalar::star_conj() const { return QScalar(num_.star_conj(), den_.star_conj()); }

GaussianRational QScalar::eval_one() const {
    GaussianRational d = den_.eval_one();
    if (d.is_zero()) throw EvaluationPole("denominator vanishes at u = 1");
    return num_.eval_one() / d;
}

GaussianRational QScalar::eval_rat(const Rat& u0) const {
    GaussianRational d = den_.eval_rat(u0);
    if (d.is_zero()) throw EvaluationPole("denominator vanishes at u = u0");
    return num_.eval_rat(u0) / d;
}

std::complex<double> QScalar::eval(std::complex<double> u) const {
    std::complex<double> d = den_.eval(u);
    if (d == std::complex<double>{0.0, 0.0}) throw EvaluationPole("denominator vanishes at u");
    return num_.eval(u) / d;
}

std::string QScalar::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

std::string latex_laurent_q(const ULaurent& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << " + ";
        first = false;
        std::string cs;
        if (c.is_one() && e != 0)
            cs = "";
        else if (c.re == 0 && c.im == 1)
            cs = "\\imath ";
        else if (c.is_real() || c.re == 0)
            cs = gaussian_to_string(c);
        else
            cs = "(" + gaussian_to_string(c) + ")";
        os << cs;
        if (e != 0) {
            os << "q^{";
            if (e % 2 == 0)
                os << e / 2;
            else
                os << e << "/2";
            os << "}";
        } else if (cs.empty()) {
            os << "1";
        }
    }
    return os.str();
}

}  // namespace

std::string QScalar::latex() const {
    if (den_.is_one()) return latex_laurent_q(num_);
    return "\\frac{" + latex_laurent_q(num_) + "}{" + latex_laurent_q(den_) + "}";
}

QScalar q_number(int x, int step) {
    ULaurent num = ULaurent::u_pow(2 * step * x) - ULaurent::u_pow(-2 * step * x);
    ULaurent den = ULaurent::u_pow(2 * step) - ULaurent::u_pow(-2 * step);
    return QScalar(num, den);
}

}  // namespace qorbit
