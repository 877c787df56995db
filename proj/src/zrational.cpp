#include "qorbit/zrational.hpp"

#include "qorbit/errors.hpp"

#include <sstream>

namespace qorbit {

void ZRational::canonicalize(ZPoly num, ZPoly den, int zshift) {
    if (den.is_zero()) throw DivisionByZero("ZRational with zero denominator");
    if (num.is_zero()) {
        num_ = ZPoly();
        den_ = ZPoly::one();
        zshift_ = 0;
        return;
    }
    int ln = num.lowdeg(), ld = den.lowdeg();
    num = num.z_shifted(-ln);
    den = den.z_shifted(-ld);
    zshift = zshift + ln - ld;
    ZPoly g = zpoly_gcd(num, den);
    if (!g.is_one()) {
        num = zpoly_divmod(num, g).first;
        den = zpoly_divmod(den, g).first;
    }
    QScalar lcinv = den.leading().inv();
    num_ = lcinv * num;
    den_ = lcinv * den;
    zshift_ = zshift;
}

ZRational operator+(const ZRational& a, const ZRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int s = std::min(a.zshift_, b.zshift_);
    // combine over the lcm of the denominators; a shared factor would
    // otherwise divide the whole numerator and force a large gcd later
    ZPoly g = zpoly_gcd(a.den_, b.den_);
    ZPoly da = a.den_, db = b.den_;
    if (!g.is_one()) {
        da = zpoly_divmod(da, g).first;
        db = zpoly_divmod(db, g).first;
    }
    ZPoly num = a.num_.z_shifted(a.zshift_ - s) * db + b.num_.z_shifted(b.zshift_ - s) * da;
    return ZRational(num, a.den_ * db, s);
}

ZRational operator-(const ZRational& a, const ZRational& b) { return a + (-b); }

ZRational operator-(const ZRational& a) {
    ZRational r = a;
    r.num_ = -r.num_;
    return r;
}

ZRational operator*(const ZRational& a, const ZRational& b) {
    return ZRational(a.num_ * b.num_, a.den_ * b.den_, a.zshift_ + b.zshift_);
}

ZRational operator*(const QScalar& s, const ZRational& a) {
    return ZRational(s * a.num_, a.den_, a.zshift_);
}

ZRational operator/(const ZRational& a, const ZRational& b) {
    if (b.is_zero()) throw DivisionByZero("ZRational division by zero");
    return ZRational(a.num_ * b.den_, a.den_ * b.num_, a.zshift_ - b.zshift_);
}

ZRational ZRational::q_shifted(int k) const {
    if (is_zero()) return *this;
    return QScalar::q_pow(k * zshift_) * ZRational(num_.q_shifted(k), den_.q_shifted(k), zshift_);
}

ZRational ZRational::derivative() const {
    // d/dz [ z^s N/D ] = z^{s-1} (s N D + z N' D - z N D') / D^2
    if (is_zero()) return *this;
    ZPoly top = QScalar(zshift_) * (num_ * den_) + (num_.derivative() * den_).z_shifted(1) -
                (num_ * den_.derivative()).z_shifted(1);
    return ZRational(top, den_ * den_, zshift_ - 1);
}

std::complex<double> ZRational::eval(std::complex<double> z, std::complex<double> u) const {
    std::complex<double> d = den_.eval(z, u);
    if (d == std::complex<double>{0.0, 0.0}) throw EvaluationPole("ZRational pole at z");
    std::complex<double> v = num_.eval(z, u) / d;
    if (zshift_ != 0) {
        if (zshift_ < 0 && z == std::complex<double>{0.0, 0.0})
            throw EvaluationPole("ZRational pole at z = 0");
        v *= std::pow(z, zshift_);
    }
    return v;
}

std::string ZRational::str() const {
    std::ostringstream os;
    if (zshift_ != 0) os << "z^" << zshift_ << " * ";
    os << "(" << num_.str() << ")";
    if (!den_.is_one()) os << "/(" << den_.str() << ")";
    return os.str();
}

}  // namespace qorbit
