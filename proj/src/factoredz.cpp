#include "qorbit/factoredz.hpp"

#include "qorbit/errors.hpp"

#include <sstream>

namespace qorbit {

FactoredZ& FactoredZ::times_factor(const QScalar& a, const QScalar& b, int e) {
    if (a.is_zero() && b.is_zero()) throw NotAFactor("zero linear factor");
    if (e == 0) return *this;
    if (a.is_zero()) {
        // constant factor folds into the scalar
        QScalar p(1);
        for (int k = 0; k < std::abs(e); ++k) p *= b;
        scalar_ *= (e > 0) ? p : p.inv();
        return *this;
    }
    for (auto it = factors_.begin(); it != factors_.end(); ++it) {
        if (it->a == a && it->b == b) {
            it->e += e;
            if (it->e == 0) factors_.erase(it);
            return *this;
        }
    }
    factors_.push_back({a, b, e});
    return *this;
}

FactoredZ FactoredZ::ratio(const FactoredZ& other) const {
    if (other.scalar_.is_zero()) throw DivisionByZero("FactoredZ ratio by zero");
    FactoredZ r = *this;
    r.scalar_ = scalar_ / other.scalar_;
    for (const auto& f : other.factors_) r.times_factor(f.a, f.b, -f.e);
    return r;
}

FactoredZ FactoredZ::q_shifted(int k) const {
    FactoredZ r(scalar_);
    const QScalar qk = QScalar::q_pow(k);
    for (const auto& f : factors_) r.times_factor(f.a * qk, f.b, f.e);
    return r;
}

ZRational FactoredZ::expand() const {
    ZPoly num(scalar_);
    ZPoly den = ZPoly::one();
    for (const auto& f : factors_) {
        ZPoly lin = ZPoly::z_pow(1, f.a) + ZPoly(f.b);
        for (int k = 0; k < std::abs(f.e); ++k) {
            if (f.e > 0)
                num *= lin;
            else
                den *= lin;
        }
    }
    return ZRational(num, den, 0);
}

std::string FactoredZ::str() const {
    std::ostringstream num, den;
    bool anynum = false, anyden = false;
    for (const auto& f : factors_) {
        std::ostringstream& os = (f.e > 0) ? num : den;
        ((f.e > 0) ? anynum : anyden) = true;
        std::string as = f.a.str(), bs = f.b.str();
        os << "(";
        if (!f.a.is_one()) os << as << "*";
        os << "z";
        if (bs.size() && bs[0] != '-') os << " + " << bs;
        else os << " - " << bs.substr(1);
        os << ")";
        if (std::abs(f.e) != 1) os << "^" << std::abs(f.e);
    }
    std::ostringstream out;
    std::string s = scalar_.str();
    if (!scalar_.is_one() || !anynum) out << s << (anynum ? " * " : "");
    out << num.str();
    if (anyden) out << " / " << den.str();
    return out.str();
}

ZRational divide_known_factor(const ZRational& f, const QScalar& a, const QScalar& b) {
    if (a.is_zero() && b.is_zero()) throw NotAFactor("division by the zero factor");
    ZPoly lin = ZPoly::z_pow(1, a) + ZPoly(b);
    return f / ZRational(lin);
}

}  // namespace qorbit
