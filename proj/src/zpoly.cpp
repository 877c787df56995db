#include "qorbit/zpoly.hpp"

#include "qorbit/errors.hpp"

#include <sstream>
#include <vector>

namespace qorbit {

ZPoly::ZPoly(const QScalar& c) {
    if (!c.is_zero()) terms_.emplace(0, c);
}

ZPoly ZPoly::z_pow(int k, const QScalar& c) {
    if (k < 0) throw std::invalid_argument("ZPoly::z_pow negative exponent");
    ZPoly r;
    if (!c.is_zero()) r.terms_.emplace(k, c);
    return r;
}

bool ZPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
}

int ZPoly::degree() const { return terms_.rbegin()->first; }
int ZPoly::lowdeg() const { return terms_.begin()->first; }
const QScalar& ZPoly::leading() const { return terms_.rbegin()->second; }

QScalar ZPoly::coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? QScalar() : it->second;
}

void ZPoly::set_coeff(int k, const QScalar& c) {
    if (c.is_zero())
        terms_.erase(k);
    else
        terms_[k] = c;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    for (const auto& [k, c] : b.terms_) r.set_coeff(k, r.coeff(k) + c);
    return r;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    for (const auto& [k, c] : b.terms_) r.set_coeff(k, r.coeff(k) - c);
    return r;
}

ZPoly operator-(const ZPoly& a) {
    ZPoly r;
    for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
    return r;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) r.set_coeff(ka + kb, r.coeff(ka + kb) + ca * cb);
    return r;
}

ZPoly operator*(const QScalar& s, const ZPoly& a) {
    ZPoly r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, s * c);
    return r;
}

ZPoly ZPoly::q_shifted(int k) const {
    ZPoly r;
    for (const auto& [j, c] : terms_) r.terms_.emplace(j, QScalar::q_pow(k * j) * c);
    return r;
}

ZPoly ZPoly::derivative() const {
    ZPoly r;
    for (const auto& [j, c] : terms_)
        if (j > 0) r.terms_.emplace(j - 1, QScalar(j) * c);
    return r;
}

ZPoly ZPoly::z_shifted(int k) const {
    ZPoly r;
    for (const auto& [j, c] : terms_) {
        if (j + k < 0) throw std::invalid_argument("ZPoly::z_shifted below zero");
        r.terms_.emplace(j + k, c);
    }
    return r;
}

std::complex<double> ZPoly::eval(std::complex<double> z, std::complex<double> u) const {
    std::complex<double> s{0.0, 0.0};
    for (const auto& [j, c] : terms_) s += c.eval(u) * std::pow(z, j);
    return s;
}

std::string ZPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [j, c] = *it;
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str();
        bool wrap = cs.find(' ') != std::string::npos || cs.find('+') != std::string::npos;
        if (j == 0) {
            os << (wrap ? "(" + cs + ")" : cs);
        } else {
            if (c.is_one())
                ;
            else
                os << (wrap ? "(" + cs + ")" : cs) << "*";
            os << (j == 1 ? "z" : "z^" + std::to_string(j));
        }
    }
    return os.str();
}

std::pair<ZPoly, ZPoly> zpoly_divmod(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw DivisionByZero("zpoly_divmod by zero");
    ZPoly q;
    ZPoly r = a;
    const int db = b.degree();
    const QScalar lb = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        int e = r.degree() - db;
        QScalar c = r.leading() / lb;
        ZPoly t = ZPoly::z_pow(e, c);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

namespace {

// Coprimality certificate: specialize the coefficients at a rational u = u0
// and take the gcd over Q(i). Specializing can only enlarge the gcd, so a
// constant specialized gcd proves the polynomials are coprime over Q(i)(u)
// and the expensive Euclidean loop can be skipped. Returns false when the
// point is unusable (a coefficient pole or a vanishing leading term) or the
// specialized gcd is nonconstant.
bool coprime_at(const ZPoly& a, const ZPoly& b, const Rat& u0) {
    auto specialize = [&u0](const ZPoly& p, std::vector<GaussianRational>& out) {
        out.assign(static_cast<std::size_t>(p.degree()) + 1, GaussianRational(0));
        for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e)] = c.eval_rat(u0);
        return !out.back().is_zero();
    };
    std::vector<GaussianRational> fa, fb;
    try {
        if (!specialize(a, fa) || !specialize(b, fb)) return false;
    } catch (const EvaluationPole&) {
        return false;
    }
    while (!fb.empty()) {
        // remainder of fa mod fb over Q(i)
        while (fa.size() >= fb.size()) {
            GaussianRational f = fa.back() / fb.back();
            for (std::size_t k = 0; k < fb.size(); ++k)
                fa[fa.size() - fb.size() + k] = fa[fa.size() - fb.size() + k] - f * fb[k];
            while (!fa.empty() && fa.back().is_zero()) fa.pop_back();
            if (fa.empty()) break;
        }
        std::swap(fa, fb);
        while (!fb.empty() && fb.back().is_zero()) fb.pop_back();
    }
    return fa.size() == 1;
}

}  // namespace

ZPoly zpoly_gcd(ZPoly a, ZPoly b) {
    if (!a.is_zero() && !b.is_zero() && a.degree() > 0 && b.degree() > 0) {
        for (int u0 : {2, 3, 5})
            if (coprime_at(a, b, Rat(u0))) return ZPoly::one();
    }
    while (!b.is_zero()) {
        auto [q, r] = zpoly_divmod(a, b);
        // renormalize monic each step to keep coefficient growth in check
        if (!r.is_zero()) r = r.leading().inv() * r;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.leading().inv() * a;
}

}  // namespace qorbit
