#include "qorbit/ulaurent.hpp"

#include "qorbit/errors.hpp"

#include <cstdint>
#include <sstream>
#include <vector>

namespace qorbit {

std::string gaussian_to_string(const GaussianRational& g) {
    if (g.is_zero()) return "0";
    std::ostringstream os;
    if (g.re != 0) {
        os << rat_to_string(g.re);
        if (g.im > 0) os << "+";
    }
    if (g.im != 0) {
        if (g.im == 1)
            os << "i";
        else if (g.im == -1)
            os << "-i";
        else
            os << rat_to_string(g.im) << "*i";
    }
    return os.str();
}

ULaurent::ULaurent(const GaussianRational& c) {
    if (!c.is_zero()) terms_.emplace(0, c);
}

ULaurent ULaurent::u_pow(int k, const GaussianRational& c) {
    ULaurent r;
    if (!c.is_zero()) r.terms_.emplace(k, c);
    return r;
}

bool ULaurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
}

int ULaurent::lowdeg() const { return terms_.begin()->first; }
int ULaurent::topdeg() const { return terms_.rbegin()->first; }
const GaussianRational& ULaurent::leading() const { return terms_.rbegin()->second; }

GaussianRational ULaurent::coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

void ULaurent::set_coeff(int k, const GaussianRational& c) {
    if (c.is_zero())
        terms_.erase(k);
    else
        terms_[k] = c;
}

ULaurent operator+(const ULaurent& a, const ULaurent& b) {
    ULaurent r = a;
    for (const auto& [k, c] : b.terms_) r.set_coeff(k, r.coeff(k) + c);
    return r;
}

ULaurent operator-(const ULaurent& a, const ULaurent& b) {
    ULaurent r = a;
    for (const auto& [k, c] : b.terms_) r.set_coeff(k, r.coeff(k) - c);
    return r;
}

ULaurent operator-(const ULaurent& a) {
    ULaurent r;
    for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
    return r;
}

ULaurent operator*(const ULaurent& a, const ULaurent& b) {
    ULaurent r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) r.set_coeff(ka + kb, r.coeff(ka + kb) + ca * cb);
    return r;
}

ULaurent ULaurent::shifted(int k) const {
    ULaurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
}

ULaurent ULaurent::star_conj() const {
    ULaurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c.conj());
    return r;
}

GaussianRational ULaurent::eval_one() const {
    GaussianRational s(0);
    for (const auto& [e, c] : terms_) s = s + c;
    return s;
}

GaussianRational ULaurent::eval_rat(const Rat& u0) const {
    if (u0 == 0) throw EvaluationPole("ULaurent::eval_rat at u = 0");
    GaussianRational s(0);
    for (const auto& [e, c] : terms_) {
        Rat p(1);
        for (int k = 0; k < std::abs(e); ++k) p *= u0;
        if (e < 0) p = Rat(1) / p;
        s = s + c * GaussianRational(p);
    }
    return s;
}

std::complex<double> ULaurent::eval(std::complex<double> u) const {
    std::complex<double> s{0.0, 0.0};
    for (const auto& [e, c] : terms_) {
        if (e < 0 && u == std::complex<double>{0.0, 0.0})
            throw EvaluationPole("negative u-power at u = 0");
        s += c.to_complex() * std::pow(u, e);
    }
    return s;
}

std::string ULaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // decreasing exponent order
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << " + ";
        first = false;
        bool simple = c.is_real() || c.re == 0;
        std::string cs = gaussian_to_string(c);
        if (e == 0) {
            os << (simple ? cs : "(" + cs + ")");
        } else {
            if (c.is_one())
                os << "u^" << e;
            else
                os << (simple ? cs : "(" + cs + ")") << "*u^" << e;
        }
    }
    return os.str();
}

std::pair<ULaurent, ULaurent> poly_divmod(const ULaurent& a, const ULaurent& b) {
    if (b.is_zero()) throw DivisionByZero("poly_divmod by zero");
    if (!a.is_polynomial() || !b.is_polynomial())
        throw std::invalid_argument("poly_divmod requires polynomial arguments");
    ULaurent q;
    ULaurent r = a;
    const int db = b.topdeg();
    const GaussianRational lb = b.leading();
    while (!r.is_zero() && r.topdeg() >= db) {
        int e = r.topdeg() - db;
        GaussianRational c = r.leading() / lb;
        ULaurent t = ULaurent::u_pow(e, c);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

namespace {

// Coprimality certificate mod p = 2^31 - 1 (p = 3 mod 4, so i generates the
// field F_{p^2} over F_p). A constant gcd of the reductions proves the exact
// gcd is 1 and lets poly_gcd skip a Euclidean loop whose rational
// coefficients would otherwise balloon. Conservative: any unreducible input
// (a denominator divisible by p, or a vanishing leading term) disables the
// shortcut.
constexpr std::uint64_t kP = 2147483647ULL;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = (unsigned __int128)r * base % kP;
        base = (unsigned __int128)base * base % kP;
        e >>= 1;
    }
    return r;
}

struct Fp2 {
    std::uint64_t a = 0, b = 0;  // a + b*i
    bool is_zero() const { return a == 0 && b == 0; }
};

Fp2 fp2_mul(const Fp2& x, const Fp2& y) {
    std::uint64_t aa = (unsigned __int128)x.a * y.a % kP;
    std::uint64_t bb = (unsigned __int128)x.b * y.b % kP;
    std::uint64_t ab = (unsigned __int128)x.a * y.b % kP;
    std::uint64_t ba = (unsigned __int128)x.b * y.a % kP;
    return {(aa + kP - bb) % kP, (ab + ba) % kP};
}

Fp2 fp2_sub(const Fp2& x, const Fp2& y) { return {(x.a + kP - y.a) % kP, (x.b + kP - y.b) % kP}; }

Fp2 fp2_inv(const Fp2& x) {
    // norm (a^2 + b^2) is in F_p*, invertible since x != 0
    std::uint64_t n = ((unsigned __int128)x.a * x.a + (unsigned __int128)x.b * x.b) % kP;
    std::uint64_t ninv = pow_mod(n, kP - 2);
    return {static_cast<std::uint64_t>((unsigned __int128)x.a * ninv % kP),
            static_cast<std::uint64_t>((unsigned __int128)((kP - x.b) % kP) * ninv % kP)};
}

bool reduce_rat(const Rat& r, std::uint64_t& out) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    BigInt dm = den % BigInt(kP);
    if (dm == 0) return false;
    BigInt nm = num % BigInt(kP);
    if (nm < 0) nm += BigInt(kP);
    std::uint64_t dv = dm.convert_to<std::uint64_t>();
    out = (unsigned __int128)nm.convert_to<std::uint64_t>() * pow_mod(dv, kP - 2) % kP;
    return true;
}

bool reduce_poly(const ULaurent& f, std::vector<Fp2>& out) {
    out.assign(static_cast<std::size_t>(f.topdeg()) + 1, Fp2{});
    for (const auto& [e, c] : f.terms()) {
        Fp2 v;
        if (!reduce_rat(c.re, v.a) || !reduce_rat(c.im, v.b)) return false;
        out[static_cast<std::size_t>(e)] = v;
    }
    return !out.back().is_zero();
}

bool coprime_mod_p(const ULaurent& a, const ULaurent& b) {
    std::vector<Fp2> fa, fb;
    if (!reduce_poly(a, fa) || !reduce_poly(b, fb)) return false;
    while (!fb.empty()) {
        while (fa.size() >= fb.size()) {
            Fp2 f = fp2_mul(fa.back(), fp2_inv(fb.back()));
            for (std::size_t k = 0; k < fb.size(); ++k) {
                std::size_t idx = fa.size() - fb.size() + k;
                fa[idx] = fp2_sub(fa[idx], fp2_mul(f, fb[k]));
            }
            while (!fa.empty() && fa.back().is_zero()) fa.pop_back();
            if (fa.empty()) break;
        }
        std::swap(fa, fb);
        while (!fb.empty() && fb.back().is_zero()) fb.pop_back();
    }
    return fa.size() == 1;
}

}  // namespace

ULaurent poly_gcd(ULaurent a, ULaurent b) {
    if (!a.is_zero() && !b.is_zero() && a.topdeg() > 0 && b.topdeg() > 0 &&
        coprime_mod_p(a, b))
        return ULaurent::one();
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    // normalize monic
    GaussianRational inv = a.leading().inv();
    ULaurent m;
    for (const auto& [e, c] : a.terms()) m.set_coeff(e, c * inv);
    return m;
}

}  // namespace qorbit
