#include "qorbit/classical.hpp"

#include "qorbit/errors.hpp"

#include <numbers>
#include <sstream>

namespace qorbit {

QScalar scalar_from_rat(const Rat& r) { return QScalar(GaussianRational(r)); }
QScalar scalar_from_gaussian(const GaussianRational& g) { return QScalar(g); }

DiffOperator diff_commutator(const DiffOperator& A, const DiffOperator& B) {
    return {A.p * B.p.derivative() - B.p * A.p.derivative(),
            A.p * B.r.derivative() - B.p * A.r.derivative()};
}

namespace {

CRational zmono(int k) { return ZRational::z_pow(k); }

}  // namespace

DiffOperator rho(ClGen X, int n) {
    switch (X) {
        case ClGen::E: return {zmono(2), scalar_from_rat(n) * zmono(1)};
        case ClGen::F: return {CRational(-1), CRational()};
        default: return {scalar_from_rat(2) * zmono(1), CRational(n)};
    }
}

DiffOperator rho_E_literal(int n) { return {zmono(2), CRational(n)}; }

CRational classical_psi(int m, int n) {
    if (m < 0 || n < 1) throw std::invalid_argument("classical_psi requires m >= 0, n >= 1");
    const QScalar i = QScalar::i_unit();
    ZPoly zm = ZPoly::z_pow(1) - ZPoly(i);  // z - i
    ZPoly zp = ZPoly::z_pow(1) + ZPoly(i);  // z + i
    ZPoly num = ZPoly::one(), den = ZPoly::one();
    for (int j = 0; j < m; ++j) num *= zm;
    for (int j = 0; j < m + n; ++j) den *= zp;
    return CRational(num, den, 0);
}

VerificationReport verify_classical(int m, int n) {
    VerificationReport rep("classical");
    const QScalar i = QScalar::i_unit();
    const QScalar half = scalar_from_rat(Rat(1, 2));
    CRational pm = classical_psi(m, n);
    CRational pm_lo = (m > 0) ? classical_psi(m - 1, n) : CRational();
    CRational pm_hi = classical_psi(m + 1, n);
    DiffOperator rE = rho(ClGen::E, n), rF = rho(ClGen::F, n), rH = rho(ClGen::H, n);

    // rho(E - F) psi_m = i (2m + n) psi_m
    CRational res = rE.apply(pm) - rF.apply(pm) - i * scalar_from_rat(2 * m + n) * pm;
    rep.add(m, n, "eigen E-F", res.is_zero(), res.is_zero() ? "" : res.str());

    // rho(E) psi_m = (i m / 2) psi_{m-1} + (i (2m+n)/2) psi_m + (i (m+n)/2) psi_{m+1}
    res = rE.apply(pm) - (half * i * scalar_from_rat(m) * pm_lo +
                          half * i * scalar_from_rat(2 * m + n) * pm +
                          half * i * scalar_from_rat(m + n) * pm_hi);
    rep.add(m, n, "tridiag E", res.is_zero(), res.is_zero() ? "" : res.str());

    // rho(F): same with the middle sign flipped
    res = rF.apply(pm) - (half * i * scalar_from_rat(m) * pm_lo -
                          half * i * scalar_from_rat(2 * m + n) * pm +
                          half * i * scalar_from_rat(m + n) * pm_hi);
    rep.add(m, n, "tridiag F", res.is_zero(), res.is_zero() ? "" : res.str());

    // rho(H) psi_m = m psi_{m-1} - (m+n) psi_{m+1}
    res = rH.apply(pm) - (scalar_from_rat(m) * pm_lo - scalar_from_rat(m + n) * pm_hi);
    rep.add(m, n, "tridiag H", res.is_zero(), res.is_zero() ? "" : res.str());

    // bracket relations on a generic rational test function
    CRational test = (ZRational::z_pow(1) - ZRational(QScalar::i_unit())) /
                     (ZRational(ZPoly::z_pow(2) + ZPoly::z_pow(1) + ZPoly(QScalar(3))));
    struct BracketCase {
        const char* name;
        DiffOperator lhs;
        DiffOperator rhs;
    } brackets[] = {
        {"[E,F]=H", diff_commutator(rE, rF), rH},
        {"[H,E]=2E", diff_commutator(rH, rE), {scalar_from_rat(2) * rE.p, scalar_from_rat(2) * rE.r}},
        {"[H,F]=-2F", diff_commutator(rH, rF), {scalar_from_rat(-2) * rF.p, scalar_from_rat(-2) * rF.r}},
    };
    for (const auto& bc : brackets) {
        CRational r2 = bc.lhs.apply(test) - bc.rhs.apply(test);
        rep.add(m, n, bc.name, r2.is_zero(), r2.is_zero() ? "" : r2.str());
    }
    return rep;
}

Matrix2::Matrix2(Rat a_, Rat b_, Rat c_, Rat d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (a * d - b * c != 1) throw InvariantViolation("Matrix2 determinant must be 1");
}

Matrix2 operator*(const Matrix2& g, const Matrix2& h) {
    return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c,
            g.c * h.b + g.d * h.d};
}

OrbitPoint::OrbitPoint(Rat x1_, Rat x2_, Rat x3_, Rat k_)
    : x1(std::move(x1_)), x2(std::move(x2_)), x3(std::move(x3_)), k(std::move(k_)) {
    if (k <= 0) throw InvariantViolation("OrbitPoint requires k > 0");
    if (x1 <= 0) throw InvariantViolation("OrbitPoint requires x1 > 0");
    if (x1 * x1 - x2 * x2 - x3 * x3 != k * k)
        throw InvariantViolation("OrbitPoint off the orbit x1^2 - x2^2 - x3^2 = k^2");
}

OrbitPoint coadjoint(const Matrix2& g, const OrbitPoint& x) {
    // X = [[x3, x1+x2], [-x1+x2, -x3]]; X' = (g X^t g^-1)^t
    Rat t11 = x.x3, t12 = -x.x1 + x.x2, t21 = x.x1 + x.x2, t22 = -x.x3;  // X^t
    Matrix2 gi = g.inverse();
    // M = g * X^t
    Rat m11 = g.a * t11 + g.b * t21, m12 = g.a * t12 + g.b * t22;
    Rat m21 = g.c * t11 + g.d * t21, m22 = g.c * t12 + g.d * t22;
    // P = M * g^-1
    Rat p11 = m11 * gi.a + m12 * gi.c, p12 = m11 * gi.b + m12 * gi.d;
    Rat p21 = m21 * gi.a + m22 * gi.c, p22 = m21 * gi.b + m22 * gi.d;
    // transpose and read coordinates back
    Rat q12 = p21, q21 = p12, q11 = p11;
    Rat nx1 = (q12 - q21) / 2, nx2 = (q12 + q21) / 2, nx3 = q11;
    return OrbitPoint(nx1, nx2, nx3, x.k);
}

GaussianRational chart(const OrbitPoint& x) {
    // (x1 + x2)/(x3 - i k) = (x1 + x2)(x3 + i k)/(x3^2 + k^2)
    Rat s = x.x1 + x.x2;
    Rat d = x.x3 * x.x3 + x.k * x.k;
    return {s * x.x3 / d, s * x.k / d};
}

GaussianRational moebius(const Matrix2& g, const GaussianRational& z) {
    GaussianRational num = GaussianRational(g.c) + GaussianRational(g.d) * z;
    GaussianRational den = GaussianRational(g.a) + GaussianRational(g.b) * z;
    if (den.is_zero()) throw EvaluationPole("Mobius pole");
    return num / den;
}

namespace {

CRational zr_pow(const CRational& f, int e) {
    CRational r(1);
    CRational base = (e >= 0) ? f : CRational(1) / f;
    for (int k = 0; k < std::abs(e); ++k) r *= base;
    return r;
}

// N(P/Q) * Q^{deg N} for a polynomial N
ZPoly poly_compose_homog(const ZPoly& N, const ZPoly& P, const ZPoly& Q) {
    if (N.is_zero()) return ZPoly();
    ZPoly out;
    int d = N.degree();
    for (const auto& [j, c] : N.terms()) {
        ZPoly t(c);
        for (int k = 0; k < j; ++k) t *= P;
        for (int k = 0; k < d - j; ++k) t *= Q;
        out += t;
    }
    return out;
}

}  // namespace

CRational group_action(const Matrix2& g, int n, const CRational& f) {
    if (n < 1) throw std::invalid_argument("group_action requires n >= 1");
    ZPoly P = ZPoly::z_pow(1, scalar_from_rat(g.a)) - ZPoly(scalar_from_rat(g.c));  // -c + a z
    ZPoly Q = ZPoly(scalar_from_rat(g.d)) - ZPoly::z_pow(1, scalar_from_rat(g.b));  // d - b z
    if (f.is_zero()) return f;
    // f(w) with w = P/Q, f = z^s N/D
    int dN = f.num().is_zero() ? 0 : f.num().degree();
    int dD = f.den().degree();
    ZPoly nw = poly_compose_homog(f.num(), P, Q);
    ZPoly dw = poly_compose_homog(f.den(), P, Q);
    // rebalance the Q-homogenization: N(w) = nw / Q^dN, D(w) = dw / Q^dD
    ZPoly qn = ZPoly::one();
    int excess = dD - dN;  // multiply nw by Q^{excess} when positive, dw otherwise
    for (int k = 0; k < std::abs(excess); ++k) qn *= Q;
    CRational fw = (excess >= 0) ? CRational(nw * qn, dw, 0) : CRational(nw, dw * qn, 0);
    fw *= zr_pow(CRational(P, Q, 0), f.zshift());
    // cocycle (d - b z)^{-n}
    ZPoly qden = ZPoly::one();
    for (int k = 0; k < n; ++k) qden *= Q;
    return fw * CRational(ZPoly::one(), qden, 0);
}

VerificationReport homomorphism_check(const Matrix2& g1, const Matrix2& g2, int n) {
    VerificationReport rep("group");
    std::vector<std::pair<std::string, CRational>> family = {
        {"1", CRational(1)},
        {"z", ZRational::z_pow(1)},
        {"1/(z+i)", CRational(ZPoly::one(), ZPoly::z_pow(1) + ZPoly(QScalar::i_unit()), 0)},
    };
    Matrix2 g12 = g1 * g2;
    for (const auto& [name, f] : family) {
        CRational lhs = group_action(g1, n, group_action(g2, n, f));
        CRational rhs = group_action(g12, n, f);
        CRational res = lhs - rhs;
        rep.add(-1, n, "homomorphism on " + name, res.is_zero(), res.is_zero() ? "" : res.str());
    }
    return rep;
}

Matrix2 random_sl2(std::mt19937& rng) {
    std::uniform_int_distribution<int> numd(-4, 4);
    std::uniform_int_distribution<int> dend(1, 4);
    std::uniform_int_distribution<int> lend(2, 4);
    Matrix2 g = Matrix2::identity();
    int len = lend(rng);
    for (int s = 0; s < len; ++s) {
        Rat t(numd(rng), dend(rng));
        if (s % 2 == 0)
            g = g * Matrix2(1, t, 0, 1);
        else
            g = g * Matrix2(1, 0, t, 1);
    }
    return g;
}

double NormValue::value() const { return rat_to_double(coeff) * std::numbers::pi; }

std::string NormValue::str() const {
    if (coeff == 0) return "0";
    std::string num = (numerator(coeff) == 1) ? "pi" : numerator(coeff).str() + "*pi";
    if (denominator(coeff) == 1) return num;
    return num + "/" + denominator(coeff).str();
}

NormValue norm_closed(int m, int n) {
    if (n < 2) throw DivergentIntegral("norm diverges for n < 2");
    if (m < 0) throw std::invalid_argument("norm_closed requires m >= 0");
    // 4^{1-n} m! (n-2)! / (m+n-1)!
    BigInt p = 1;
    for (int k = 2; k <= m; ++k) p *= k;
    for (int k = 2; k <= n - 2; ++k) p *= k;
    BigInt r = 1;
    for (int k = 2; k <= m + n - 1; ++k) r *= k;
    for (int k = 0; k < n - 1; ++k) r *= 4;
    return NormValue{Rat(p, r)};
}

}  // namespace qorbit
