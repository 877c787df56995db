#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qorbit/classical.hpp"
#include "qorbit/errors.hpp"
#include "qorbit/qdiscrete.hpp"

using namespace qorbit;

namespace {

QScalar q_pow(int k) { return QScalar::q_pow(k); }
const QScalar I = QScalar::i_unit();

ZRational psi_expanded(int m, int n) { return psi(QSeriesParams(m, n)).expand(); }

}  // namespace

TEST_CASE("psi factored structure") {
    QSeriesParams p01(0, 1);
    FactoredZ f = psi(p01);
    CHECK(f.factors().size() == 1);
    CHECK(f.expand() == ZRational(ZPoly::one(), ZPoly::z_pow(1) + ZPoly(I), 0));

    QSeriesParams p11(1, 1);
    FactoredZ g = psi(p11);
    int numf = 0, denf = 0;
    for (const auto& fac : g.factors()) (fac.e > 0 ? numf : denf) += std::abs(fac.e);
    CHECK(numf == 1);
    CHECK(denf == 2);
    // (q^2 z - i)/((q^-2 z + i)(z + i))
    ZPoly den = (ZPoly::z_pow(1, q_pow(-2)) + ZPoly(I)) * (ZPoly::z_pow(1) + ZPoly(I));
    ZRational want(ZPoly::z_pow(1, q_pow(2)) - ZPoly(I), den, 0);
    CHECK(g.expand() == want);
}

TEST_CASE("psi classical limit matches the undeformed basis") {
    for (int n = 1; n <= 4; ++n) {
        for (int m = 0; m <= 4; ++m) {
            ZRational e = psi_expanded(m, n);
            ZPoly num, den;
            for (const auto& [j, c] : e.num().terms()) num.set_coeff(j, QScalar(c.eval_one()));
            for (const auto& [j, c] : e.den().terms()) den.set_coeff(j, QScalar(c.eval_one()));
            CHECK(ZRational(num, den, e.zshift()) == classical_psi(m, n));
        }
    }
}

TEST_CASE("compact eigencheck examples") {
    CHECK(compact_eigenvalue({0, 1}) == I * q_pow(1));
    CHECK(compact_eigencheck({0, 1}).passed());
    CHECK(compact_eigencheck({2, 3}).passed());
    // eigenvalue at u = 1 is i(2m+n)
    CHECK(compact_eigenvalue({3, 2}).eval_one() == GaussianRational(Rat(0), Rat(8)));
}

TEST_CASE("decompose_tridiagonal oracle cases") {
    GeneratorSet gs = generators(-1);
    QSeriesParams p01(0, 1);

    TridiagonalCoeffs t = decompose_tridiagonal(op_mul(gs.E, gs.Kinv), p01);
    QScalar expect = I * q_pow(2) / (QScalar(1) + q_pow(4));
    CHECK(t.alpha.is_zero());
    CHECK(t.beta == expect);
    CHECK(t.gamma == expect);

    TridiagonalCoeffs id = decompose_tridiagonal(QDiffOperator::identity(), {2, 2});
    CHECK(id.alpha.is_zero());
    CHECK(id.beta.is_one());
    CHECK(id.gamma.is_zero());

    // K^-2 at u = 1 degenerates to the identity
    TridiagonalCoeffs k2 = decompose_tridiagonal(op_mul(gs.Kinv, gs.Kinv), p01);
    CHECK(k2.alpha.eval_one().is_zero());
    CHECK(k2.beta.eval_one().is_one());
    CHECK(k2.gamma.eval_one().is_zero());
}

TEST_CASE("an operator outside the tridiagonal span is rejected") {
    // z^3 S^0 throws the image far from span{psi_{m-1}, psi_m, psi_{m+1}}
    QDiffOperator bad = QDiffOperator::term(3, 0, QScalar(1));
    CHECK_THROWS_AS(decompose_tridiagonal(bad, QSeriesParams(0, 1)), NotInTridiagonalSpan);
}

TEST_CASE("expected_coeffs examples") {
    QSeriesParams p01(0, 1);
    TridiagonalCoeffs t = expected_coeffs(TriOp::EKinv, p01);
    QScalar expect = I * q_pow(2) / (QScalar(1) + q_pow(4));
    CHECK(t.alpha.is_zero());
    CHECK(t.beta == expect);
    CHECK(t.gamma == expect);

    // K^-2 middle entry at u = 1 is 1
    for (int n = 1; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m)
            CHECK(expected_coeffs(TriOp::Kinv2, {m, n}).beta.eval_one().is_one());
}

TEST_CASE("classical limit triples") {
    for (int n = 1; n <= 4; ++n) {
        for (int m = 0; m <= 6; ++m) {
            QSeriesParams p(m, n);
            ClassicalTriple e = classical_limit_coeffs(TriOp::EKinv, p);
            CHECK(e.matches_classical);
            CHECK(e.value[0] == GaussianRational(Rat(0), Rat(m, 2)));
            CHECK(e.value[1] == GaussianRational(Rat(0), Rat(2 * m + n, 2)));
            CHECK(e.value[2] == GaussianRational(Rat(0), Rat(m + n, 2)));
            ClassicalTriple f = classical_limit_coeffs(TriOp::FKinv, p);
            CHECK(f.matches_classical);
            // E and F triples differ only in the sign of the middle entry
            CHECK(f.value[0] == e.value[0]);
            CHECK(f.value[1] == -e.value[1]);
            CHECK(f.value[2] == e.value[2]);
            CHECK(classical_limit_coeffs(TriOp::Kinv2, p).matches_classical);
        }
    }
}

TEST_CASE("verify_tridiagonal passes on sample cells") {
    CHECK(verify_tridiagonal({0, 1}).passed());
    CHECK(verify_tridiagonal({5, 2}).passed());
    CHECK(verify_tridiagonal({3, 4}).passed());
}

TEST_CASE("negative control: perturbed transcription mismatches") {
    QSeriesParams p(1, 2);
    GeneratorSet gs = generators(-2);
    TridiagonalCoeffs derived = decompose_tridiagonal(op_mul(gs.E, gs.Kinv), p);
    TridiagonalCoeffs bad = expected_coeffs(TriOp::EKinv, p);
    bad.beta = q_pow(1) * bad.beta;
    CHECK(!(derived == bad));
    CHECK(derived == expected_coeffs(TriOp::EKinv, p));
}

TEST_CASE("frozen-exponent K^-2 variant disagrees off n = 2") {
    CHECK(expected_coeffs_literal(TriOp::Kinv2, {1, 2}) == expected_coeffs(TriOp::Kinv2, {1, 2}));
    QSeriesParams p(0, 1);
    GeneratorSet gs = generators(-1);
    TridiagonalCoeffs derived = decompose_tridiagonal(op_mul(gs.Kinv, gs.Kinv), p);
    CHECK(derived == expected_coeffs(TriOp::Kinv2, p));
    CHECK(!(derived == expected_coeffs_literal(TriOp::Kinv2, p)));
    // only the middle entry moves
    TridiagonalCoeffs lit = expected_coeffs_literal(TriOp::Kinv2, p);
    CHECK(lit.alpha == derived.alpha);
    CHECK(lit.gamma == derived.gamma);
    CHECK(lit.beta == q_pow(1) * derived.beta);
}

TEST_CASE("m = 0 boundary has alpha = 0") {
    for (int n = 1; n <= 4; ++n) {
        QSeriesParams p(0, n);
        GeneratorSet gs = generators(-n);
        for (TriOp which : {TriOp::EKinv, TriOp::FKinv, TriOp::Kinv2}) {
            CHECK(expected_coeffs(which, p).alpha.is_zero());
        }
        CHECK(decompose_tridiagonal(op_mul(gs.E, gs.Kinv), p).alpha.is_zero());
    }
}

TEST_CASE("denominators are structurally nonzero") {
    for (int n = 1; n <= 6; ++n) {
        for (int m = 0; m <= 12; ++m) {
            for (int off : {-2, 0, 2}) {
                QScalar d = QScalar(1) + q_pow(4 * m + 2 * n + off);
                CHECK(!d.is_zero());
            }
        }
    }
}

TEST_CASE("invalid parameters rejected") {
    CHECK_THROWS_AS(QSeriesParams(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(QSeriesParams(-1, 1), std::invalid_argument);
}
