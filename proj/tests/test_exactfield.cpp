#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qorbit/errors.hpp"
#include "qorbit/factoredz.hpp"
#include "qorbit/qscalar.hpp"
#include "qorbit/zrational.hpp"

#include <random>

using namespace qorbit;

namespace {

QScalar q_pow(int k) { return QScalar::q_pow(k); }

ZRational one_over_z_plus_i() {
    return ZRational(ZPoly::one(), ZPoly::z_pow(1) + ZPoly(QScalar::i_unit()), 0);
}

}  // namespace

TEST_CASE("gaussian rationals form a field") {
    GaussianRational a(Rat(2, 3), Rat(-1, 2)), b(Rat(0), Rat(4));
    CHECK((a * a.inv()).is_one());
    CHECK(a.conj().conj() == a);
    CHECK((a / b) * b == a);
    CHECK_THROWS_AS(GaussianRational(0).inv(), DivisionByZero);
}

TEST_CASE("scalar arithmetic identities") {
    QScalar dq = q_pow(1) - q_pow(-1);
    CHECK((dq / dq).is_one());

    // (1+q^4) * q^-2 has u-support {-4, 4}
    QScalar v = (QScalar(1) + q_pow(2)) * q_pow(-1);
    CHECK(v == q_pow(-1) + q_pow(1));

    // (q^2 - q^-2)/(q - q^-1) = q + q^-1, the division oracle in u
    QScalar lhs = (q_pow(2) - q_pow(-2)) / dq;
    CHECK(lhs == q_pow(1) + q_pow(-1));

    CHECK_THROWS_AS(QScalar(1) / QScalar(), DivisionByZero);
}

TEST_CASE("u-support of (1+q^4)*q^-2") {
    QScalar v = (QScalar(1) + q_pow(4)) * q_pow(-2);
    CHECK(v == q_pow(-2) + q_pow(2));
    CHECK(v.den().is_one());
    CHECK(!v.num().coeff(-4).is_zero());
    CHECK(!v.num().coeff(4).is_zero());
    CHECK(v.num().coeff(0).is_zero());
}

TEST_CASE("q_number values") {
    CHECK(q_number(0, 1).is_zero());
    CHECK(q_number(1, 1).is_one());
    CHECK(q_number(0, 2).is_zero());
    CHECK(q_number(1, 2).is_one());
    CHECK(q_number(2, 1) == q_pow(1) + q_pow(-1));
    // expansion of (q^4 - q^-4)/(q^2 - q^-2) by the division oracle
    QScalar oracle = (q_pow(2) - q_pow(-2)) / (q_pow(1) - q_pow(-1));
    (void)oracle;
    CHECK(q_number(2, 2) == q_pow(2) + q_pow(-2));
    CHECK(q_number(-3, 1) == -q_number(3, 1));
}

TEST_CASE("substitution at u = 1") {
    QScalar f = q_pow(1) * q_pow(1) / (QScalar(1) + q_pow(2));
    CHECK(f.eval_one() == GaussianRational(Rat(1, 2)));
    CHECK(q_number(5, 1).eval_one() == GaussianRational(5));
    QScalar g = (q_pow(1) - q_pow(-1)) * q_pow(3) * (q_pow(1) + q_pow(-1));
    CHECK(g.eval_one().is_zero());
    // pole detection
    QScalar pole = QScalar(1) / (QScalar(1) - q_pow(1));
    CHECK_THROWS_AS(pole.eval_one(), EvaluationPole);
}

TEST_CASE("numeric substitution") {
    QScalar f = q_pow(1);  // u^2
    auto v = f.eval({0.0, 1.0});
    CHECK(std::abs(v - std::complex<double>{-1.0, 0.0}) < 1e-14);
}

TEST_CASE("q_shift basics") {
    ZRational f = one_over_z_plus_i();
    ZRational shifted = f.q_shifted(1);
    // 1/(qz + i): canonical den is monic, so compare functionally
    ZRational expect = ZRational(ZPoly::one(), ZPoly::z_pow(1, q_pow(1)) + ZPoly(QScalar::i_unit()), 0);
    CHECK(shifted == expect);

    ZRational z3 = ZRational::z_pow(3);
    CHECK(z3.q_shifted(-1) == q_pow(-3) * ZRational::z_pow(3));

    ZRational g = ZRational(ZPoly::z_pow(1) - ZPoly(QScalar::i_unit()),
                            ZPoly::z_pow(1) + ZPoly(QScalar::i_unit()), 0);
    CHECK(g.q_shifted(1).q_shifted(-1) == g);
}

TEST_CASE("factored expand and division") {
    FactoredZ f;
    f.times_factor(QScalar(1), -QScalar::i_unit(), 1);
    f.times_factor(QScalar(1), QScalar::i_unit(), -1);
    ZRational e = f.expand();
    ZRational expect = ZRational(ZPoly::z_pow(1) - ZPoly(QScalar::i_unit()),
                                 ZPoly::z_pow(1) + ZPoly(QScalar::i_unit()), 0);
    CHECK(e == expect);

    CHECK(FactoredZ().expand().is_one());

    // (z^2+1)/(z+i) = z - i
    ZRational q2 = ZRational(ZPoly::z_pow(2) + ZPoly::one());
    ZRational d = divide_known_factor(q2, QScalar(1), QScalar::i_unit());
    CHECK(d == ZRational(ZPoly::z_pow(1) - ZPoly(QScalar::i_unit())));

    CHECK_THROWS_AS(divide_known_factor(q2, QScalar(), QScalar()), NotAFactor);
}

TEST_CASE("expand/refactor round trip recovers the scalar") {
    FactoredZ f(q_pow(2));
    f.times_factor(q_pow(2), -QScalar::i_unit(), 1);
    f.times_factor(QScalar(1), QScalar::i_unit(), -2);
    ZRational e = f.expand();
    ZRational r = e;
    for (const auto& fac : f.factors()) {
        for (int k = 0; k < std::abs(fac.e); ++k) {
            if (fac.e > 0)
                r = divide_known_factor(r, fac.a, fac.b);
            else
                r *= ZRational(ZPoly::z_pow(1, fac.a) + ZPoly(fac.b));
        }
    }
    CHECK(r == ZRational(f.scalar()));
}

TEST_CASE("zero rational is canonical") {
    ZRational z(ZPoly(), ZPoly::one(), 5);
    CHECK(z.is_zero());
    CHECK(z.zshift() == 0);
    CHECK(z.den().is_one());
}

TEST_CASE("random field properties") {
    std::mt19937 rng(7);
    auto rand_q = [&rng]() {
        std::uniform_int_distribution<int> cd(-3, 3), ed(-3, 3);
        ULaurent n, d;
        n.set_coeff(ed(rng), GaussianRational(Rat(cd(rng)), Rat(cd(rng))));
        n.set_coeff(ed(rng), GaussianRational(Rat(cd(rng)), Rat(1)));
        d.set_coeff(0, GaussianRational(1));
        d.set_coeff(1 + std::abs(ed(rng)), GaussianRational(Rat(cd(rng))));
        return QScalar(n, d);
    };
    for (int i = 0; i < 200; ++i) {
        QScalar a = rand_q(), b = rand_q(), c = rand_q();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        if (!a.is_zero()) CHECK((a * a.inv()).is_one());
        CHECK(QScalar(a.num(), a.den()) == a);
    }
}

TEST_CASE("serialization grammar") {
    QScalar v = QScalar::i_unit() * q_pow(2) / (QScalar(1) + q_pow(4));
    CHECK(v.str() == "(i*u^4)/(u^8 + 1)");
}
