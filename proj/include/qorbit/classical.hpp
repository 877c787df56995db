#pragma once

#include "qorbit/gaussian.hpp"
#include "qorbit/report.hpp"
#include "qorbit/zrational.hpp"

#include <random>

namespace qorbit {

/// Classical (q = 1) rational functions reuse ZRational with u-free
/// coefficients; scalars come from Q(i).
using CRational = ZRational;

QScalar scalar_from_rat(const Rat& r);
QScalar scalar_from_gaussian(const GaussianRational& g);

/// First-order differential operator f -> p f' + r f.
struct DiffOperator {
    CRational p;
    CRational r;

    CRational apply(const CRational& f) const { return p * f.derivative() + r * f; }

    friend DiffOperator operator-(const DiffOperator& A, const DiffOperator& B) {
        return {A.p - B.p, A.r - B.r};
    }
    friend bool operator==(const DiffOperator& A, const DiffOperator& B) {
        return A.p == B.p && A.r == B.r;
    }
};

/// [A, B] as a first-order operator (the second-order parts cancel).
DiffOperator diff_commutator(const DiffOperator& A, const DiffOperator& B);

enum class ClGen { E, F, H };

/// rho(E) = z^2 d/dz + n z, rho(F) = -d/dz, rho(H) = 2z d/dz + n.
DiffOperator rho(ClGen X, int n);

/// The verbatim printed form with constant term n in rho(E); kept only so
/// its failure of the eigenvalue identity stays documented by a test.
DiffOperator rho_E_literal(int n);

/// psi_m(z) = (z - i)^m (z + i)^{-m-n}, expanded.
CRational classical_psi(int m, int n);

/// Eigen and tridiagonal identities for rho on psi_m, plus the sl2 bracket
/// relations checked on a generic rational test function.
VerificationReport verify_classical(int m, int n);

/// Rational 2x2 matrix with det 1.
struct Matrix2 {
    Rat a, b, c, d;
    Matrix2(Rat a_, Rat b_, Rat c_, Rat d_);
    static Matrix2 identity() { return {1, 0, 0, 1}; }
    Matrix2 inverse() const { return {d, -b, -c, a}; }
    friend Matrix2 operator*(const Matrix2& g, const Matrix2& h);
};

/// Point on the coadjoint orbit x1^2 - x2^2 - x3^2 = k^2, x1 > 0.
struct OrbitPoint {
    Rat x1, x2, x3, k;
    OrbitPoint(Rat x1_, Rat x2_, Rat x3_, Rat k_);
};

/// Coadjoint action under the trace pairing: X -> (g X^t g^-1)^t.
OrbitPoint coadjoint(const Matrix2& g, const OrbitPoint& x);

/// Chart to the upper half-plane: z = (x1 + x2)/(x3 - i k).
GaussianRational chart(const OrbitPoint& x);

/// Mobius action g . z = (c + d z)/(a + b z).
GaussianRational moebius(const Matrix2& g, const GaussianRational& z);

/// Integrated representation rho(g) f(z) = (d - b z)^{-n} f((-c + a z)/(d - b z)).
CRational group_action(const Matrix2& g, int n, const CRational& f);

/// rho(g1) rho(g2) = rho(g1 g2) on the test family {1, z, 1/(z+i)}.
VerificationReport homomorphism_check(const Matrix2& g1, const Matrix2& g2, int n);

/// Random det-1 matrix as a product of elementary shears with small
/// rational parameters.
Matrix2 random_sl2(std::mt19937& rng);

/// Exact nonnegative rational multiple of pi.
struct NormValue {
    Rat coeff;
    double value() const;
    std::string str() const;
};

/// ||psi_m||^2 = 4^{1-n} pi m! (n-2)! / (m+n-1)!; requires n >= 2.
NormValue norm_closed(int m, int n);

}  // namespace qorbit
