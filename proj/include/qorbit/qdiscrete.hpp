#pragma once

#include "qorbit/factoredz.hpp"
#include "qorbit/gaussian.hpp"
#include "qorbit/qdiff_operator.hpp"
#include "qorbit/report.hpp"

#include <array>

namespace qorbit {

/// Weight n >= 1 (sigma = -n) and basis index m >= 0.
struct QSeriesParams {
    int n;
    int m;
    QSeriesParams(int m_, int n_);
};

/// Coefficients of psi_{m-1}, psi_m, psi_{m+1}; alpha = 0 at m = 0.
struct TridiagonalCoeffs {
    QScalar alpha;
    QScalar beta;
    QScalar gamma;

    friend bool operator==(const TridiagonalCoeffs& a, const TridiagonalCoeffs& b) {
        return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma;
    }
};

enum class TriOp { EKinv, FKinv, Kinv2 };
const char* tri_op_name(TriOp op);

/// Basis function psi_m(z) = prod_{j<m}(q^{2(j+n)} z - i) / prod_{j<m+n}(q^{2(j-m)} z + i),
/// kept in factored form.
FactoredZ psi(const QSeriesParams& p);

/// Builds q^{2n} E K - F K from the sigma = -n generators and checks the
/// eigenvalue identity with eigenvalue i q^n [2m+n]_q.
VerificationReport compact_eigencheck(const QSeriesParams& p);

/// The eigenvalue i q^n [2m+n]_q of the compact generator on psi_m.
QScalar compact_eigenvalue(const QSeriesParams& p);

/// Independent oracle: expands apply(A, psi_m)/psi_m against the exact
/// ratios psi_{m+-1}/psi_m and solves the resulting linear system over
/// Q(i)(u). Throws NotInTridiagonalSpan when the image leaves the span.
TridiagonalCoeffs decompose_tridiagonal(const QDiffOperator& A, const QSeriesParams& p);

/// Closed-form coefficient triples for EK^-1, FK^-1, K^-2. The middle K^-2
/// entry carries q^{4m+n}; see expected_coeffs_literal for the variant with
/// that exponent frozen at its n = 2 value.
TridiagonalCoeffs expected_coeffs(TriOp which, const QSeriesParams& p);

/// Variant of expected_coeffs with the middle K^-2 exponent written as
/// q^{4m+2}. Disagrees with the exact decomposition whenever n != 2; kept as
/// a regression against reintroducing that form.
TridiagonalCoeffs expected_coeffs_literal(TriOp which, const QSeriesParams& p);

/// decompose_tridiagonal vs expected_coeffs for all three operators.
VerificationReport verify_tridiagonal(const QSeriesParams& p);

struct ClassicalTriple {
    std::array<GaussianRational, 3> value;
    bool matches_classical = false;
};

/// Entrywise u = 1 limit of expected_coeffs, compared against the
/// undeformed triples (im/2, +-i(2m+n)/2, i(m+n)/2) and (0, 1, 0).
ClassicalTriple classical_limit_coeffs(TriOp which, const QSeriesParams& p);

}  // namespace qorbit
