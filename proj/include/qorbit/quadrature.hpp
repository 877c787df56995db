#pragma once

#include <complex>
#include <vector>

namespace qorbit {

struct QuadratureResult {
    double value = 0.0;
    std::complex<double> complex_value{0.0, 0.0};
    double error_estimate = 0.0;
    long evaluations = 0;
};

/// Numerical L^2 pairing of psi_m and psi_mp with weight y^{n-2} over the
/// upper half-plane, via tan-mapped tensor Gauss-Legendre panels refined
/// dyadically until two successive levels agree to tol. threads <= 1 runs
/// the serial reference loop; otherwise panels fan out over OpenMP.
QuadratureResult inner_quadrature(int m, int mp, int n, double tol, int threads = 1);

/// ||psi_m||^2 by quadrature (the diagonal pairing).
QuadratureResult norm_quadrature(int m, int n, double tol, int threads = 1);

/// Nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussRule gauss_legendre(int npts);

}  // namespace qorbit
