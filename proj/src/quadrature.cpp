#include "qorbit/quadrature.hpp"

#include "qorbit/errors.hpp"

#include <omp.h>

#include <cmath>
#include <numbers>

namespace qorbit {

GaussRule gauss_legendre(int npts) {
    GaussRule rule;
    rule.nodes.resize(npts);
    rule.weights.resize(npts);
    for (int i = 0; i < (npts + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (npts + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < npts; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = npts * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[npts - 1 - i] = x;
        rule.weights[i] = rule.weights[npts - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return rule;
}

namespace {

constexpr int kGaussOrder = 12;
constexpr long kEvalBudget = 1L << 22;

// psi_m(z) conj(psi_mp(z)) y^{n-2} at z = x + i y, closed form
std::complex<double> integrand(int m, int mp, int n, double x, double y) {
    std::complex<double> z{x, y};
    std::complex<double> zm = z - std::complex<double>{0.0, 1.0};
    std::complex<double> zp = z + std::complex<double>{0.0, 1.0};
    std::complex<double> a = std::pow(zm, m) * std::pow(zp, -m - n);
    std::complex<double> b = std::pow(zm, mp) * std::pow(zp, -mp - n);
    return a * std::conj(b) * std::pow(y, n - 2);
}

// One panel of the tan-mapped double integral: s in [s0, s1], t in [t0, t1].
std::complex<double> panel_integral(int m, int mp, int n, const GaussRule& rule, double s0,
                                    double s1, double t0, double t1) {
    const double hs = 0.5 * (s1 - s0), cs = 0.5 * (s1 + s0);
    const double ht = 0.5 * (t1 - t0), ct = 0.5 * (t1 + t0);
    std::complex<double> acc{0.0, 0.0};
    for (int i = 0; i < kGaussOrder; ++i) {
        const double s = cs + hs * rule.nodes[i];
        const double x = std::tan(s);
        const double jx = 1.0 / (std::cos(s) * std::cos(s));
        for (int j = 0; j < kGaussOrder; ++j) {
            const double t = ct + ht * rule.nodes[j];
            const double y = std::tan(t);
            const double jy = 1.0 / (std::cos(t) * std::cos(t));
            acc += rule.weights[i] * rule.weights[j] * jx * jy * integrand(m, mp, n, x, y);
        }
    }
    return acc * hs * ht;
}

std::complex<double> level_integral(int m, int mp, int n, const GaussRule& rule, int panels,
                                    int threads) {
    const double sA = -0.5 * std::numbers::pi, sB = 0.5 * std::numbers::pi;
    const double tA = 0.0, tB = 0.5 * std::numbers::pi;
    const double ds = (sB - sA) / panels, dt = (tB - tA) / panels;
    std::vector<std::complex<double>> cell(static_cast<std::size_t>(panels) * panels);
    if (threads <= 1) {
        for (int i = 0; i < panels; ++i)
            for (int j = 0; j < panels; ++j)
                cell[static_cast<std::size_t>(i) * panels + j] = panel_integral(
                    m, mp, n, rule, sA + i * ds, sA + (i + 1) * ds, tA + j * dt, tA + (j + 1) * dt);
    } else {
#pragma omp parallel for collapse(2) num_threads(threads) schedule(static)
        for (int i = 0; i < panels; ++i)
            for (int j = 0; j < panels; ++j)
                cell[static_cast<std::size_t>(i) * panels + j] = panel_integral(
                    m, mp, n, rule, sA + i * ds, sA + (i + 1) * ds, tA + j * dt, tA + (j + 1) * dt);
    }
    // fixed summation order keeps serial and parallel results bit-identical
    std::complex<double> sum{0.0, 0.0};
    for (const auto& c : cell) sum += c;
    return sum;
}

}  // namespace

QuadratureResult inner_quadrature(int m, int mp, int n, double tol, int threads) {
    if (n < 2) throw DivergentIntegral("pairing diverges for n < 2");
    if (tol <= 0) throw std::invalid_argument("tol must be positive");
    const GaussRule rule = gauss_legendre(kGaussOrder);
    QuadratureResult out;
    // The tan compactification leaves a direction-dependent limit at the
    // corner where |x| and y blow up together, so raw panel refinement is
    // only O(h^2).  Richardson-extrapolate the dyadic sequence to cancel
    // that leading term and compare successive extrapolants instead.
    std::complex<double> prev{0.0, 0.0}, prev_extrap{0.0, 0.0};
    int have = 0;
    for (int panels = 4;; panels *= 2) {
        const long evals =
            static_cast<long>(panels) * panels * kGaussOrder * kGaussOrder;
        if (out.evaluations + evals > kEvalBudget)
            throw QuadratureFailure("evaluation budget exhausted before reaching tol");
        std::complex<double> cur = level_integral(m, mp, n, rule, panels, threads);
        out.evaluations += evals;
        if (have >= 1) {
            std::complex<double> extrap = cur + (cur - prev) / 3.0;
            if (have >= 2) {
                const double diff = std::abs(extrap - prev_extrap);
                if (diff <= tol * (std::abs(extrap) + 1.0)) {
                    out.complex_value = extrap;
                    out.value = extrap.real();
                    out.error_estimate = diff;
                    return out;
                }
            }
            prev_extrap = extrap;
        }
        prev = cur;
        ++have;
    }
}

QuadratureResult norm_quadrature(int m, int n, double tol, int threads) {
    return inner_quadrature(m, m, n, tol, threads);
}

}  // namespace qorbit
