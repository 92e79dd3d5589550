#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "jcdimer/eom.hpp"
#include "jcdimer/errors.hpp"
#include "jcdimer/fixed_point.hpp"
#include "jcdimer/params.hpp"

namespace jcdimer {

/// |Re lambda| below this counts as marginal (stable); units of J.
inline constexpr double kStabilityTolImag = 1e-7;
/// Zero modes are discarded below this fraction of the largest |lambda|.
inline constexpr double kZeroModeFraction = 1e-6;

struct StabilityResult {
    std::vector<std::complex<double>> eigenfrequencies;  // omega = lambda / i
    bool stable = false;
    double omega0_min = 0.0;
};

/// Linear stability spectrum of a steady state.
///
/// The flow is linearized at the fixed point's own chemical potential
/// mu_star (the point is stationary only in that gauge), in the Cartesian
/// embedding, then projected onto the 8-dimensional tangent space of the
/// spin spheres |s_i| = 1/2. The U(1) symmetry and excitation conservation
/// produce exact zero modes, which are discarded before reporting the
/// smallest oscillation frequency omega0_min.
inline StabilityResult stability(const FixedPoint& fp, const ModelParams& params) {
    const ModelParams plin = params.with_mu(fp.mu_star);
    const CartesianState c = to_cartesian(fp.state());

    const CartesianState rhs = eom_rhs_cartesian(c, plin);
    double rmax = 0.0;
    for (double v : rhs) rmax = std::max(rmax, std::abs(v));
    if (rmax > 1e-8)
        throw DomainError("stability: state is not a fixed point (|rhs| = " +
                          std::to_string(rmax) + ")");

    const Eigen::Matrix<double, 10, 10> A = eom_jacobian_cartesian(c, plin);

    // Orthonormal basis of the tangent space: all four photon directions
    // plus two directions orthogonal to each spin vector.
    Eigen::Matrix<double, 10, 8> T = Eigen::Matrix<double, 10, 8>::Zero();
    T(cart_x(0), 0) = 1.0;
    T(cart_p(0), 1) = 1.0;
    T(cart_x(1), 2) = 1.0;
    T(cart_p(1), 3) = 1.0;
    for (int i = 0; i < 2; ++i) {
        const Eigen::Vector3d s(c[cart_sx(i)], c[cart_sy(i)], c[cart_sz(i)]);
        Eigen::Vector3d t1 = Eigen::Vector3d::UnitZ().cross(s);
        if (t1.norm() < 1e-12) t1 = Eigen::Vector3d::UnitX().cross(s);
        t1.normalize();
        const Eigen::Vector3d t2 = s.cross(t1).normalized();
        const int col = 4 + 2 * i;
        for (int k = 0; k < 3; ++k) {
            T(cart_sx(i) + k, col) = t1(k);
            T(cart_sx(i) + k, col + 1) = t2(k);
        }
    }

    const Eigen::Matrix<double, 8, 8> B = T.transpose() * A * T;
    Eigen::EigenSolver<Eigen::Matrix<double, 8, 8>> es(B);
    if (es.info() != Eigen::Success) throw NumericError("stability: eigensolver failed");

    StabilityResult res;
    res.stable = true;
    double max_abs = 0.0;
    for (int k = 0; k < 8; ++k) {
        const std::complex<double> lam = es.eigenvalues()(k);
        res.eigenfrequencies.push_back(lam / std::complex<double>(0.0, 1.0));
        if (std::abs(lam.real()) >= kStabilityTolImag) res.stable = false;
        max_abs = std::max(max_abs, std::abs(lam));
    }
    const double tol_zero = kZeroModeFraction * max_abs;
    double omega0 = 0.0;
    for (int k = 0; k < 8; ++k) {
        const std::complex<double> lam = es.eigenvalues()(k);
        if (std::abs(lam) < tol_zero) continue;       // U(1)/conservation zero modes
        const double w = std::abs(lam.imag());
        if (w < tol_zero) continue;                   // purely growing/decaying mode
        if (omega0 == 0.0 || w < omega0) omega0 = w;
    }
    res.omega0_min = omega0;
    return res;
}

/// Fill the stability fields of a FixedPoint in place.
inline void apply_stability(FixedPoint& fp, const ModelParams& params) {
    StabilityResult st = stability(fp, params);
    fp.eigenfrequencies = std::move(st.eigenfrequencies);
    fp.stable = st.stable;
    fp.omega0_min = st.omega0_min;
}

}  // namespace jcdimer
