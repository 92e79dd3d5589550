#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "jcdimer/params.hpp"
#include "jcdimer/state.hpp"

namespace jcdimer {

/// Right-hand side of the semiclassical flow in the regular Cartesian
/// embedding. Photon quadratures obey dx/dt = dH/dp, dp/dt = -dH/dx; spins
/// precess as ds/dt = (grad_s H x s)/eta, which conserves |s_i| exactly.
/// The form is polynomial, hence regular at n_i = 0 and |z_i| = 1.
inline CartesianState eom_rhs_cartesian(const CartesianState& c, const ModelParams& params) {
    const double w = params.omega - params.mu;
    const double d0 = params.omega0 - params.mu;
    const double u = params.u_scaled;
    const double G = std::sqrt(2.0) * params.g_scaled;
    const double K = G / params.eta();

    CartesianState dc{};
    for (int i = 0; i < 2; ++i) {
        const int o = 1 - i;
        const double x = c[cart_x(i)], p = c[cart_p(i)];
        const double sx = c[cart_sx(i)], sy = c[cart_sy(i)], sz = c[cart_sz(i)];
        const double n2 = x * x + p * p;

        dc[cart_x(i)] = w * p + 0.5 * u * n2 * p - G * sy - c[cart_p(o)];
        dc[cart_p(i)] = -(w * x + 0.5 * u * n2 * x + G * sx - c[cart_x(o)]);
        dc[cart_sx(i)] = -K * p * sz - d0 * sy;
        dc[cart_sy(i)] = d0 * sx - K * x * sz;
        dc[cart_sz(i)] = K * (x * sy + p * sx);
    }
    return dc;
}

/// Analytic Jacobian of eom_rhs_cartesian (exact; the flow is polynomial).
inline Eigen::Matrix<double, 10, 10> eom_jacobian_cartesian(const CartesianState& c,
                                                            const ModelParams& params) {
    const double w = params.omega - params.mu;
    const double d0 = params.omega0 - params.mu;
    const double u = params.u_scaled;
    const double G = std::sqrt(2.0) * params.g_scaled;
    const double K = G / params.eta();

    Eigen::Matrix<double, 10, 10> J = Eigen::Matrix<double, 10, 10>::Zero();
    for (int i = 0; i < 2; ++i) {
        const int o = 1 - i;
        const double x = c[cart_x(i)], p = c[cart_p(i)];
        const double sx = c[cart_sx(i)], sy = c[cart_sy(i)], sz = c[cart_sz(i)];
        const double n2 = x * x + p * p;

        const int ix = cart_x(i), ip = cart_p(i);
        const int isx = cart_sx(i), isy = cart_sy(i), isz = cart_sz(i);

        J(ix, ix) = u * x * p;
        J(ix, ip) = w + 0.5 * u * (n2 + 2.0 * p * p);
        J(ix, isy) = -G;
        J(ix, cart_p(o)) = -1.0;

        J(ip, ix) = -(w + 0.5 * u * (n2 + 2.0 * x * x));
        J(ip, ip) = -u * x * p;
        J(ip, isx) = -G;
        J(ip, cart_x(o)) = 1.0;

        J(isx, ip) = -K * sz;
        J(isx, isy) = -d0;
        J(isx, isz) = -K * p;

        J(isy, ix) = -K * sz;
        J(isy, isx) = d0;
        J(isy, isz) = -K * x;

        J(isz, ix) = K * sy;
        J(isz, ip) = K * sx;
        J(isz, isx) = K * p;
        J(isz, isy) = K * x;
    }
    return J;
}

/// Time derivative of the eight state variables (x_i, p_i, z_i, phi_i).
///
/// Evaluated through the Cartesian embedding, so it is finite at n_i = 0.
/// The azimuth rate at the spin poles (|z_i| = 1) is a chart artifact and is
/// reported as 0 there.
inline SemiclassicalDeriv eom_rhs(const SemiclassicalState& s, const ModelParams& params) {
    const CartesianState c = to_cartesian(s);
    const CartesianState dc = eom_rhs_cartesian(c, params);
    SemiclassicalDeriv d;
    for (int i = 0; i < 2; ++i) {
        d.dx[i] = dc[cart_x(i)];
        d.dp[i] = dc[cart_p(i)];
        d.dz[i] = 2.0 * dc[cart_sz(i)];
        const double sx = c[cart_sx(i)], sy = c[cart_sy(i)];
        const double t2 = sx * sx + sy * sy;
        d.dphi[i] = t2 > 0.0 ? (sx * dc[cart_sy(i)] - sy * dc[cart_sx(i)]) / t2 : 0.0;
    }
    return d;
}

}  // namespace jcdimer
