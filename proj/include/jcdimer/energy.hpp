#pragma once

#include <cmath>

#include "jcdimer/params.hpp"
#include "jcdimer/state.hpp"

namespace jcdimer {

/// Deviation from the conserved-excitation constraint,
/// n_L + n_R + (eta/2)(z_L + z_R + 2) - 1. Zero on the physical shell.
inline double constraint_residual(const SemiclassicalState& s, const ModelParams& params) {
    const double eta = params.eta();
    return s.n(kLeft) + s.n(kRight) + 0.5 * eta * (s.z[kLeft] + s.z[kRight] + 2.0) - 1.0;
}

/// Scaled classical Hamiltonian density in the regular Cartesian embedding.
inline double classical_energy_cartesian(const CartesianState& c, const ModelParams& params) {
    const double eta = params.eta();
    const double sqrt2g = std::sqrt(2.0) * params.g_scaled;
    double e = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double x = c[cart_x(i)], p = c[cart_p(i)];
        const double n = 0.5 * (x * x + p * p);
        e += (params.omega - params.mu) * n;
        e += eta * (params.omega0 - params.mu) * c[cart_sz(i)];
        e += 0.5 * params.u_scaled * n * n;
        e += sqrt2g * (x * c[cart_sx(i)] - p * c[cart_sy(i)]);
    }
    e -= c[cart_x(kLeft)] * c[cart_x(kRight)] + c[cart_p(kLeft)] * c[cart_p(kRight)];
    return e;
}

/// Scaled classical Hamiltonian density (energy per excitation, units of J).
inline double classical_energy(const SemiclassicalState& s, const ModelParams& params) {
    return classical_energy_cartesian(to_cartesian(s), params);
}

}  // namespace jcdimer
