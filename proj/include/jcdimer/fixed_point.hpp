#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "jcdimer/branch.hpp"
#include "jcdimer/state.hpp"

namespace jcdimer {

/// A classified steady state of the semiclassical flow.
///
/// Populations satisfy f = n_R/n_L in [0, 1] by the left-right convention;
/// the mirrored solution is obtained by swapping the cavities. The stability
/// spectrum holds the full set of small-oscillation frequencies
/// omega = lambda/i from the linearization at mu = mu_star.
struct FixedPoint {
    BranchLabel branch;
    double f = 1.0;
    std::array<double, 2> n_star{0.0, 0.0};
    std::array<double, 2> z_star{0.0, 0.0};
    double mu_star = 0.0;
    double energy = 0.0;
    std::vector<std::complex<double>> eigenfrequencies;
    bool stable = false;

    /// Smallest nonzero oscillation frequency, 0 if the spectrum is empty.
    double omega0_min = 0.0;

    double photon_imbalance_zp() const { return (1.0 - f) / (1.0 + f); }

    /// Materialize a phase-space point in the gauge psi_L = 0.
    SemiclassicalState state() const {
        const double psi_r = branch.xi1 > 0 ? 0.0 : M_PI;   // psi_L - psi_R
        const double chi = branch.xi2 > 0 ? 0.0 : M_PI;     // phi_i + psi_i
        std::array<double, 2> psi{0.0, wrap_angle(-psi_r)};
        std::array<double, 2> phi{wrap_angle(chi - psi[0]), wrap_angle(chi - psi[1])};
        return SemiclassicalState::from_polar(n_star, psi, z_star, phi);
    }
};

}  // namespace jcdimer
