#pragma once

#include <cmath>

#include "jcdimer/errors.hpp"

namespace jcdimer {

/// Model parameters of the Josephson-coupled Jaynes-Cummings dimer.
///
/// Energies and times are measured in units of the hopping amplitude J = 1.
/// The couplings are stored in scaled form: g_scaled = g/sqrt(M) and
/// u_scaled = U*M, where M is the conserved total excitation number. The
/// chemical potential mu is a gauge choice; it rotates the overall phase and
/// cancels from all gauge-invariant observables.
struct ModelParams {
    double omega = 2.0;    // cavity frequency
    double omega0 = 2.0;   // atomic gap
    double g_scaled = 1.0; // atom-photon coupling, scaled
    double u_scaled = 0.0; // Kerr nonlinearity, scaled
    int excitations = 30;  // conserved total excitation M
    double mu = 0.0;       // chemical potential gauge value

    double eta() const { return 1.0 / static_cast<double>(excitations); }

    /// Physical (unscaled) atom-photon coupling g = g_scaled * sqrt(M).
    double g_physical() const { return g_scaled * std::sqrt(static_cast<double>(excitations)); }
    /// Physical (unscaled) Kerr strength U = u_scaled / M.
    double u_physical() const { return u_scaled / static_cast<double>(excitations); }

    ModelParams with_mu(double new_mu) const {
        ModelParams p = *this;
        p.mu = new_mu;
        return p;
    }

    void validate() const {
        if (excitations < 1) throw DomainError("ModelParams: excitations must be >= 1");
        if (!(g_scaled > 0.0)) throw DomainError("ModelParams: g_scaled must be > 0");
        if (!(u_scaled >= 0.0)) throw DomainError("ModelParams: u_scaled must be >= 0");
        if (!std::isfinite(omega) || !std::isfinite(omega0) || !std::isfinite(mu))
            throw DomainError("ModelParams: omega, omega0, mu must be finite");
    }
};

}  // namespace jcdimer
