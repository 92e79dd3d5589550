#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "jcdimer/quantum/density.hpp"
#include "jcdimer/state.hpp"

namespace jcdimer {

/// Photon phase distribution over the discrete phase-state grid
/// psi_m = psi_0 + 2 pi m/(N+1), m = 0..N, with N the photon cutoff of the
/// reduced density matrix. Values are stored on the linear (unwrapped) grid
/// so that the moment sums below are windowed linear averages.
struct PhaseDistribution {
    std::vector<double> psi_values;
    std::vector<double> probabilities;

    double total() const {
        double s = 0.0;
        for (double p : probabilities) s += p;
        return s;
    }
};

inline PhaseDistribution phase_distribution(const DensityMatrix& rho_photon,
                                            double psi0 = -M_PI) {
    const int np = static_cast<int>(rho_photon.mat.rows());  // N+1 grid points
    PhaseDistribution dist;
    dist.psi_values.resize(np);
    dist.probabilities.resize(np);
    Eigen::VectorXcd u(np);
    for (int m = 0; m < np; ++m) {
        const double psi = psi0 + 2.0 * M_PI * m / np;
        for (int n = 0; n < np; ++n) u(n) = std::polar(1.0 / std::sqrt(double(np)), n * psi);
        dist.psi_values[m] = psi;
        dist.probabilities[m] = std::max(0.0, (u.adjoint() * rho_photon.mat * u).real()(0));
    }
    return dist;
}

/// Recentered variant: shifts the window so the most probable phase sits at
/// the window center, avoiding the wrap-around bias of the linear moments
/// when the distribution peaks near +-pi.
inline PhaseDistribution phase_distribution_recentered(const DensityMatrix& rho_photon) {
    const PhaseDistribution first = phase_distribution(rho_photon, -M_PI);
    const std::size_t peak =
        std::distance(first.probabilities.begin(),
                      std::max_element(first.probabilities.begin(), first.probabilities.end()));
    return phase_distribution(rho_photon, first.psi_values[peak] - M_PI);
}

struct PhaseMoments {
    double mean = 0.0;
    double variance = 0.0;
    double normalized_variance = 0.0;  // variance / (pi^2/3), 1 for uniform
};

inline PhaseMoments phase_moments(const PhaseDistribution& dist) {
    PhaseMoments m;
    for (std::size_t k = 0; k < dist.psi_values.size(); ++k)
        m.mean += dist.psi_values[k] * dist.probabilities[k];
    for (std::size_t k = 0; k < dist.psi_values.size(); ++k) {
        const double d = dist.psi_values[k] - m.mean;
        m.variance += d * d * dist.probabilities[k];
    }
    m.normalized_variance = m.variance / (M_PI * M_PI / 3.0);
    return m;
}

/// Mean phase difference <psi_L> - <psi_R>, wrapped into (-pi, pi].
/// Each mean is taken on a recentered window.
inline double relative_phase(const DensityMatrix& rho_l, const DensityMatrix& rho_r) {
    const double ml = phase_moments(phase_distribution_recentered(rho_l)).mean;
    const double mr = phase_moments(phase_distribution_recentered(rho_r)).mean;
    return wrap_angle(ml - mr);
}

}  // namespace jcdimer
