#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "jcdimer/errors.hpp"
#include "jcdimer/quantum/density.hpp"

namespace jcdimer {

/// Thermal photon gas reference: diagonal density matrix with geometric
/// weights nbar^n/(1+nbar)^{1+n}, closed-form entropy, and Gaussian radial
/// Husimi profile.
struct ThermalReference {
    double nbar = 0.0;
    Eigen::VectorXd weights;
    double entropy = 0.0;

    /// Husimi value at scaled radius r (coordinate scale M), Q_Th(r).
    double husimi(double r, int excitations) const {
        const double r2 = excitations * r * r;
        return std::exp(-r2 / (2.0 * (1.0 + nbar))) / (M_PI * (1.0 + nbar));
    }

    /// Angular integral of the Husimi profile, 2 pi Q_Th(r).
    double husimi_radial(double r, int excitations) const {
        return 2.0 * M_PI * husimi(r, excitations);
    }

    DensityMatrix to_density() const {
        DensityMatrix rho;
        rho.subsystem = Subsystem::SingleMode;
        rho.mat = weights.cast<std::complex<double>>().asDiagonal();
        return rho;
    }
};

inline ThermalReference thermal_reference(double nbar, int n_max, double loss_tol = 1e-6) {
    if (nbar < 0.0) throw DomainError("thermal_reference: nbar must be >= 0");
    ThermalReference th;
    th.nbar = nbar;
    th.weights = Eigen::VectorXd::Zero(n_max + 1);
    if (nbar == 0.0) {
        th.weights(0) = 1.0;
        th.entropy = 0.0;
        return th;
    }
    for (int n = 0; n <= n_max; ++n)
        th.weights(n) = std::exp(n * std::log(nbar) - (1.0 + n) * std::log(1.0 + nbar));
    if (1.0 - th.weights.sum() > loss_tol)
        throw CutoffError("thermal_reference: cutoff keeps only " +
                          std::to_string(th.weights.sum()) + " of the weight");
    th.entropy = (nbar + 1.0) * std::log(nbar + 1.0) - nbar * std::log(nbar);
    return th;
}

}  // namespace jcdimer
