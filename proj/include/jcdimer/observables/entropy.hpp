#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "jcdimer/quantum/density.hpp"

namespace jcdimer {

/// Eigenvalues at or below this floor do not contribute to entropy sums;
/// round-off can push true zeros slightly negative.
inline constexpr double kEntropyEigenFloor = 1e-12;

/// Von Neumann entanglement entropy -sum(lambda ln lambda), in nats.
inline double entanglement_entropy(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.mat, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw NumericError("entanglement_entropy: eigensolve failed");
    double s = 0.0;
    for (int k = 0; k < es.eigenvalues().size(); ++k) {
        const double lam = es.eigenvalues()(k);
        if (lam >= kEntropyEigenFloor) s -= lam * std::log(lam);
    }
    return s;
}

/// Mutual information I = S_L + S_R - S_LR of the two atomic qubits.
inline double mutual_information(const QuantumState& st) {
    const double s_l = entanglement_entropy(reduce_density(st, Subsystem::SpinL));
    const double s_r = entanglement_entropy(reduce_density(st, Subsystem::SpinR));
    const double s_lr = entanglement_entropy(reduce_density(st, Subsystem::SpinPair));
    return s_l + s_r - s_lr;
}

}  // namespace jcdimer
