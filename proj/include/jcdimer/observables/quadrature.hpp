#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "jcdimer/errors.hpp"
#include "jcdimer/quantum/density.hpp"

namespace jcdimer {

struct QuadratureEnergies {
    double pe = 0.0;                     // <x^2>/(2M), x = (a + a^dag)/sqrt(2)
    double ke = 0.0;                     // <p^2>/(2M), p = i(a^dag - a)/sqrt(2)
    double number_variance_ratio = 0.0;  // (<n^2> - <n>^2)/<n>, 1 for a coherent state
};

inline QuadratureEnergies quadrature_energies(const DensityMatrix& rho_photon, int excitations) {
    const int np1 = static_cast<int>(rho_photon.mat.rows());
    double n1 = 0.0, n2 = 0.0;
    std::complex<double> a2 = 0.0;
    for (int n = 0; n < np1; ++n) {
        const double pop = rho_photon.mat(n, n).real();
        n1 += n * pop;
        n2 += double(n) * n * pop;
        if (n >= 2) a2 += rho_photon.mat(n, n - 2) * std::sqrt(n * (n - 1.0));
    }
    QuadratureEnergies q;
    const double m2 = 2.0 * excitations;
    q.pe = (a2.real() + n1 + 0.5) / m2;
    q.ke = (-a2.real() + n1 + 0.5) / m2;
    if (n1 <= 0.0)
        throw DegenerateInputError("quadrature_energies: <n> = 0, variance ratio undefined");
    q.number_variance_ratio = (n2 - n1 * n1) / n1;
    return q;
}

}  // namespace jcdimer
