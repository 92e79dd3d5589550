#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

#include "jcdimer/errors.hpp"
#include "jcdimer/quantum/density.hpp"

namespace jcdimer {

/// Rectangular grid in the scaled phase-space coordinates
/// x = (alpha + alpha*)/sqrt(2M), p = (alpha - alpha*)/(i sqrt(2M)), so a
/// coherent field with scaled population n sits on the ring of radius
/// sqrt(2n). `excitations` carries the scale M of the coordinate map.
struct PhaseSpaceGrid {
    int excitations = 30;
    int nx = 201, np = 201;
    double x_min = -1.6, x_max = 1.6;
    double p_min = -1.6, p_max = 1.6;
    Eigen::MatrixXd values;  // values(ix, ip)

    double x_at(int ix) const { return x_min + (x_max - x_min) * ix / double(nx - 1); }
    double p_at(int ip) const { return p_min + (p_max - p_min) * ip / double(np - 1); }
    double dx() const { return (x_max - x_min) / (nx - 1); }
    double dp() const { return (p_max - p_min) / (np - 1); }

    std::complex<double> alpha_at(int ix, int ip) const {
        const double scale = std::sqrt(0.5 * excitations);
        return {scale * x_at(ix), scale * p_at(ip)};
    }

    /// Cell area in unscaled d^2 alpha = dRe(alpha) dIm(alpha) units.
    double alpha_cell_area() const { return 0.5 * excitations * dx() * dp(); }

    /// Grid integral in unscaled alpha coordinates.
    double mass() const { return values.sum() * alpha_cell_area(); }
};

namespace detail {

/// Truncated coherent amplitudes without the truncation-mass gate; grid
/// corners may legitimately lie far outside the state's support.
inline Eigen::VectorXcd coherent_vec_raw(std::complex<double> alpha, int n_max) {
    const double a2 = std::norm(alpha);
    const double arg = std::arg(alpha);
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n_max + 1);
    c(0) = std::exp(-0.5 * a2);
    for (int n = 1; a2 > 0.0 && n <= n_max; ++n) {
        const double lm = -0.5 * a2 + 0.5 * n * std::log(a2) - 0.5 * std::lgamma(n + 1.0);
        c(n) = lm < -745.0 ? 0.0 : std::polar(std::exp(lm), n * arg);
    }
    return c;
}

}  // namespace detail

/// Husimi function Q(alpha) = <alpha|rho|alpha>/pi on the grid.
/// Throws GridError when the grid captures less than `mass_floor` of the
/// state (the extents are too small).
inline PhaseSpaceGrid husimi(const DensityMatrix& rho_photon, PhaseSpaceGrid grid,
                             double mass_floor = 0.99) {
    const int n_max = static_cast<int>(rho_photon.mat.rows()) - 1;
    grid.values.resize(grid.nx, grid.np);
    for (int ip = 0; ip < grid.np; ++ip) {
        for (int ix = 0; ix < grid.nx; ++ix) {
            const Eigen::VectorXcd c = detail::coherent_vec_raw(grid.alpha_at(ix, ip), n_max);
            grid.values(ix, ip) =
                std::max(0.0, (c.adjoint() * rho_photon.mat * c).real()(0)) / M_PI;
        }
    }
    if (grid.mass() < mass_floor)
        throw GridError("husimi: grid captures only " + std::to_string(grid.mass()) +
                        " of the state");
    return grid;
}

/// Wigner function W(alpha) = (2/pi) Tr[rho D(2 alpha) Pi] evaluated in the
/// truncated Fock basis through displacement-operator matrix elements.
inline PhaseSpaceGrid wigner(const DensityMatrix& rho_photon, PhaseSpaceGrid grid,
                             double mass_floor = 0.99) {
    const int np1 = static_cast<int>(rho_photon.mat.rows());
    grid.values.resize(grid.nx, grid.np);

    std::vector<double> laguerre(np1);
    for (int ip = 0; ip < grid.np; ++ip) {
        for (int ix = 0; ix < grid.nx; ++ix) {
            const std::complex<double> beta = 2.0 * grid.alpha_at(ix, ip);
            const double xb = std::norm(beta);
            const double argb = std::arg(beta);
            std::complex<double> acc = 0.0;
            // diagonal offset d = n - m >= 0 of <n|D(beta)|m>
            for (int d = 0; d < np1; ++d) {
                // L_m^{(d)}(xb) by upward recurrence in m
                double lm2 = 1.0, lm1 = 1.0 + d - xb;
                for (int m = 0; m + d < np1; ++m) {
                    double lag;
                    if (m == 0)
                        lag = 1.0;
                    else if (m == 1)
                        lag = lm1;
                    else {
                        lag = ((2.0 * (m - 1) + d + 1.0 - xb) * lm1 - (m - 1.0 + d) * lm2) /
                              static_cast<double>(m);
                        lm2 = lm1;
                        lm1 = lag;
                    }
                    const int n = m + d;
                    const double lp = -0.5 * xb + (d > 0 ? 0.5 * d * std::log(xb) : 0.0) +
                                      0.5 * (std::lgamma(m + 1.0) - std::lgamma(n + 1.0));
                    if (lp < -745.0) continue;
                    const std::complex<double> dnm = std::polar(std::exp(lp) * lag, d * argb);
                    const double parity = (n % 2 == 0) ? 1.0 : -1.0;
                    // rho_{nm} (-1)^n D_{mn}; D_{mn} = (-1)^{n-m} conj(D_{nm})
                    acc += rho_photon.mat(n, m) * parity * ((d % 2 == 0) ? 1.0 : -1.0) *
                           std::conj(dnm);
                    if (d > 0) {
                        const double parity_m = (m % 2 == 0) ? 1.0 : -1.0;
                        acc += rho_photon.mat(m, n) * parity_m * dnm;
                    }
                }
            }
            grid.values(ix, ip) = 2.0 / M_PI * acc.real();
        }
    }
    if (grid.mass() < mass_floor)
        throw GridError("wigner: grid captures only " + std::to_string(grid.mass()) +
                        " of the state");
    return grid;
}

struct RadialProfile {
    std::vector<double> r;      // scaled radius sqrt(x^2 + p^2)
    std::vector<double> value;  // angular integral over the ring
};

/// Angular average Qbar(r) = integral of Q(r, theta) d theta, by bilinear
/// interpolation on rings around the origin.
inline RadialProfile husimi_angular_average(const PhaseSpaceGrid& grid, int n_theta = 256) {
    const double r_max =
        std::min(std::min(-grid.x_min, grid.x_max), std::min(-grid.p_min, grid.p_max));
    if (r_max <= 0.0)
        throw DomainError("husimi_angular_average: grid must be centered on the origin");
    const double dr = std::min(grid.dx(), grid.dp());
    const int n_r = static_cast<int>(r_max / dr);

    auto interp = [&](double x, double p) {
        const double fx = (x - grid.x_min) / grid.dx();
        const double fp = (p - grid.p_min) / grid.dp();
        const int ix = std::clamp(static_cast<int>(fx), 0, grid.nx - 2);
        const int ip = std::clamp(static_cast<int>(fp), 0, grid.np - 2);
        const double tx = fx - ix, tp = fp - ip;
        return (1 - tx) * (1 - tp) * grid.values(ix, ip) +
               tx * (1 - tp) * grid.values(ix + 1, ip) +
               (1 - tx) * tp * grid.values(ix, ip + 1) + tx * tp * grid.values(ix + 1, ip + 1);
    };

    RadialProfile prof;
    for (int j = 0; j <= n_r; ++j) {
        const double r = j * dr;
        double acc = 0.0;
        for (int k = 0; k < n_theta; ++k) {
            const double th = 2.0 * M_PI * k / n_theta;
            acc += interp(r * std::cos(th), r * std::sin(th));
        }
        prof.r.push_back(r);
        prof.value.push_back(acc * 2.0 * M_PI / n_theta);
    }
    return prof;
}

}  // namespace jcdimer
