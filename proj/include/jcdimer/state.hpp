#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace jcdimer {

inline constexpr int kLeft = 0;
inline constexpr int kRight = 1;

/// Wrap an angle into (-pi, pi].
inline double wrap_angle(double a) {
    const double two_pi = 2.0 * M_PI;
    a = std::remainder(a, two_pi);  // in [-pi, pi]
    if (a <= -M_PI) a += two_pi;
    return a;
}

/// Semiclassical phase-space point of the two-cavity coherent-state ansatz.
///
/// Photon fields are stored as quadratures, alpha_i/sqrt(M) = (x_i + i p_i)/sqrt(2),
/// so n_i = (x_i^2 + p_i^2)/2 and psi_i = atan2(p_i, x_i). Spins are stored as
/// inversion z_i in [-1, 1] and azimuth phi_i in (-pi, pi].
struct SemiclassicalState {
    std::array<double, 2> x{0.0, 0.0};
    std::array<double, 2> p{0.0, 0.0};
    std::array<double, 2> z{-1.0, -1.0};
    std::array<double, 2> phi{0.0, 0.0};

    double n(int i) const { return 0.5 * (x[i] * x[i] + p[i] * p[i]); }
    double psi(int i) const { return std::atan2(p[i], x[i]); }

    static SemiclassicalState from_polar(std::array<double, 2> n, std::array<double, 2> psi,
                                         std::array<double, 2> z, std::array<double, 2> phi) {
        SemiclassicalState s;
        for (int i = 0; i < 2; ++i) {
            const double r = std::sqrt(2.0 * std::max(0.0, n[i]));
            s.x[i] = r * std::cos(psi[i]);
            s.p[i] = r * std::sin(psi[i]);
            s.z[i] = z[i];
            s.phi[i] = wrap_angle(phi[i]);
        }
        return s;
    }

    SemiclassicalState swapped() const {
        SemiclassicalState s = *this;
        std::swap(s.x[0], s.x[1]);
        std::swap(s.p[0], s.p[1]);
        std::swap(s.z[0], s.z[1]);
        std::swap(s.phi[0], s.phi[1]);
        return s;
    }
};

/// Time derivative of the eight state variables.
struct SemiclassicalDeriv {
    std::array<double, 2> dx{}, dp{}, dz{}, dphi{};
};

/// Regular 10-variable embedding used internally for integration and
/// linearization: photon quadratures plus Cartesian spin components with
/// |s_i| = 1/2. Layout per cavity: x, p, sx, sy, sz.
using CartesianState = std::array<double, 10>;

inline constexpr int cart_x(int i) { return 5 * i + 0; }
inline constexpr int cart_p(int i) { return 5 * i + 1; }
inline constexpr int cart_sx(int i) { return 5 * i + 2; }
inline constexpr int cart_sy(int i) { return 5 * i + 3; }
inline constexpr int cart_sz(int i) { return 5 * i + 4; }

inline CartesianState to_cartesian(const SemiclassicalState& s) {
    CartesianState c{};
    for (int i = 0; i < 2; ++i) {
        c[cart_x(i)] = s.x[i];
        c[cart_p(i)] = s.p[i];
        const double st = std::sqrt(std::max(0.0, 1.0 - s.z[i] * s.z[i]));
        c[cart_sx(i)] = 0.5 * st * std::cos(s.phi[i]);
        c[cart_sy(i)] = 0.5 * st * std::sin(s.phi[i]);
        c[cart_sz(i)] = 0.5 * s.z[i];
    }
    return c;
}

inline SemiclassicalState from_cartesian(const CartesianState& c) {
    SemiclassicalState s;
    for (int i = 0; i < 2; ++i) {
        s.x[i] = c[cart_x(i)];
        s.p[i] = c[cart_p(i)];
        s.z[i] = std::clamp(2.0 * c[cart_sz(i)], -1.0, 1.0);
        const double sx = c[cart_sx(i)], sy = c[cart_sy(i)];
        s.phi[i] = (sx == 0.0 && sy == 0.0) ? 0.0 : std::atan2(sy, sx);
    }
    return s;
}

}  // namespace jcdimer
