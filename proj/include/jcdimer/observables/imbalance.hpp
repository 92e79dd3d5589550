#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "jcdimer/errors.hpp"
#include "jcdimer/quantum/density.hpp"

namespace jcdimer {

/// Relative photon population imbalance (n_L - n_R)/(n_L + n_R).
inline double photon_imbalance(double n_l, double n_r) {
    if (n_l + n_r <= 0.0)
        throw DegenerateInputError("photon_imbalance: both populations are zero");
    return (n_l - n_r) / (n_l + n_r);
}

/// Atomic population imbalance from classical inversions, |z_R - z_L|/2.
inline double atomic_imbalance(double z_l, double z_r) { return 0.5 * std::abs(z_r - z_l); }

/// Quantum form, |<S_Lz> - <S_Rz>|. Equals the classical form under z = 2<S_z>.
inline double atomic_imbalance_quantum(double s_lz, double s_rz) {
    return std::abs(s_lz - s_rz);
}

/// Spin-1/2 operators in the basis [ground, excited].
inline Eigen::Matrix2cd spin_op_x() {
    Eigen::Matrix2cd m;
    m << 0.0, 0.5, 0.5, 0.0;
    return m;
}

inline Eigen::Matrix2cd spin_op_y() {
    Eigen::Matrix2cd m;
    m << 0.0, std::complex<double>(0.0, 0.5), std::complex<double>(0.0, -0.5), 0.0;
    return m;
}

inline Eigen::Matrix2cd spin_op_z() {
    Eigen::Matrix2cd m;
    m << -0.5, 0.0, 0.0, 0.5;
    return m;
}

/// Bloch vector (<S_x>, <S_y>, <S_z>) of a single-spin reduction.
inline Eigen::Vector3d spin_expectations(const DensityMatrix& rho_spin) {
    Eigen::Vector3d s;
    s(0) = (rho_spin.mat * spin_op_x()).trace().real();
    s(1) = (rho_spin.mat * spin_op_y()).trace().real();
    s(2) = (rho_spin.mat * spin_op_z()).trace().real();
    return s;
}

/// Relative spin orientation correlator
/// <S_Lx S_Rx + S_Ly S_Ry> / sqrt((1/4 - <S_Lz>^2)(1/4 - <S_Rz>^2));
/// +1 for ferromagnetic and -1 for antiferromagnetic alignment in the
/// classical limit.
inline double spin_orientation_clr(const DensityMatrix& rho_pair) {
    if (rho_pair.subsystem != Subsystem::SpinPair || rho_pair.mat.rows() != 4)
        throw DomainError("spin_orientation_clr: expected a spin-pair density matrix");

    // single-spin marginals; pair index a = s_L*2 + s_R
    Eigen::Matrix2cd rho_l = Eigen::Matrix2cd::Zero();
    Eigen::Matrix2cd rho_r = Eigen::Matrix2cd::Zero();
    for (int sl = 0; sl < 2; ++sl)
        for (int slp = 0; slp < 2; ++slp)
            for (int sr = 0; sr < 2; ++sr) {
                rho_l(sl, slp) += rho_pair.mat(sl * 2 + sr, slp * 2 + sr);
                rho_r(sl, slp) += rho_pair.mat(sr * 2 + sl, sr * 2 + slp);
            }
    const double s_lz = (rho_l * spin_op_z()).trace().real();
    const double s_rz = (rho_r * spin_op_z()).trace().real();

    const double den2 = (0.25 - s_lz * s_lz) * (0.25 - s_rz * s_rz);
    if (den2 <= 0.0)
        throw DegenerateInputError("spin_orientation_clr: |<S_z>| = 1/2 in one cavity");

    Eigen::Matrix4cd xy = Eigen::Matrix4cd::Zero();
    const Eigen::Matrix2cd sx = spin_op_x(), sy = spin_op_y();
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const int sl = a / 2, sr = a % 2, slp = b / 2, srp = b % 2;
            xy(a, b) = sx(sl, slp) * sx(sr, srp) + sy(sl, slp) * sy(sr, srp);
        }
    const double num = (rho_pair.mat * xy).trace().real();
    return num / std::sqrt(den2);
}

}  // namespace jcdimer
