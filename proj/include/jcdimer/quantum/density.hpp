#pragma once

#include <Eigen/Dense>
#include <complex>

#include "jcdimer/errors.hpp"
#include "jcdimer/quantum/states.hpp"

namespace jcdimer {

enum class Subsystem { SpinL, SpinR, SpinPair, PhotonL, PhotonR, PhotonPair, SingleMode };

inline const char* to_string(Subsystem s) {
    switch (s) {
        case Subsystem::SpinL: return "spin-L";
        case Subsystem::SpinR: return "spin-R";
        case Subsystem::SpinPair: return "spin-pair";
        case Subsystem::PhotonL: return "photon-L";
        case Subsystem::PhotonR: return "photon-R";
        case Subsystem::PhotonPair: return "photon-pair";
        case Subsystem::SingleMode: return "single-mode";
    }
    return "?";
}

/// Reduced state of a named subsystem: Hermitian, unit trace, PSD.
struct DensityMatrix {
    Subsystem subsystem = Subsystem::SingleMode;
    Eigen::MatrixXcd mat;

    double purity() const { return (mat * mat).trace().real(); }

    void validate(double tol_trace = 1e-10, double tol_herm = 1e-12,
                  double tol_psd = 1e-10) const {
        if (std::abs(mat.trace().real() - 1.0) > tol_trace ||
            std::abs(mat.trace().imag()) > tol_trace)
            throw NumericError("DensityMatrix: trace deviates from 1");
        if ((mat - mat.adjoint()).cwiseAbs().maxCoeff() > tol_herm)
            throw NumericError("DensityMatrix: not Hermitian");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success) throw NumericError("DensityMatrix: eigensolve failed");
        if (es.eigenvalues().minCoeff() < -tol_psd)
            throw NumericError("DensityMatrix: negative eigenvalue");
    }
};

/// Partial trace over the complement of `which`.
inline DensityMatrix reduce_density(const QuantumState& st, Subsystem which) {
    const int nph = st.basis.n_max() + 1;
    int dim_a = 0, dim_b = 0;
    switch (which) {
        case Subsystem::SpinL:
        case Subsystem::SpinR: dim_a = 2, dim_b = 2 * nph * nph; break;
        case Subsystem::SpinPair: dim_a = 4, dim_b = nph * nph; break;
        case Subsystem::PhotonL:
        case Subsystem::PhotonR: dim_a = nph, dim_b = 4 * nph; break;
        case Subsystem::PhotonPair: dim_a = nph * nph, dim_b = 4; break;
        case Subsystem::SingleMode:
            throw DomainError("reduce_density: single-mode is not a dimer subsystem");
    }

    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(dim_a, dim_b);
    for (int idx = 0; idx < st.basis.dim(); ++idx) {
        const auto l = st.basis.labels(idx);
        int a = 0, b = 0;
        switch (which) {
            case Subsystem::SpinL:
                a = l.s_l;
                b = (l.n_l * nph + l.n_r) * 2 + l.s_r;
                break;
            case Subsystem::SpinR:
                a = l.s_r;
                b = (l.n_l * nph + l.n_r) * 2 + l.s_l;
                break;
            case Subsystem::SpinPair:
                a = l.s_l * 2 + l.s_r;
                b = l.n_l * nph + l.n_r;
                break;
            case Subsystem::PhotonL:
                a = l.n_l;
                b = (l.s_l * nph + l.n_r) * 2 + l.s_r;
                break;
            case Subsystem::PhotonR:
                a = l.n_r;
                b = (l.s_l * nph + l.n_l) * 2 + l.s_r;
                break;
            case Subsystem::PhotonPair:
                a = l.n_l * nph + l.n_r;
                b = l.s_l * 2 + l.s_r;
                break;
            default: break;
        }
        c(a, b) = st.amplitudes(idx);
    }

    DensityMatrix rho;
    rho.subsystem = which;
    rho.mat = c * c.adjoint();
    return rho;
}

/// Density matrix of a pure single-mode state.
inline DensityMatrix single_mode_density(const Eigen::VectorXcd& psi) {
    DensityMatrix rho;
    rho.subsystem = Subsystem::SingleMode;
    rho.mat = psi * psi.adjoint();
    return rho;
}

inline DensityMatrix single_mode_density(const Eigen::MatrixXcd& mat) {
    DensityMatrix rho;
    rho.subsystem = Subsystem::SingleMode;
    rho.mat = mat;
    return rho;
}

}  // namespace jcdimer
