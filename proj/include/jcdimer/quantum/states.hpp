#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "jcdimer/errors.hpp"
#include "jcdimer/fixed_point.hpp"
#include "jcdimer/params.hpp"
#include "jcdimer/quantum/basis.hpp"
#include "jcdimer/state.hpp"

namespace jcdimer {

/// Normalized amplitude vector over a QuantumBasis.
struct QuantumState {
    QuantumBasis basis;
    Eigen::VectorXcd amplitudes;

    double norm() const { return amplitudes.norm(); }
};

/// Fock amplitudes of a truncated photon coherent state |alpha>.
/// Throws CutoffError if more than `loss_tol` probability mass is truncated.
inline Eigen::VectorXcd coherent_amplitudes(std::complex<double> alpha, int n_max,
                                            double loss_tol = 1e-8) {
    const double a2 = std::norm(alpha);
    const double arg = std::arg(alpha);
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n_max + 1);
    c(0) = std::exp(-0.5 * a2);
    double mass = std::norm(c(0));
    for (int n = 1; a2 > 0.0 && n <= n_max; ++n) {
        // log-stabilized e^{-|a|^2/2} a^n / sqrt(n!)
        const double mag =
            std::exp(-0.5 * a2 + 0.5 * n * std::log(a2) - 0.5 * std::lgamma(n + 1.0));
        c(n) = std::polar(mag, n * arg);
        mass += mag * mag;
    }
    if (1.0 - mass > loss_tol)
        throw CutoffError("coherent_amplitudes: truncation loses " +
                          std::to_string(1.0 - mass) + " probability mass");
    return c;
}

/// Amplitudes of a spin coherent state cos(t/2)|up> + sin(t/2)e^{i phi}|down>,
/// indexed [ground, excited].
inline std::array<std::complex<double>, 2> spin_coherent_amplitudes(double theta, double phi) {
    return {std::polar(std::sin(0.5 * theta), phi), std::complex<double>(std::cos(0.5 * theta))};
}

struct CoherentProductSpec {
    std::array<std::complex<double>, 2> alpha;
    std::array<double, 2> theta;
    std::array<double, 2> phi;
};

/// Spec of the coherent product matching a semiclassical phase-space point:
/// alpha_i = sqrt(M n_i) e^{i psi_i}, cos(theta_i) = z_i.
inline CoherentProductSpec coherent_spec_from_state(const SemiclassicalState& s,
                                                    const ModelParams& params) {
    CoherentProductSpec spec;
    const double m = static_cast<double>(params.excitations);
    for (int i = 0; i < 2; ++i) {
        spec.alpha[i] = std::polar(std::sqrt(m * s.n(i)), s.psi(i));
        spec.theta[i] = std::acos(std::clamp(s.z[i], -1.0, 1.0));
        spec.phi[i] = s.phi[i];
    }
    return spec;
}

/// Product of photon and spin coherent states, truncated and renormalized.
inline QuantumState coherent_product_state(const CoherentProductSpec& spec,
                                           const QuantumBasis& basis) {
    const Eigen::VectorXcd cl = coherent_amplitudes(spec.alpha[0], basis.n_max());
    const Eigen::VectorXcd cr = coherent_amplitudes(spec.alpha[1], basis.n_max());
    const auto sl = spin_coherent_amplitudes(spec.theta[0], spec.phi[0]);
    const auto sr = spin_coherent_amplitudes(spec.theta[1], spec.phi[1]);

    QuantumState st{basis, Eigen::VectorXcd(basis.dim())};
    for (int idx = 0; idx < basis.dim(); ++idx) {
        const auto l = basis.labels(idx);
        st.amplitudes(idx) = cl(l.n_l) * sl[l.s_l] * cr(l.n_r) * sr[l.s_r];
    }
    st.amplitudes.normalize();
    return st;
}

inline QuantumState coherent_product_state(const FixedPoint& fp, const ModelParams& params,
                                           const QuantumBasis& basis) {
    return coherent_product_state(coherent_spec_from_state(fp.state(), params), basis);
}

/// Optional sensitivity variant: project onto one eigensector of the total
/// excitation number and renormalize.
inline QuantumState project_onto_excitation_sector(const QuantumState& st, int sector) {
    QuantumState out = st;
    for (int idx = 0; idx < st.basis.dim(); ++idx)
        if (st.basis.labels(idx).total_excitation() != sector) out.amplitudes(idx) = 0.0;
    const double n = out.amplitudes.norm();
    if (n == 0.0)
        throw DomainError("project_onto_excitation_sector: state has no weight in sector");
    out.amplitudes /= n;
    return out;
}

/// <M> = <sum_i n_i + sigma+ sigma->.
inline double total_excitation_expectation(const QuantumState& st) {
    double acc = 0.0;
    for (int idx = 0; idx < st.basis.dim(); ++idx)
        acc += std::norm(st.amplitudes(idx)) * st.basis.labels(idx).total_excitation();
    return acc;
}

/// Even cat state (|alpha> + |-alpha>)/sqrt(2(1+e^{-2|alpha|^2})), single mode.
inline Eigen::VectorXcd make_cat_state(std::complex<double> alpha, int n_max) {
    const Eigen::VectorXcd plus = coherent_amplitudes(alpha, n_max);
    const Eigen::VectorXcd minus = coherent_amplitudes(-alpha, n_max);
    Eigen::VectorXcd cat = plus + minus;
    cat.normalize();
    return cat;
}

/// Incoherent 50/50 mixture of |alpha> and |-alpha>, single mode.
inline Eigen::MatrixXcd make_incoherent_mixture(std::complex<double> alpha, int n_max) {
    const Eigen::VectorXcd plus = coherent_amplitudes(alpha, n_max);
    const Eigen::VectorXcd minus = coherent_amplitudes(-alpha, n_max);
    Eigen::MatrixXcd rho = 0.5 * (plus * plus.adjoint() + minus * minus.adjoint());
    rho /= rho.trace().real();
    return rho;
}

}  // namespace jcdimer
