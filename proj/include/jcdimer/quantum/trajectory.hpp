#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "jcdimer/observables/entropy.hpp"
#include "jcdimer/observables/imbalance.hpp"
#include "jcdimer/observables/phase.hpp"
#include "jcdimer/observables/quadrature.hpp"
#include "jcdimer/quantum/density.hpp"
#include "jcdimer/quantum/evolve.hpp"
#include "jcdimer/time_series.hpp"

namespace jcdimer {

/// Assembles the standard quantum channel set along a trajectory. Photon
/// populations are scaled by 1/M and inversions reported as z = 2<S_z>, so
/// the channels are directly comparable with the classical ones.
class QuantumChannelRecorder {
public:
    QuantumChannelRecorder(const HamiltonianOp& h, const ModelParams& params)
        : h_(&h), params_(params) {
        const QuantumBasis& b = h.basis;
        diag_nl_.resize(b.dim());
        diag_nr_.resize(b.dim());
        for (int idx = 0; idx < b.dim(); ++idx) {
            const auto l = b.labels(idx);
            diag_nl_(idx) = l.n_l;
            diag_nr_(idx) = l.n_r;
        }
    }

    void record(double t, const Eigen::VectorXcd& amp) {
        const double m = static_cast<double>(params_.excitations);
        QuantumState st{h_->basis, amp};

        double nl = 0.0, nr = 0.0, mexp = 0.0;
        for (int idx = 0; idx < amp.size(); ++idx) {
            const double w = std::norm(amp(idx));
            nl += w * diag_nl_(idx);
            nr += w * diag_nr_(idx);
        }
        mexp = total_excitation_expectation(st);

        const DensityMatrix rho_sl = reduce_density(st, Subsystem::SpinL);
        const DensityMatrix rho_sr = reduce_density(st, Subsystem::SpinR);
        const DensityMatrix rho_pair = reduce_density(st, Subsystem::SpinPair);
        const DensityMatrix rho_pl = reduce_density(st, Subsystem::PhotonL);
        const DensityMatrix rho_pr = reduce_density(st, Subsystem::PhotonR);
        const Eigen::Vector3d s_l = spin_expectations(rho_sl);
        const Eigen::Vector3d s_r = spin_expectations(rho_sr);

        ts.push_time(t);
        ts.push_value("n_L", nl / m);
        ts.push_value("n_R", nr / m);
        ts.push_value("z_L", 2.0 * s_l(2));
        ts.push_value("z_R", 2.0 * s_r(2));
        ts.push_value("Z_p", photon_imbalance(nl, nr));
        ts.push_value("Z_a", atomic_imbalance_quantum(s_l(2), s_r(2)));
        ts.push_value("Sx_L", s_l(0));
        ts.push_value("Sy_L", s_l(1));
        double clr = std::numeric_limits<double>::quiet_NaN();
        try {
            clr = spin_orientation_clr(rho_pair);
        } catch (const DegenerateInputError&) {
        }
        ts.push_value("C_LR", clr);

        const PhaseMoments pm_l = phase_moments(phase_distribution_recentered(rho_pl));
        ts.push_value("psi_r", relative_phase(rho_pl, rho_pr));
        ts.push_value("phase_var_L", pm_l.normalized_variance);

        const double s_spin_l = entanglement_entropy(rho_sl);
        const double s_spin_r = entanglement_entropy(rho_sr);
        ts.push_value("S_spin_L", s_spin_l);
        ts.push_value("S_spin_R", s_spin_r);
        const double s_pair = entanglement_entropy(rho_pair);
        ts.push_value("S_spin_pair", s_pair);
        ts.push_value("mutual_info", s_spin_l + s_spin_r - s_pair);
        ts.push_value("S_photon_L", entanglement_entropy(rho_pl));

        const QuadratureEnergies q = quadrature_energies(rho_pl, params_.excitations);
        ts.push_value("pe_L", q.pe);
        ts.push_value("ke_L", q.ke);
        ts.push_value("nvar_L", q.number_variance_ratio);

        ts.push_value("norm", amp.norm());
        ts.push_value("M_exp", mexp);
        ts.push_value("energy", (amp.adjoint() * (h_->mat * amp)).real()(0));
    }

    TimeSeries ts;

private:
    const HamiltonianOp* h_;
    ModelParams params_;
    Eigen::VectorXd diag_nl_, diag_nr_;
};

/// Evolve and record the standard quantum channels at the grid times.
inline TimeSeries quantum_trajectory(const QuantumState& state0, const HamiltonianOp& h,
                                     const ModelParams& params,
                                     const std::vector<double>& t_grid,
                                     const KrylovOptions& opts = {}) {
    QuantumChannelRecorder rec(h, params);
    evolve_observe(
        state0, h, t_grid,
        [&](std::size_t, double t, const Eigen::VectorXcd& u) { rec.record(t, u); }, opts);
    return rec.ts;
}

/// Uniform grid 0, dt, 2dt, ..., spanning [0, t_final].
inline std::vector<double> uniform_grid(double t_final, double dt) {
    std::vector<double> g;
    const long n = static_cast<long>(std::round(t_final / dt));
    for (long k = 0; k <= n; ++k) g.push_back(k * dt);
    return g;
}

}  // namespace jcdimer
