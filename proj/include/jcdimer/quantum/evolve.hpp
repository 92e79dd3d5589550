#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "jcdimer/errors.hpp"
#include "jcdimer/quantum/hamiltonian.hpp"
#include "jcdimer/quantum/states.hpp"

namespace jcdimer {

struct KrylovOptions {
    int subspace_dim = 35;
    double step_tol = 1e-12;   // admissible propagation error per step
    double dt_init = 0.1;
    double dt_min = 1e-9;
    double dt_max = 2.0;
    double norm_tol = 1e-8;    // contract: |norm - 1| over the horizon
    double energy_tol = 1e-8;  // contract: relative <H> drift over the horizon
};

namespace detail {

/// One Lanczos factorization H V ~= V T + beta_m v_{m+1} e_m^T from vector v.
struct KrylovSpace {
    Eigen::MatrixXcd v;        // dim x m_eff orthonormal basis
    Eigen::VectorXd theta;     // eigenvalues of T
    Eigen::MatrixXd q;         // eigenvectors of T
    double beta0 = 1.0;        // norm of the seed vector
    double beta_next = 0.0;    // residual coupling out of the subspace
    int m_eff = 0;

    /// Krylov coefficients of exp(-i H tau) v: q * exp(-i theta tau) * q^T e1.
    Eigen::VectorXcd propagate_coeffs(double tau) const {
        const Eigen::VectorXd qe1 = q.row(0).transpose();
        Eigen::VectorXcd w(m_eff);
        for (int k = 0; k < m_eff; ++k)
            w(k) = std::polar(beta0 * qe1(k), -theta(k) * tau);
        return q * w;
    }

    double error_estimate(double tau) const {
        if (beta_next == 0.0) return 0.0;  // invariant subspace, result exact
        const Eigen::VectorXcd y = propagate_coeffs(tau);
        return std::abs(beta_next * y(m_eff - 1));
    }
};

inline KrylovSpace build_krylov(const SparseOp& h, const Eigen::VectorXcd& v0, int m) {
    const int dim = static_cast<int>(v0.size());
    m = std::min(m, dim);
    KrylovSpace ks;
    ks.v.resize(dim, m);
    Eigen::VectorXd alpha(m), beta(m);

    ks.beta0 = v0.norm();
    ks.v.col(0) = v0 / ks.beta0;
    int j = 0;
    for (; j < m; ++j) {
        Eigen::VectorXcd w = h * ks.v.col(j);
        if (j > 0) w -= beta(j - 1) * ks.v.col(j - 1);
        alpha(j) = (ks.v.col(j).adjoint() * w).real()(0);
        w -= alpha(j) * ks.v.col(j);
        // full reorthogonalization keeps the basis orthonormal at these sizes
        for (int k = 0; k <= j; ++k) w -= (ks.v.col(k).adjoint() * w)(0) * ks.v.col(k);
        beta(j) = w.norm();
        if (beta(j) < 1e-12) {
            ks.beta_next = 0.0;
            ++j;
            break;
        }
        if (j + 1 < m) ks.v.col(j + 1) = w / beta(j);
        ks.beta_next = beta(j);
    }
    ks.m_eff = j;

    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(ks.m_eff, ks.m_eff);
    for (int k = 0; k < ks.m_eff; ++k) {
        t(k, k) = alpha(k);
        if (k + 1 < ks.m_eff) t(k, k + 1) = t(k + 1, k) = beta(k);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    if (es.info() != Eigen::Success) throw NumericError("krylov: tridiagonal eigensolve failed");
    ks.theta = es.eigenvalues();
    ks.q = es.eigenvectors();
    return ks;
}

}  // namespace detail

/// Propagate |psi(t)> = exp(-i H t)|psi(0)> with an adaptive short-step
/// Lanczos scheme, invoking `observer(k, t_grid[k], state)` at every grid
/// time. Norm and energy monitors enforce the propagation contract.
inline void evolve_observe(
    const QuantumState& state0, const HamiltonianOp& h, const std::vector<double>& t_grid,
    const std::function<void(std::size_t, double, const Eigen::VectorXcd&)>& observer,
    const KrylovOptions& opts = {}) {
    if (t_grid.empty()) return;
    if (t_grid.front() < 0.0) throw DomainError("evolve: t_grid must start at t >= 0");
    for (std::size_t k = 1; k < t_grid.size(); ++k)
        if (!(t_grid[k] > t_grid[k - 1]))
            throw DomainError("evolve: t_grid must be strictly increasing");

    Eigen::VectorXcd v = state0.amplitudes;
    const double e0 = (v.adjoint() * (h.mat * v)).real()(0);
    const double e_scale = std::max(1.0, std::abs(e0));

    auto emit = [&](std::size_t k, double t, const Eigen::VectorXcd& u) {
        if (std::abs(u.norm() - 1.0) > opts.norm_tol)
            throw PropagationError("evolve: norm drift exceeded at t = " + std::to_string(t));
        const double e = (u.adjoint() * (h.mat * u)).real()(0);
        if (std::abs(e - e0) > opts.energy_tol * e_scale)
            throw PropagationError("evolve: energy drift exceeded at t = " + std::to_string(t));
        observer(k, t, u);
    };

    std::size_t k = 0;
    double t = 0.0;
    if (t_grid[0] == 0.0) emit(k++, 0.0, v);

    double dt = std::min(opts.dt_init, opts.dt_max);
    while (k < t_grid.size()) {
        const detail::KrylovSpace ks = detail::build_krylov(h.mat, v, opts.subspace_dim);

        dt = std::min({dt, opts.dt_max, t_grid.back() - t});
        while (dt > opts.dt_min && ks.error_estimate(dt) > opts.step_tol) dt *= 0.5;
        if (dt <= opts.dt_min)
            throw PropagationError("evolve: step size underflow at t = " + std::to_string(t));

        // dense output inside the accepted step
        while (k < t_grid.size() && t_grid[k] <= t + dt + 1e-12) {
            const double tau = std::min(t_grid[k] - t, dt);
            emit(k, t_grid[k], ks.v * ks.propagate_coeffs(tau));
            ++k;
        }
        v = ks.v * ks.propagate_coeffs(dt);
        t += dt;
        if (ks.error_estimate(dt) < 0.01 * opts.step_tol) dt *= 1.25;
    }
}

/// Convenience variant collecting the propagated states.
inline std::vector<QuantumState> evolve(const QuantumState& state0, const HamiltonianOp& h,
                                        const std::vector<double>& t_grid,
                                        const KrylovOptions& opts = {}) {
    std::vector<QuantumState> out(t_grid.size(), QuantumState{state0.basis, {}});
    evolve_observe(
        state0, h, t_grid,
        [&](std::size_t k, double, const Eigen::VectorXcd& u) { out[k].amplitudes = u; },
        opts);
    return out;
}

}  // namespace jcdimer
