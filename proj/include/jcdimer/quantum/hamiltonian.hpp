#pragma once

#include <Eigen/Sparse>
#include <cmath>
#include <complex>
#include <vector>

#include "jcdimer/params.hpp"
#include "jcdimer/quantum/basis.hpp"

namespace jcdimer {

using SparseOp = Eigen::SparseMatrix<std::complex<double>, Eigen::RowMajor>;

/// Sparse Hermitian Hamiltonian of the dimer on a truncated basis.
///
/// Built with physical couplings g = g_scaled*sqrt(M), U = u_scaled/M, J = 1
/// and the -mu*M term (mu defaults to 0; it only rotates the global phase of
/// each excitation sector). Every retained term conserves the total
/// excitation, so [H, M] = 0 holds exactly on the truncated space.
struct HamiltonianOp {
    QuantumBasis basis;
    SparseOp mat;

    Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const { return mat * v; }
};

inline HamiltonianOp build_hamiltonian(const ModelParams& params, const QuantumBasis& basis) {
    const double g = params.g_physical();
    const double u = params.u_physical();
    const int n_max = basis.n_max();

    std::vector<Eigen::Triplet<std::complex<double>>> trip;
    trip.reserve(static_cast<std::size_t>(basis.dim()) * 7);

    for (int idx = 0; idx < basis.dim(); ++idx) {
        const auto l = basis.labels(idx);
        double diag = params.omega * (l.n_l + l.n_r) + params.omega0 * (l.s_l + l.s_r) +
                      0.5 * u * (l.n_l * (l.n_l - 1.0) + l.n_r * (l.n_r - 1.0)) -
                      params.mu * l.total_excitation();
        trip.emplace_back(idx, idx, diag);

        // g (a sigma+ + a^dag sigma-) per cavity: emit the lowering direction
        // and its conjugate explicitly.
        if (l.s_l == 1 && l.n_l < n_max) {
            const int j = basis.index(l.n_l + 1, 0, l.n_r, l.s_r);
            const double amp = g * std::sqrt(l.n_l + 1.0);
            trip.emplace_back(j, idx, amp);
            trip.emplace_back(idx, j, amp);
        }
        if (l.s_r == 1 && l.n_r < n_max) {
            const int j = basis.index(l.n_l, l.s_l, l.n_r + 1, 0);
            const double amp = g * std::sqrt(l.n_r + 1.0);
            trip.emplace_back(j, idx, amp);
            trip.emplace_back(idx, j, amp);
        }
        // -J a_L^dag a_R + h.c.
        if (l.n_r > 0 && l.n_l < n_max) {
            const int j = basis.index(l.n_l + 1, l.s_l, l.n_r - 1, l.s_r);
            const double amp = -std::sqrt((l.n_l + 1.0) * l.n_r);
            trip.emplace_back(j, idx, amp);
            trip.emplace_back(idx, j, amp);
        }
    }

    HamiltonianOp op{basis, SparseOp(basis.dim(), basis.dim())};
    op.mat.setFromTriplets(trip.begin(), trip.end());
    op.mat.makeCompressed();
    return op;
}

/// Diagonal of the total-excitation operator over the basis.
inline Eigen::VectorXd total_excitation_diagonal(const QuantumBasis& basis) {
    Eigen::VectorXd d(basis.dim());
    for (int idx = 0; idx < basis.dim(); ++idx)
        d(idx) = basis.labels(idx).total_excitation();
    return d;
}

}  // namespace jcdimer
