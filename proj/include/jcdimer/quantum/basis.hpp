#pragma once

#include <array>

#include "jcdimer/errors.hpp"

namespace jcdimer {

/// Truncated two-cavity Fock x spin product basis.
///
/// Flat index layout: idx = ((n_L*2 + s_L)*(n_max+1) + n_R)*2 + s_R with
/// n_i in [0, n_max] and s_i in {0 (ground), 1 (excited)}; the dimension is
/// 4*(n_max+1)^2.
class QuantumBasis {
public:
    explicit QuantumBasis(int n_max) : n_max_(n_max) {
        if (n_max < 1) throw DomainError("QuantumBasis: n_max must be >= 1");
        dim_ = 4 * (n_max + 1) * (n_max + 1);
    }

    int n_max() const { return n_max_; }
    int dim() const { return dim_; }

    int index(int n_l, int s_l, int n_r, int s_r) const {
        return ((n_l * 2 + s_l) * (n_max_ + 1) + n_r) * 2 + s_r;
    }

    struct Labels {
        int n_l, s_l, n_r, s_r;
        int total_excitation() const { return n_l + s_l + n_r + s_r; }
    };

    Labels labels(int idx) const {
        Labels l;
        l.s_r = idx & 1;
        idx >>= 1;
        l.n_r = idx % (n_max_ + 1);
        idx /= (n_max_ + 1);
        l.s_l = idx & 1;
        l.n_l = idx >> 1;
        return l;
    }

    /// Default photon cutoff for a run with M conserved excitations: the
    /// coherent states involved carry negligible weight beyond M + 6*sqrt(M).
    static int default_cutoff(int excitations) {
        const double m = static_cast<double>(excitations);
        return static_cast<int>(std::ceil(m + 6.0 * std::sqrt(m)));
    }

private:
    int n_max_;
    int dim_;
};

}  // namespace jcdimer
