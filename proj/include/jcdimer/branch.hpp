#pragma once

#include <string>

#include "jcdimer/errors.hpp"

namespace jcdimer {

/// Steady-state families of the dimer.
///
/// Symmetric states (f = 1): Gs, FpF, FpPi, FpAF. Self-trapped states
/// (f != 1): Pst, StU (ferromagnetic class), St1, St2 (antiferromagnetic).
enum class StateName { Gs, FpF, FpPi, FpAF, Pst, StU, St1, St2 };

inline const char* to_string(StateName n) {
    switch (n) {
        case StateName::Gs: return "Gs";
        case StateName::FpF: return "FP-F";
        case StateName::FpPi: return "FP-pi";
        case StateName::FpAF: return "FP-AF";
        case StateName::Pst: return "PST";
        case StateName::StU: return "ST-u";
        case StateName::St1: return "ST1";
        case StateName::St2: return "ST2";
    }
    return "?";
}

/// Discrete phase signs classifying a steady-state family.
///
/// xi1 = cos(psi*_L - psi*_R) distinguishes ferromagnetic (+1) from
/// antiferromagnetic (-1) boson/spin phase locking; xi2 = cos(phi*_i + psi*_i).
struct BranchLabel {
    int xi1 = +1;
    int xi2 = +1;
    StateName name = StateName::FpF;

    static constexpr int xi1_of(StateName n) {
        switch (n) {
            case StateName::Gs:
            case StateName::FpF:
            case StateName::Pst:
            case StateName::StU: return +1;
            default: return -1;
        }
    }

    static constexpr int xi2_of(StateName n) {
        switch (n) {
            case StateName::Gs:
            case StateName::FpAF:
            case StateName::St2: return -1;
            default: return +1;
        }
    }

    static BranchLabel of(StateName n) { return BranchLabel{xi1_of(n), xi2_of(n), n}; }

    void validate() const {
        if ((xi1 != 1 && xi1 != -1) || (xi2 != 1 && xi2 != -1))
            throw DomainError("BranchLabel: xi1, xi2 must be +1 or -1");
        if (xi1 != xi1_of(name) || xi2 != xi2_of(name))
            throw DomainError(std::string("BranchLabel: name ") + to_string(name) +
                              " inconsistent with (xi1, xi2)");
    }

    /// Symmetric (f = 1) member of the (xi1, xi2) family.
    static BranchLabel symmetric(int xi1, int xi2) {
        if (xi1 > 0) return of(xi2 > 0 ? StateName::FpF : StateName::Gs);
        return of(xi2 > 0 ? StateName::FpPi : StateName::FpAF);
    }

    /// Self-trapped member of the (xi1, xi2) family. The ferromagnetic class
    /// has two: the perfect self-trapped root (smaller f) and the unstable
    /// companion, selected by `second`.
    static BranchLabel self_trapped(int xi1, int xi2, bool second = false) {
        if (xi1 > 0) {
            if (xi2 < 0)
                throw DomainError("BranchLabel: no self-trapped state in the (+1,-1) family");
            return of(second ? StateName::StU : StateName::Pst);
        }
        return of(xi2 > 0 ? StateName::St1 : StateName::St2);
    }
};

}  // namespace jcdimer
