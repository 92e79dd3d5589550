#pragma once

#include <atomic>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "jcdimer/steady_state.hpp"

namespace jcdimer {

enum class ControlParam { GScaled, UScaled };

inline ModelParams with_control(const ModelParams& base, ControlParam which, double value) {
    ModelParams p = base;
    if (which == ControlParam::GScaled)
        p.g_scaled = value;
    else
        p.u_scaled = value;
    return p;
}

struct BranchPoint {
    double control;
    FixedPoint fp;
    double z_p;  // signed photon imbalance; mirrored branches carry the opposite sign
};

/// A continued family of fixed points along a control parameter.
struct Branch {
    BranchLabel label;
    bool mirrored = false;
    std::vector<BranchPoint> points;
};

/// Continuation of all steady states of the (xi1, xi2) family along g or U.
///
/// At every control value the roots of Y are refined by the exact solver and
/// stability-graded; points are stitched into branches by state name and
/// nearest f. A branch that loses its root (e.g. at a fold) simply
/// terminates. Every self-trapped branch is emitted twice, the mirror image
/// (cavities swapped) carrying the opposite sign of Z_p.
inline std::vector<Branch> bifurcation_scan(const ModelParams& base, int xi1, int xi2,
                                            ControlParam control, double lo, double hi,
                                            int steps, const RootScanConfig& cfg = {}) {
    if (steps < 2) throw DomainError("bifurcation_scan: steps must be >= 2");

    std::vector<Branch> finished;
    std::vector<Branch> active;
    for (int k = 0; k < steps; ++k) {
        const double v = lo + (hi - lo) * static_cast<double>(k) / (steps - 1);
        const ModelParams params = with_control(base, control, v);
        std::vector<std::string> errs;
        std::vector<FixedPoint> fps = find_fixed_points_tolerant(params, xi1, xi2, cfg, &errs);

        std::vector<bool> taken(fps.size(), false);
        std::vector<Branch> still_active;
        for (Branch& br : active) {
            int best = -1;
            double best_df = 0.0;
            for (std::size_t j = 0; j < fps.size(); ++j) {
                if (taken[j] || fps[j].branch.name != br.label.name) continue;
                const double df = std::abs(fps[j].f - br.points.back().fp.f);
                if (best < 0 || df < best_df) {
                    best = static_cast<int>(j);
                    best_df = df;
                }
            }
            if (best >= 0) {
                taken[best] = true;
                br.points.push_back({v, fps[best], fps[best].photon_imbalance_zp()});
                still_active.push_back(std::move(br));
            } else {
                finished.push_back(std::move(br));  // branch terminates here
            }
        }
        active = std::move(still_active);
        for (std::size_t j = 0; j < fps.size(); ++j) {
            if (taken[j]) continue;
            Branch br;
            br.label = fps[j].branch;
            br.points.push_back({v, fps[j], fps[j].photon_imbalance_zp()});
            active.push_back(std::move(br));
        }
    }
    for (Branch& br : active) finished.push_back(std::move(br));

    // mirror images of the self-trapped branches (f -> 1/f, Z_p -> -Z_p)
    const std::size_t n_primary = finished.size();
    for (std::size_t k = 0; k < n_primary; ++k) {
        bool self_trapped = false;
        for (const BranchPoint& pt : finished[k].points)
            if (pt.fp.f < 1.0 - 1e-7) self_trapped = true;
        if (!self_trapped) continue;
        Branch m = finished[k];
        m.mirrored = true;
        for (BranchPoint& pt : m.points) pt.z_p = -pt.z_p;
        finished.push_back(std::move(m));
    }
    return finished;
}

enum class DiagramClass { Ferro, Antiferro };

/// Phase diagrams exclude the small-coupling strip below this g; the
/// coherent-state formalism does not extend to g -> 0.
inline constexpr double kPhaseDiagramGMin = 0.25;

struct PhaseDiagramCell {
    enum class Status : std::uint8_t { Ok, Excluded, Unresolved };
    Status status = Status::Ok;
    std::uint32_t stable_mask = 0;  // bitwise-or of state_bit() for stable states
};

inline constexpr std::uint32_t state_bit(StateName n) {
    return 1u << static_cast<std::uint32_t>(n);
}

struct PhaseDiagram {
    DiagramClass cls;
    std::vector<double> g_values;
    std::vector<double> u_values;
    std::vector<PhaseDiagramCell> cells;  // row-major, index = iu * g_values.size() + ig

    const PhaseDiagramCell& at(std::size_t ig, std::size_t iu) const {
        return cells[iu * g_values.size() + ig];
    }
};

/// Map of stable steady states over the (g, U) plane for one spin class.
/// Cells whose solves fail are flagged unresolved rather than aborting the
/// scan; cells below the g cutoff are flagged excluded.
inline PhaseDiagram phase_diagram(const ModelParams& base, double g_lo, double g_hi,
                                  double u_lo, double u_hi, int res_g, int res_u,
                                  DiagramClass cls, int jobs = 1,
                                  const RootScanConfig& cfg = {}) {
    if (res_g < 8 || res_u < 8) throw DomainError("phase_diagram: resolution must be >= 8");

    PhaseDiagram pd;
    pd.cls = cls;
    for (int i = 0; i < res_g; ++i)
        pd.g_values.push_back(g_lo + (g_hi - g_lo) * static_cast<double>(i) / (res_g - 1));
    for (int j = 0; j < res_u; ++j)
        pd.u_values.push_back(u_lo + (u_hi - u_lo) * static_cast<double>(j) / (res_u - 1));
    pd.cells.resize(static_cast<std::size_t>(res_g) * res_u);

    const int xi1 = (cls == DiagramClass::Ferro) ? +1 : -1;
    auto eval_cell = [&](std::size_t idx) {
        const std::size_t ig = idx % pd.g_values.size();
        const std::size_t iu = idx / pd.g_values.size();
        PhaseDiagramCell cell;
        const double g = pd.g_values[ig];
        if (g < kPhaseDiagramGMin) {
            cell.status = PhaseDiagramCell::Status::Excluded;
            pd.cells[idx] = cell;
            return;
        }
        ModelParams params = base;
        params.g_scaled = g;
        params.u_scaled = pd.u_values[iu];
        try {
            for (int xi2 : {+1, -1}) {
                std::vector<std::string> errs;
                const auto fps = find_fixed_points_tolerant(params, xi1, xi2, cfg, &errs);
                for (const FixedPoint& fp : fps)
                    if (fp.stable) cell.stable_mask |= state_bit(fp.branch.name);
            }
        } catch (const Error&) {
            cell.status = PhaseDiagramCell::Status::Unresolved;
        }
        pd.cells[idx] = cell;
    };

    const std::size_t total = pd.cells.size();
    if (jobs <= 1) {
        for (std::size_t idx = 0; idx < total; ++idx) eval_cell(idx);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back([&] {
                for (std::size_t idx = next.fetch_add(1); idx < total;
                     idx = next.fetch_add(1))
                    eval_cell(idx);
            });
        for (auto& th : pool) th.join();
    }
    return pd;
}

}  // namespace jcdimer
