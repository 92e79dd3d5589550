#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "jcdimer/branch.hpp"
#include "jcdimer/energy.hpp"
#include "jcdimer/errors.hpp"
#include "jcdimer/fixed_point.hpp"
#include "jcdimer/params.hpp"
#include "jcdimer/stability.hpp"

namespace jcdimer {

/// Chemical potential of a steady state in the small-eta approximation,
/// as a function of the relative photon population f = n_R/n_L.
inline double mu_small_eta(double f, const ModelParams& params, const BranchLabel& branch) {
    if (!(f > 0.0)) throw DomainError("mu_small_eta: f must be > 0");
    const double sf = std::sqrt(f);
    return params.omega - 0.5 * branch.xi1 * (sf + 1.0 / sf) + 0.5 * params.u_scaled +
           0.25 * branch.xi2 * params.g_scaled * std::sqrt(1.0 + f) * (1.0 + 1.0 / sf);
}

/// Small-eta steady-state populations for a given f (n_L + n_R = 1 - eta).
inline std::array<double, 2> populations_small_eta(double f, const ModelParams& params) {
    const double nl = (1.0 - params.eta()) / (1.0 + f);
    return {nl, f * nl};
}

/// Effective root function Y(f) whose zeros are the steady states of the
/// (xi1, xi2) family in the small-eta approximation. Y(1) = 0 identically.
inline double y_function(double f, const ModelParams& params, const BranchLabel& branch) {
    if (!(f > 0.0)) throw DomainError("y_function: f must be > 0");
    const double eta = params.eta();
    const double mu = mu_small_eta(f, params, branch);
    const auto n = populations_small_eta(f, params);
    const double d2 = eta * (params.omega0 - mu);
    const double g2 = params.g_scaled * params.g_scaled;
    const double fl = d2 * d2 + 4.0 * g2 * n[kLeft];
    const double fr = d2 * d2 + 4.0 * g2 * n[kRight];
    const double sf = std::sqrt(f);
    return branch.xi1 * (f - 1.0) -
           params.u_scaled * (1.0 - eta) * ((1.0 - f) / (f + 1.0)) * sf -
           branch.xi2 * g2 * sf * (1.0 / std::sqrt(fl) - 1.0 / std::sqrt(fr));
}

/// Atomic inversion at a steady state with photon population n_star_i.
inline double atomic_inversion_star(double n_star_i, double mu, const ModelParams& params,
                                    int xi2) {
    const double d = params.eta() * (params.omega0 - mu);
    const double den = std::sqrt(d * d + 4.0 * params.g_scaled * params.g_scaled * n_star_i);
    if (den == 0.0)
        throw DegenerateInputError("atomic_inversion_star: n_star = 0 and mu = omega0");
    return xi2 * d / den;
}

struct RootScanConfig {
    double f_min = 1e-6;
    double f_max = 1.0;
    int grid_points = 4000;
    double bisection_tol = 1e-12;
    bool deflate_symmetric = true;

    void validate() const {
        if (!(0.0 < f_min && f_min < f_max && f_max <= 1.0))
            throw DomainError("RootScanConfig: need 0 < f_min < f_max <= 1");
        if (grid_points < 100) throw DomainError("RootScanConfig: grid_points must be >= 100");
    }
};

namespace detail {

inline double bisect(const std::function<double(double)>& fn, double a, double b, double fa,
                     double fb, double tol) {
    while (b - a > tol) {
        const double m = 0.5 * (a + b);
        const double fm = fn(m);
        if (fm == 0.0) return m;
        if ((fa < 0.0) != (fm < 0.0)) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    (void)fb;
    return 0.5 * (a + b);
}

}  // namespace detail

/// All roots of Y on (f_min, f_max]: sign changes on a combined log/linear
/// grid refined by bisection, with the exact symmetric root f = 1 handled
/// separately (it is appended, not searched for).
inline std::vector<double> find_roots_y(const ModelParams& params, const BranchLabel& branch,
                                        const RootScanConfig& cfg = {}) {
    cfg.validate();
    auto fn = [&](double f) { return y_function(f, params, branch); };

    // Interior scan stops just short of f = 1 so the exact root there does
    // not shadow sign changes of the deflated problem.
    const double edge = cfg.deflate_symmetric ? 1.0 - 1e-7 : 1.0;
    const double hi = std::min(cfg.f_max, edge);

    std::vector<double> grid;
    grid.reserve(cfg.grid_points + 2);
    const int half = cfg.grid_points / 2;
    const double lr = std::log(hi / cfg.f_min);
    for (int k = 0; k <= half; ++k) grid.push_back(cfg.f_min * std::exp(lr * k / half));
    for (int k = 0; k <= half; ++k)
        grid.push_back(cfg.f_min + (hi - cfg.f_min) * static_cast<double>(k) / half);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<double> roots;
    double fa = fn(grid.front());
    for (std::size_t k = 1; k < grid.size(); ++k) {
        const double fb = fn(grid[k]);
        if (fa == 0.0) {
            roots.push_back(grid[k - 1]);
        } else if (fb != 0.0 && (fa < 0.0) != (fb < 0.0)) {
            roots.push_back(
                detail::bisect(fn, grid[k - 1], grid[k], fa, fb, cfg.bisection_tol));
        }
        fa = fb;
    }
    if (fa == 0.0) roots.push_back(grid.back());

    // merge near-duplicates
    std::sort(roots.begin(), roots.end());
    std::vector<double> out;
    for (double r : roots)
        if (out.empty() || r - out.back() > 10.0 * cfg.bisection_tol) out.push_back(r);

    if (cfg.deflate_symmetric && cfg.f_max >= edge) out.push_back(1.0);
    return out;
}

/// Closed-form small-eta critical lines of the bifurcation set.
struct CriticalLines {
    double g_c1;  // onset of the perfect self-trapped pair, vs u_scaled
    double g_c2;  // FP-F instability (subcritical pitchfork), vs u_scaled
    double u_c1;  // FP-pi -> ST1 pitchfork, vs g_scaled
    double u_c2;  // FP-AF -> ST2 pitchfork, vs g_scaled
};

inline CriticalLines critical_lines(const ModelParams& params) {
    const double eta = params.eta();
    const double u = params.u_scaled;
    const double g = params.g_scaled;
    const double s2 = std::sqrt(2.0);
    CriticalLines c;
    c.g_c1 = 2.0 + 3.0 * std::pow(0.5 * (1.0 + u), 4.0 / 3.0) * std::pow(eta, 2.0 / 3.0) -
             0.5 * eta;
    c.g_c2 = (std::sqrt(8.0) + s2 * u) - ((3.0 / s2) * u + s2) * eta;
    c.u_c1 = 2.0 + g / s2 + (2.0 + 3.0 * g / (2.0 * s2)) * eta;
    c.u_c2 = 2.0 - g / s2 + (2.0 - 3.0 * g / (2.0 * s2)) * eta;
    return c;
}

/// Approximate fixed point from a root of Y, used to seed the exact solver.
inline FixedPoint small_eta_fixed_point_guess(double f, const ModelParams& params,
                                              const BranchLabel& branch) {
    FixedPoint fp;
    fp.branch = branch;
    fp.f = f;
    fp.mu_star = mu_small_eta(f, params, branch);
    fp.n_star = populations_small_eta(f, params);
    for (int i = 0; i < 2; ++i)
        fp.z_star[i] = atomic_inversion_star(fp.n_star[i], fp.mu_star, params, branch.xi2);
    return fp;
}

struct NewtonOptions {
    int max_iter = 100;
    double fd_step = 1e-7;
    double residual_tol = 1e-12;
};

namespace detail {

/// Residuals of the exact steady-state system in the unknowns
/// u = (n_L, n_R, z_L, z_R, mu): the two phase-rate equations, the two
/// inversion relations, and the excitation constraint.
inline Eigen::Matrix<double, 5, 1> steady_state_residual(const Eigen::Matrix<double, 5, 1>& u,
                                                         const ModelParams& params,
                                                         const BranchLabel& branch) {
    const double nl = u(0), nr = u(1), zl = u(2), zr = u(3), mu = u(4);
    const double g = params.g_scaled;
    const double eta = params.eta();
    const double x1 = branch.xi1, x2 = branch.xi2;

    Eigen::Matrix<double, 5, 1> F;
    F(0) = -(params.omega - mu) - 0.5 * g * std::sqrt((1.0 - zl * zl) / nl) * x2 +
           x1 * std::sqrt(nr / nl) - params.u_scaled * nl;
    F(1) = -(params.omega - mu) - 0.5 * g * std::sqrt((1.0 - zr * zr) / nr) * x2 +
           x1 * std::sqrt(nl / nr) - params.u_scaled * nr;
    const double d = eta * (params.omega0 - mu);
    F(2) = zl - x2 * d / std::sqrt(d * d + 4.0 * g * g * nl);
    F(3) = zr - x2 * d / std::sqrt(d * d + 4.0 * g * g * nr);
    F(4) = nl + nr + 0.5 * eta * (zl + zr + 2.0) - 1.0;
    return F;
}

inline bool in_domain(const Eigen::Matrix<double, 5, 1>& u) {
    return u(0) > 1e-14 && u(1) > 1e-14 && std::abs(u(2)) < 1.0 && std::abs(u(3)) < 1.0;
}

}  // namespace detail

/// Solve the steady-state equations exactly (finite eta) by damped Newton
/// iteration seeded from `guess`. Returns a fully populated FixedPoint,
/// including the stability spectrum.
inline FixedPoint solve_steady_state_exact(const FixedPoint& guess, const ModelParams& params,
                                           const BranchLabel& branch,
                                           const NewtonOptions& opts = {}) {
    using Vec5 = Eigen::Matrix<double, 5, 1>;
    using Mat5 = Eigen::Matrix<double, 5, 5>;

    Vec5 u;
    u << guess.n_star[0], guess.n_star[1], guess.z_star[0], guess.z_star[1], guess.mu_star;
    if (!detail::in_domain(u))
        throw DomainError("solve_steady_state_exact: guess outside domain");

    Vec5 F = detail::steady_state_residual(u, params, branch);
    double fnorm = F.norm();
    int iter = 0;
    for (; iter < opts.max_iter && fnorm > opts.residual_tol; ++iter) {
        Mat5 J;
        for (int j = 0; j < 5; ++j) {
            const double h = opts.fd_step * std::max(1.0, std::abs(u(j)));
            Vec5 up = u, um = u;
            up(j) += h;
            um(j) -= h;
            if (!detail::in_domain(up) || !detail::in_domain(um)) {
                // one-sided difference at a domain edge
                if (!detail::in_domain(up)) {
                    J.col(j) = (F - detail::steady_state_residual(um, params, branch)) / h;
                } else {
                    J.col(j) = (detail::steady_state_residual(up, params, branch) - F) / h;
                }
            } else {
                J.col(j) = (detail::steady_state_residual(up, params, branch) -
                            detail::steady_state_residual(um, params, branch)) /
                           (2.0 * h);
            }
        }
        Eigen::FullPivLU<Mat5> lu(J);
        if (!lu.isInvertible())
            throw SingularityError("solve_steady_state_exact: singular Jacobian");
        const Vec5 step = lu.solve(-F);

        double lambda = 1.0;
        bool accepted = false;
        for (int halvings = 0; halvings < 40; ++halvings, lambda *= 0.5) {
            const Vec5 trial = u + lambda * step;
            if (!detail::in_domain(trial)) continue;
            const Vec5 Ft = detail::steady_state_residual(trial, params, branch);
            if (Ft.norm() < fnorm) {
                u = trial;
                F = Ft;
                fnorm = Ft.norm();
                accepted = true;
                break;
            }
        }
        if (!accepted) break;
    }
    if (fnorm > opts.residual_tol)
        throw ConvergenceError("solve_steady_state_exact: no convergence after " +
                                   std::to_string(iter) + " iterations",
                               fnorm);

    FixedPoint fp;
    fp.branch = branch;
    // left-right convention: the fuller cavity is L
    if (u(1) > u(0)) {
        fp.n_star = {u(1), u(0)};
        fp.z_star = {u(3), u(2)};
    } else {
        fp.n_star = {u(0), u(1)};
        fp.z_star = {u(2), u(3)};
    }
    fp.f = fp.n_star[1] / fp.n_star[0];
    fp.mu_star = u(4);
    fp.energy = classical_energy(fp.state(), params.with_mu(0.0));
    apply_stability(fp, params);
    return fp;
}

/// Locate, refine, classify, and stability-grade every steady state of the
/// (xi1, xi2) family at the given parameters. Fixed points are ordered by
/// increasing f (self-trapped first, symmetric last).
inline std::vector<FixedPoint> find_fixed_points(const ModelParams& params, int xi1, int xi2,
                                                 const RootScanConfig& cfg = {}) {
    BranchLabel probe = BranchLabel::symmetric(xi1, xi2);
    const std::vector<double> roots = find_roots_y(params, probe, cfg);

    std::vector<double> interior;
    bool have_symmetric = false;
    for (double r : roots) {
        if (r >= 1.0 - 1e-7)
            have_symmetric = true;
        else
            interior.push_back(r);
    }
    std::sort(interior.begin(), interior.end());

    std::vector<FixedPoint> out;
    for (std::size_t k = 0; k < interior.size(); ++k) {
        // Ferromagnetic family: the smallest-f root is the perfect self-trapped
        // state, larger ones its unstable companions.
        const bool second = (xi1 > 0) && (k > 0);
        BranchLabel label = BranchLabel::self_trapped(xi1, xi2, second);
        out.push_back(solve_steady_state_exact(
            small_eta_fixed_point_guess(interior[k], params, label), params, label));
    }
    if (have_symmetric) {
        BranchLabel label = BranchLabel::symmetric(xi1, xi2);
        out.push_back(solve_steady_state_exact(small_eta_fixed_point_guess(1.0, params, label),
                                               params, label));
    }
    return out;
}

/// Like find_fixed_points, but per-root failures are collected instead of
/// thrown; used by scans where individual cells may sit on a fold.
inline std::vector<FixedPoint> find_fixed_points_tolerant(const ModelParams& params, int xi1,
                                                          int xi2, const RootScanConfig& cfg,
                                                          std::vector<std::string>* errors) {
    BranchLabel probe = BranchLabel::symmetric(xi1, xi2);
    const std::vector<double> roots = find_roots_y(params, probe, cfg);

    std::vector<double> interior;
    bool have_symmetric = false;
    for (double r : roots) {
        if (r >= 1.0 - 1e-7)
            have_symmetric = true;
        else
            interior.push_back(r);
    }
    std::sort(interior.begin(), interior.end());

    std::vector<FixedPoint> out;
    auto attempt = [&](double f, const BranchLabel& label) {
        try {
            out.push_back(solve_steady_state_exact(
                small_eta_fixed_point_guess(f, params, label), params, label));
        } catch (const Error& e) {
            if (errors)
                errors->push_back(std::string(to_string(label.name)) + " at f=" +
                                  std::to_string(f) + ": " + e.what());
        }
    };
    for (std::size_t k = 0; k < interior.size(); ++k) {
        if (xi1 > 0 && xi2 < 0) {
            if (errors) errors->push_back("unexpected interior root in the (+1,-1) family");
            continue;
        }
        attempt(interior[k], BranchLabel::self_trapped(xi1, xi2, xi1 > 0 && k > 0));
    }
    if (have_symmetric) attempt(1.0, BranchLabel::symmetric(xi1, xi2));
    return out;
}

}  // namespace jcdimer
