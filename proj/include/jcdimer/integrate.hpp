#pragma once

#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <functional>

#include "jcdimer/energy.hpp"
#include "jcdimer/eom.hpp"
#include "jcdimer/errors.hpp"
#include "jcdimer/time_series.hpp"

namespace jcdimer {

struct IntegrateOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double min_step = 1e-13;
};

/// Integrate the semiclassical flow with an adaptive 8th-order Runge-Kutta
/// stepper, invoking `observer(t, state)` at every multiple of sample_dt
/// (including t = 0 and t_final).
inline void integrate_observe(const SemiclassicalState& state0, const ModelParams& params,
                              double t_final, double sample_dt,
                              const std::function<void(double, const CartesianState&)>& observer,
                              const IntegrateOptions& opts = {}) {
    if (!(t_final > 0.0)) throw DomainError("integrate: t_final must be > 0");
    if (!(sample_dt > 0.0)) throw DomainError("integrate: sample_dt must be > 0");

    namespace ode = boost::numeric::odeint;
    using Stepper = ode::runge_kutta_fehlberg78<CartesianState>;
    auto ctrl = ode::make_controlled<Stepper>(opts.abs_tol, opts.rel_tol);

    auto sys = [&params](const CartesianState& c, CartesianState& dc, double) {
        dc = eom_rhs_cartesian(c, params);
    };

    CartesianState c = to_cartesian(state0);
    double t = 0.0;
    double dt = sample_dt;
    observer(t, c);

    long sample_index = 1;
    const long n_samples = static_cast<long>(std::ceil(t_final / sample_dt - 1e-9));
    while (sample_index <= n_samples) {
        const double t_target = std::min(sample_index * sample_dt, t_final);
        int fails = 0;
        while (t < t_target - 1e-12) {
            double dt_try = std::min(dt, t_target - t);
            const auto res = ctrl.try_step(sys, c, t, dt_try);
            if (res == ode::success) {
                dt = dt_try;  // carry the adapted step into the next attempt
                fails = 0;
            } else {
                dt = dt_try;
                if (++fails > 500 || dt < opts.min_step)
                    throw IntegrationError("integrate: step size underflow", t);
            }
        }
        t = t_target;
        observer(t, c);
        ++sample_index;
    }
}

/// Standard channel set recorded along a semiclassical trajectory.
inline void record_classical_channels(TimeSeries& ts, double t, const CartesianState& c,
                                      const ModelParams& params) {
    const SemiclassicalState s = from_cartesian(c);
    const double nl = s.n(kLeft), nr = s.n(kRight);
    ts.push_time(t);
    ts.push_value("n_L", nl);
    ts.push_value("n_R", nr);
    ts.push_value("z_L", s.z[kLeft]);
    ts.push_value("z_R", s.z[kRight]);
    ts.push_value("psi_L", s.psi(kLeft));
    ts.push_value("psi_R", s.psi(kRight));
    ts.push_value("phi_L", s.phi[kLeft]);
    ts.push_value("phi_R", s.phi[kRight]);
    ts.push_value("Z_p", (nl - nr) / (nl + nr));
    ts.push_value("Z_a", 0.5 * std::abs(s.z[kRight] - s.z[kLeft]));
    ts.push_value("psi_r", wrap_angle(s.psi(kLeft) - s.psi(kRight)));
    ts.push_value("constraint", constraint_residual(s, params));
    ts.push_value("energy", classical_energy_cartesian(c, params));
}

/// Adaptive integration sampled at sample_dt, with the standard channels.
inline TimeSeries integrate(const SemiclassicalState& state0, const ModelParams& params,
                            double t_final, double sample_dt, double tol = 1e-10) {
    IntegrateOptions opts;
    opts.rel_tol = tol;
    opts.abs_tol = tol * 1e-2;
    TimeSeries ts;
    integrate_observe(
        state0, params, t_final, sample_dt,
        [&](double t, const CartesianState& c) { record_classical_channels(ts, t, c, params); },
        opts);
    return ts;
}

}  // namespace jcdimer
