#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "jcdimer/errors.hpp"

namespace jcdimer {

/// Angular frequency of the strongest spectral line of a uniformly sampled
/// signal: mean-subtracted, Hann-windowed discrete Fourier transform with
/// quadratic interpolation of the peak bin.
inline double dominant_frequency(const std::vector<double>& times,
                                 const std::vector<double>& values) {
    const std::size_t n = times.size();
    if (n < 256 || values.size() != n)
        throw DomainError("dominant_frequency: need >= 256 uniform samples");
    const double dt = times[1] - times[0];
    for (std::size_t k = 1; k < n; ++k)
        if (std::abs(times[k] - times[k - 1] - dt) > 1e-9 * std::max(1.0, std::abs(dt)))
            throw DomainError("dominant_frequency: samples must be uniform");

    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(n);

    std::vector<double> y(n);
    double rms = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double hann = 0.5 * (1.0 - std::cos(2.0 * M_PI * j / (n - 1)));
        y[j] = (values[j] - mean) * hann;
        rms += (values[j] - mean) * (values[j] - mean);
    }
    rms = std::sqrt(rms / n);
    if (rms < 1e-13) throw SignalError("dominant_frequency: flat signal, no peak");

    const std::size_t n_half = n / 2;
    std::vector<double> mag(n_half, 0.0);
    for (std::size_t k = 1; k < n_half; ++k) {
        std::complex<double> acc = 0.0;
        const std::complex<double> rot = std::polar(1.0, -2.0 * M_PI * k / n);
        std::complex<double> cur = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            acc += y[j] * cur;
            cur *= rot;
        }
        mag[k] = std::abs(acc);
    }
    std::size_t peak = 1;
    for (std::size_t k = 2; k < n_half; ++k)
        if (mag[k] > mag[peak]) peak = k;

    double delta = 0.0;
    if (peak > 1 && peak + 1 < n_half) {
        const double den = mag[peak - 1] - 2.0 * mag[peak] + mag[peak + 1];
        if (den != 0.0)
            delta = std::clamp(0.5 * (mag[peak - 1] - mag[peak + 1]) / den, -0.5, 0.5);
    }
    return 2.0 * M_PI * (peak + delta) / (n * dt);
}

/// Width of one frequency bin for a run of n samples at spacing dt.
inline double frequency_bin(std::size_t n, double dt) { return 2.0 * M_PI / (n * dt); }

/// Exponential decay rate Gamma from a least-squares line through ln(values)
/// after discarding the leading `drop_fraction` of the samples.
inline double fit_decay_rate(const std::vector<double>& times,
                             const std::vector<double>& values, double drop_fraction = 0.1) {
    if (times.size() != values.size() || times.size() < 4)
        throw DomainError("fit_decay_rate: need matching series with >= 4 samples");
    const std::size_t start = static_cast<std::size_t>(drop_fraction * times.size());
    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    std::size_t m = 0;
    for (std::size_t k = start; k < times.size(); ++k) {
        if (!(values[k] > 0.0))
            throw SignalError("fit_decay_rate: non-positive value in fit window");
        const double ly = std::log(values[k]);
        st += times[k];
        sy += ly;
        stt += times[k] * times[k];
        sty += times[k] * ly;
        ++m;
    }
    const double den = m * stt - st * st;
    if (den == 0.0) throw SignalError("fit_decay_rate: degenerate fit window");
    const double slope = (m * sty - st * sy) / den;
    return -slope;
}

}  // namespace jcdimer
