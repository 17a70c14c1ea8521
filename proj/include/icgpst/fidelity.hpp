#pragma once

// Numeric verification layer: the transfer amplitude from the closed
// eigenvalue sum, sampled fidelity traces, and the |F| = 1 checks that
// back the exact deciders.

#include "icgpst/icg.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace icgpst {

/// F(t)_{ab} = (1/n) * sum_k exp(i lambda_k t) w_n^{k(a-b)}. Each phase
/// is reduced modulo 2*pi before evaluation to keep trigonometric
/// arguments small.
inline std::complex<double> transfer_amplitude(const IntegerSpectrum& spec, i64 a, i64 b,
                                               double t) {
  const i64 n = spec.n;
  if (a < 0 || a >= n || b < 0 || b >= n)
    throw std::invalid_argument("transfer_amplitude: vertex out of range 0..n-1");
  if (!std::isfinite(t)) throw std::invalid_argument("transfer_amplitude: time must be finite");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  i64 diff = (a - b) % n;
  if (diff < 0) diff += n;
  std::complex<double> sum{0.0, 0.0};
  for (i64 k = 0; k < n; ++k) {
    const double phase =
        std::fmod(static_cast<double>(spec.values[static_cast<size_t>(k)]) * t, two_pi) +
        two_pi * static_cast<double>((k * diff) % n) / static_cast<double>(n);
    sum += std::polar(1.0, phase);
  }
  return sum / static_cast<double>(n);
}

struct FidelityTrace {
  i64 n = 0;
  i64 a = 0;
  i64 b = 0;
  std::vector<double> times;
  std::vector<std::complex<double>> amplitudes;
  std::vector<double> magnitudes;
};

/// Uniform sampling of F(t)_{ab} on [0, t_max], both endpoints included.
inline FidelityTrace fidelity_trace(const IntegerSpectrum& spec, i64 a, i64 b, double t_max,
                                    i64 steps) {
  if (steps < 2) throw std::invalid_argument("fidelity_trace: need at least 2 steps");
  if (!std::isfinite(t_max) || t_max < 0)
    throw std::invalid_argument("fidelity_trace: t_max must be finite and nonnegative");
  FidelityTrace trace{spec.n, a, b, {}, {}, {}};
  trace.times.reserve(static_cast<size_t>(steps));
  trace.amplitudes.reserve(static_cast<size_t>(steps));
  trace.magnitudes.reserve(static_cast<size_t>(steps));
  for (i64 i = 0; i < steps; ++i) {
    const double t = t_max * static_cast<double>(i) / static_cast<double>(steps - 1);
    const auto amp = transfer_amplitude(spec, a, b, t);
    trace.times.push_back(t);
    trace.amplitudes.push_back(amp);
    trace.magnitudes.push_back(std::abs(amp));
  }
  return trace;
}

/// |F(pi/2)_{n/2,0}| >= 1 - tol. Odd orders have no antipodal vertex and
/// never transfer, so the answer there is false.
inline bool verify_pst_numeric(const IntegerSpectrum& spec, double tol) {
  if (spec.n % 2 != 0) return false;
  const auto amp = transfer_amplitude(spec, spec.n / 2, 0, std::numbers::pi / 2);
  return std::abs(amp) >= 1.0 - tol;
}

/// Integer spectra make the evolution 2*pi-periodic: F(2*pi) must be the
/// identity, and by circulant symmetry the (0,0) entry decides it.
inline bool verify_periodicity(const IntegerSpectrum& spec) {
  const auto amp = transfer_amplitude(spec, 0, 0, 2.0 * std::numbers::pi);
  return std::abs(amp - 1.0) < 1e-9;
}

}  // namespace icgpst
