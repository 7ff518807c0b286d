#include "anc/signal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace anc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_common(double freq_hz, double amplitude, std::size_t n_samples,
                  double sample_rate_hz) {
  if (sample_rate_hz <= 0.0) {
    throw std::invalid_argument("sample rate must be positive");
  }
  if (n_samples == 0) throw std::invalid_argument("n_samples must be positive");
  if (amplitude <= 0.0) throw std::invalid_argument("amplitude must be positive");
  if (freq_hz < 0.0) throw std::invalid_argument("frequency must be nonnegative");
  if (freq_hz >= sample_rate_hz / 2.0) {
    throw std::invalid_argument("frequency must be below Nyquist (fs/2)");
  }
}

}  // namespace

SignalBuffer gen_sinusoid(double freq_hz, double amplitude,
                          std::size_t n_samples, double sample_rate_hz,
                          double phase_rad) {
  check_common(freq_hz, amplitude, n_samples, sample_rate_hz);
  SignalBuffer out;
  out.sample_rate_hz = sample_rate_hz;
  out.samples.resize(n_samples);
  for (std::size_t n = 0; n < n_samples; ++n) {
    const double t = static_cast<double>(n) / sample_rate_hz;
    out.samples[n] = amplitude * std::sin(kTwoPi * freq_hz * t + phase_rad);
  }
  return out;
}

SignalBuffer gen_sawtooth(double freq_hz, double amplitude,
                          std::size_t n_samples, double sample_rate_hz) {
  check_common(freq_hz, amplitude, n_samples, sample_rate_hz);
  SignalBuffer out;
  out.sample_rate_hz = sample_rate_hz;
  out.samples.resize(n_samples);
  for (std::size_t n = 0; n < n_samples; ++n) {
    const double cycles = freq_hz * static_cast<double>(n) / sample_rate_hz;
    const double frac = cycles - std::floor(cycles);
    out.samples[n] = amplitude * (2.0 * frac - 1.0);
  }
  return out;
}

SignalBuffer gen_chirp(double f0_hz, double f1_hz, double amplitude,
                       std::size_t n_samples, double sample_rate_hz) {
  check_common(f0_hz, amplitude, n_samples, sample_rate_hz);
  if (f1_hz < 0.0 || f1_hz >= sample_rate_hz / 2.0) {
    throw std::invalid_argument("end frequency must be in [0, fs/2)");
  }
  SignalBuffer out;
  out.sample_rate_hz = sample_rate_hz;
  out.samples.resize(n_samples);
  const double sweep_time = static_cast<double>(n_samples) / sample_rate_hz;
  for (std::size_t n = 0; n < n_samples; ++n) {
    const double t = static_cast<double>(n) / sample_rate_hz;
    // Written so that f0 == f1 reproduces gen_sinusoid bit-for-bit.
    const double inst = f0_hz + (f1_hz - f0_hz) * t / (2.0 * sweep_time);
    out.samples[n] = amplitude * std::sin(kTwoPi * inst * t + 0.0);
  }
  return out;
}

}  // namespace anc
