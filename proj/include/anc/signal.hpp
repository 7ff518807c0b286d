#pragma once

#include <cstddef>
#include <vector>

namespace anc {

inline constexpr double kDefaultSampleRateHz = 8000.0;

// A finite run of real samples plus the rate they were taken at.  The common
// currency between generators, filters and metrics.
struct SignalBuffer {
  std::vector<double> samples;
  double sample_rate_hz = kDefaultSampleRateHz;

  std::size_t size() const { return samples.size(); }
  double* data() { return samples.data(); }
  const double* data() const { return samples.data(); }
  double operator[](std::size_t i) const { return samples[i]; }
  double& operator[](std::size_t i) { return samples[i]; }
};

// samples[n] = amplitude * sin(2*pi*freq_hz*n/fs + phase_rad).
// Rejects freq_hz >= fs/2 and n_samples == 0.
SignalBuffer gen_sinusoid(double freq_hz, double amplitude,
                          std::size_t n_samples,
                          double sample_rate_hz = kDefaultSampleRateHz,
                          double phase_rad = 0.0);

// Linear ramp from -amplitude to +amplitude each period:
// samples[n] = amplitude * (2*frac(freq_hz*n/fs) - 1).
SignalBuffer gen_sawtooth(double freq_hz, double amplitude,
                          std::size_t n_samples,
                          double sample_rate_hz = kDefaultSampleRateHz);

// Linear-frequency sweep f0 -> f1 across the buffer:
// samples[n] = amplitude * sin(2*pi*(f0 + (f1-f0)*t/(2T))*t), t = n/fs,
// T = n_samples/fs.  With f0 == f1 this reduces to gen_sinusoid.
SignalBuffer gen_chirp(double f0_hz, double f1_hz, double amplitude,
                       std::size_t n_samples,
                       double sample_rate_hz = kDefaultSampleRateHz);

}  // namespace anc
