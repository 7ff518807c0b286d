#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "anc/signal.hpp"

namespace anc {

enum class NoiseKind { white, pink, burst };

struct NoiseSpec {
  NoiseKind kind = NoiseKind::white;
  std::uint64_t seed = 0;
  double burst_on_prob = 0.05;   // off -> on transition probability per sample
  double burst_off_prob = 0.1;   // on -> off transition probability per sample
  double burst_gain = 3.0;
  void validate() const;  // throws std::invalid_argument
};

// FIR path from the reference-noise input to the primary-path interference.
struct ChannelSpec {
  std::vector<double> taps;
  void validate() const;  // empty or all-zero taps are rejected
};

// Deterministic standard-normal stream: mt19937_64 driving a Box-Muller
// transform.  Every stochastic generator in the library draws from this, so
// outputs are bit-identical for a given seed across platforms.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

  // Uniform on (0, 1].
  double next_uniform() {
    return static_cast<double>((rng_() >> 11) + 1) * 0x1.0p-53;
  }

  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// i.i.d. standard Gaussian samples.
SignalBuffer gen_white(std::uint64_t seed, std::size_t n_samples,
                       double sample_rate_hz = kDefaultSampleRateHz);

// 1/f-shaped noise (-10 dB/decade over [fs/100, fs/2.5]), normalized to unit
// variance over the buffer.  Requires n_samples >= 1024.
SignalBuffer gen_pink(std::uint64_t seed, std::size_t n_samples,
                      double sample_rate_hz = kDefaultSampleRateHz);

// White Gaussian noise gated by a two-state Markov chain; starts in the off
// state, transitions before each emission, and scales on-state samples by
// burst_gain.
SignalBuffer gen_burst(const NoiseSpec& spec, std::size_t n_samples,
                       double sample_rate_hz = kDefaultSampleRateHz);

// Dispatch on spec.kind.
SignalBuffer gen_noise(const NoiseSpec& spec, std::size_t n_samples,
                       double sample_rate_hz = kDefaultSampleRateHz);

// L Gaussian taps drawn from the seeded stream, normalized to unit energy.
ChannelSpec draw_random_channel(std::uint64_t seed, std::size_t n_taps);

// out[n] = sum_{i<L} taps[i] * noise[n-i], zero prehistory, same length.
SignalBuffer channel_filter(const SignalBuffer& noise, const ChannelSpec& chan);

struct MixResult {
  SignalBuffer primary;  // signal + scale * noise
  double scale;          // applied to the noise; reuse on the reference path
};

// Scales the noise so that 10*log10(P_signal / P_scaled_noise) equals
// target_snr_db exactly, powers taken as mean squares over the buffers.
MixResult mix_at_snr(const SignalBuffer& signal, const SignalBuffer& noise,
                     double target_snr_db);

}  // namespace anc
