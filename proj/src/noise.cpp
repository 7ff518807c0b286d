#include "anc/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "anc/kernels.hpp"

namespace anc {

void NoiseSpec::validate() const {
  if (burst_on_prob < 0.0 || burst_on_prob > 1.0 || burst_off_prob < 0.0 ||
      burst_off_prob > 1.0) {
    throw std::invalid_argument("burst probabilities must lie in [0, 1]");
  }
  if (burst_gain <= 0.0) throw std::invalid_argument("burst_gain must be positive");
}

void ChannelSpec::validate() const {
  if (taps.empty()) throw std::invalid_argument("channel needs at least one tap");
  bool nonzero = false;
  for (double t : taps) nonzero = nonzero || t != 0.0;
  if (!nonzero) throw std::invalid_argument("channel taps are all zero");
}

SignalBuffer gen_white(std::uint64_t seed, std::size_t n_samples,
                       double sample_rate_hz) {
  if (n_samples == 0) throw std::invalid_argument("n_samples must be positive");
  GaussianStream g(seed);
  SignalBuffer out;
  out.sample_rate_hz = sample_rate_hz;
  out.samples.resize(n_samples);
  for (auto& v : out.samples) v = g.next();
  return out;
}

SignalBuffer gen_pink(std::uint64_t seed, std::size_t n_samples,
                      double sample_rate_hz) {
  if (n_samples < 1024) {
    throw std::invalid_argument("pink noise needs n_samples >= 1024");
  }
  GaussianStream g(seed);
  SignalBuffer out;
  out.sample_rate_hz = sample_rate_hz;
  out.samples.resize(n_samples);

  // Paul Kellet's refined 1/f filter: seven first-order sections whose summed
  // response tracks a -10 dB/decade slope across the audio band.
  double b0 = 0, b1 = 0, b2 = 0, b3 = 0, b4 = 0, b5 = 0, b6 = 0;
  for (auto& v : out.samples) {
    const double w = g.next();
    b0 = 0.99886 * b0 + w * 0.0555179;
    b1 = 0.99332 * b1 + w * 0.0750759;
    b2 = 0.96900 * b2 + w * 0.1538520;
    b3 = 0.86650 * b3 + w * 0.3104856;
    b4 = 0.55000 * b4 + w * 0.5329522;
    b5 = -0.7616 * b5 - w * 0.0168980;
    v = b0 + b1 + b2 + b3 + b4 + b5 + b6 + w * 0.5362;
    b6 = w * 0.115926;
  }

  // Normalize to unit population variance.
  const auto n = static_cast<double>(n_samples);
  const double mean = kern::sum(out.data(), n_samples) / n;
  const double var = kern::sum_sq(out.data(), n_samples) / n - mean * mean;
  kern::scale(1.0 / std::sqrt(var), out.data(), n_samples);
  return out;
}

SignalBuffer gen_burst(const NoiseSpec& spec, std::size_t n_samples,
                       double sample_rate_hz) {
  spec.validate();
  if (n_samples == 0) throw std::invalid_argument("n_samples must be positive");
  GaussianStream g(spec.seed);
  SignalBuffer out;
  out.sample_rate_hz = sample_rate_hz;
  out.samples.resize(n_samples);
  bool on = false;
  for (auto& v : out.samples) {
    const double u = g.next_uniform();
    if (on) {
      if (u <= spec.burst_off_prob) on = false;
    } else {
      if (u <= spec.burst_on_prob) on = true;
    }
    v = on ? spec.burst_gain * g.next() : 0.0;
  }
  return out;
}

SignalBuffer gen_noise(const NoiseSpec& spec, std::size_t n_samples,
                       double sample_rate_hz) {
  switch (spec.kind) {
    case NoiseKind::white: return gen_white(spec.seed, n_samples, sample_rate_hz);
    case NoiseKind::pink: return gen_pink(spec.seed, n_samples, sample_rate_hz);
    case NoiseKind::burst: return gen_burst(spec, n_samples, sample_rate_hz);
  }
  throw std::invalid_argument("unknown noise kind");
}

ChannelSpec draw_random_channel(std::uint64_t seed, std::size_t n_taps) {
  if (n_taps == 0) throw std::invalid_argument("channel needs at least one tap");
  GaussianStream g(seed);
  ChannelSpec chan;
  chan.taps.resize(n_taps);
  for (auto& t : chan.taps) t = g.next();
  const double energy = kern::sum_sq(chan.taps.data(), n_taps);
  kern::scale(1.0 / std::sqrt(energy), chan.taps.data(), n_taps);
  chan.validate();
  return chan;
}

SignalBuffer channel_filter(const SignalBuffer& noise, const ChannelSpec& chan) {
  chan.validate();
  SignalBuffer out;
  out.sample_rate_hz = noise.sample_rate_hz;
  out.samples.assign(noise.size(), 0.0);
  // Tap-major accumulation: each tap contributes a shifted, scaled copy.
  for (std::size_t i = 0; i < chan.taps.size() && i < noise.size(); ++i) {
    kern::axpy(chan.taps[i], noise.data(), out.data() + i, noise.size() - i);
  }
  return out;
}

MixResult mix_at_snr(const SignalBuffer& signal, const SignalBuffer& noise,
                     double target_snr_db) {
  if (signal.size() != noise.size()) {
    throw std::invalid_argument("mix_at_snr: length mismatch");
  }
  if (signal.size() == 0) throw std::invalid_argument("mix_at_snr: empty buffers");
  const auto n = static_cast<double>(signal.size());
  const double p_sig = kern::sum_sq(signal.data(), signal.size()) / n;
  const double p_noise = kern::sum_sq(noise.data(), noise.size()) / n;
  if (p_sig <= 0.0) throw std::invalid_argument("mix_at_snr: zero-power signal");
  if (p_noise <= 0.0) throw std::invalid_argument("mix_at_snr: zero-power noise");

  const double scale = std::sqrt(p_sig / (p_noise * std::pow(10.0, target_snr_db / 10.0)));
  MixResult mix;
  mix.scale = scale;
  mix.primary.sample_rate_hz = signal.sample_rate_hz;
  mix.primary.samples.resize(signal.size());
  kern::scale_add(signal.data(), noise.data(), scale, mix.primary.data(),
                  signal.size());
  return mix;
}

}  // namespace anc
