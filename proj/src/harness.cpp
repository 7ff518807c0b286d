#include "anc/harness.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "anc/kernels.hpp"
#include "anc/wav.hpp"

namespace anc {

const char* signal_kind_name(SignalKind k) {
  switch (k) {
    case SignalKind::sinusoid: return "sinusoid";
    case SignalKind::sawtooth: return "sawtooth";
    case SignalKind::chirp: return "chirp";
    case SignalKind::audio: return "audio";
  }
  return "?";
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined value.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void ExperimentSpec::validate() const {
  filter.validate();
  noise.validate();
  if (!channel.randomized) {
    ChannelSpec cs{channel.taps};
    cs.validate();
    if (channel.taps.size() > filter.order) {
      throw std::invalid_argument("channel length must not exceed filter order");
    }
  } else {
    if (channel.random_len == 0 || channel.random_len > filter.order) {
      throw std::invalid_argument("channel length must lie in [1, filter order]");
    }
  }
  if (n_samples < 10 * mse_window) {
    throw std::invalid_argument("n_samples must be at least 10 * mse_window");
  }
  if (!std::isfinite(input_snr_db)) {
    throw std::invalid_argument("input SNR must be finite");
  }
  if (signal.kind == SignalKind::audio && signal.audio_path.empty()) {
    throw std::invalid_argument("audio signal requires a file path");
  }
}

namespace {

SignalBuffer build_signal(const SignalSpec& sig, std::size_t n_samples) {
  switch (sig.kind) {
    case SignalKind::sinusoid:
      return gen_sinusoid(sig.freq_hz, sig.amplitude, n_samples,
                          sig.sample_rate_hz);
    case SignalKind::sawtooth:
      return gen_sawtooth(sig.freq_hz, sig.amplitude, n_samples,
                          sig.sample_rate_hz);
    case SignalKind::chirp:
      return gen_chirp(sig.chirp_f0_hz, sig.chirp_f1_hz, sig.amplitude,
                       n_samples, sig.sample_rate_hz);
    case SignalKind::audio: {
      SignalBuffer buf = load_wav(sig.audio_path);
      if (buf.size() > n_samples) buf.samples.resize(n_samples);
      return buf;
    }
  }
  throw std::invalid_argument("unknown signal kind");
}

}  // namespace

RunRecord run_experiment(const ExperimentSpec& spec, bool keep_traces) {
  spec.validate();

  RunRecord rec;
  rec.spec = spec;

  // Resolve the spec: substream seeds and channel taps become explicit so the
  // record can be re-run bit-identically.
  rec.spec.noise.seed = derive_seed(spec.seed, 1);
  if (spec.channel.randomized) {
    rec.spec.channel.taps =
        draw_random_channel(derive_seed(spec.seed, 2), spec.channel.random_len)
            .taps;
    rec.spec.channel.randomized = false;
  }

  SignalBuffer s = build_signal(spec.signal, spec.n_samples);
  const std::size_t n = s.size();
  if (n < 10 * spec.mse_window) {
    throw std::invalid_argument("signal too short for the MSE window");
  }

  SignalBuffer v1 = gen_noise(rec.spec.noise, n, s.sample_rate_hz);
  SignalBuffer v0 = channel_filter(v1, ChannelSpec{rec.spec.channel.taps});

  MixResult mix = mix_at_snr(s, v0, spec.input_snr_db);
  SignalBuffer d = std::move(mix.primary);
  rec.noise_scale = mix.scale;
  SignalBuffer x = std::move(v1);
  kern::scale(mix.scale, x.data(), n);

  SignalBuffer y, e;
  const auto t0 = std::chrono::steady_clock::now();
  switch (spec.algorithm) {
    case Algorithm::rls: {
      RlsFilter f(spec.filter);
      std::tie(y, e) = process(f, x, d);
      break;
    }
    case Algorithm::ftf: {
      FtfFilter f(spec.filter);
      std::tie(y, e) = process(f, x, d);
      break;
    }
    case Algorithm::gal: {
      GalFilter f(spec.filter);
      std::tie(y, e) = process(f, x, d);
      break;
    }
  }
  const auto t1 = std::chrono::steady_clock::now();

  rec.report.mse_curve = mse_curve(e, spec.mse_window);
  rec.report.convergence_samples = convergence_time(rec.report.mse_curve);
  if (rec.report.convergence_samples) {
    rec.report.convergence_seconds =
        static_cast<double>(*rec.report.convergence_samples) / s.sample_rate_hz;
  }
  rec.report.filter_wall_seconds =
      std::chrono::duration<double>(t1 - t0).count();
  rec.report.corr_coeff = correlation_coefficient(s, e);
  rec.report.output_snr_db = output_snr(s, e);
  rec.report.input_snr_db = spec.input_snr_db;

  rec.clean = std::move(s);
  if (keep_traces) {
    rec.traces = Traces{std::move(d), std::move(x), std::move(y), std::move(e)};
  }
  return rec;
}

std::array<RunRecord, 3> run_comparison(const ExperimentSpec& base,
                                        bool keep_traces) {
  ExperimentSpec spec = base;
  spec.algorithm = Algorithm::rls;
  RunRecord rls = run_experiment(spec, keep_traces);
  spec.algorithm = Algorithm::ftf;
  RunRecord ftf = run_experiment(spec, keep_traces);
  spec.algorithm = Algorithm::gal;
  RunRecord gal = run_experiment(spec, keep_traces);
  return {std::move(rls), std::move(ftf), std::move(gal)};
}

std::vector<RunRecord> run_sweep(const ExperimentSpec& base, SweepParam param,
                                 const std::vector<double>& values,
                                 bool keep_traces) {
  if (values.empty()) throw std::invalid_argument("sweep needs at least one value");
  std::vector<RunRecord> records;
  records.reserve(values.size());
  for (double v : values) {
    ExperimentSpec spec = base;
    switch (param) {
      case SweepParam::order: {
        if (v < 1.0 || v != std::floor(v)) {
          throw std::invalid_argument("order sweep values must be positive integers");
        }
        spec.filter.order = static_cast<std::size_t>(v);
        break;
      }
      case SweepParam::lambda:
        spec.filter.forgetting_factor = v;
        break;
      case SweepParam::mu:
        // The paper's step-size study moves both lattice steps together.
        spec.filter.refl_step = v;
        spec.filter.ladder_step = v;
        break;
      case SweepParam::snr:
        spec.input_snr_db = v;
        break;
    }
    records.push_back(run_experiment(spec, keep_traces));
  }
  return records;
}

}  // namespace anc
