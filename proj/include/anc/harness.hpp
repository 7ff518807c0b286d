#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anc/filters.hpp"
#include "anc/metrics.hpp"
#include "anc/noise.hpp"
#include "anc/signal.hpp"

namespace anc {

enum class SignalKind { sinusoid, sawtooth, chirp, audio };

const char* signal_kind_name(SignalKind k);

struct SignalSpec {
  SignalKind kind = SignalKind::sinusoid;
  double freq_hz = 440.0;  // sinusoid / sawtooth fundamental
  double amplitude = 1.0;
  double chirp_f0_hz = 100.0;
  double chirp_f1_hz = 2000.0;
  std::string audio_path;  // kind == audio
  double sample_rate_hz = kDefaultSampleRateHz;
};

// Either explicit taps or "draw random_len taps from the experiment seed".
struct ChannelChoice {
  std::vector<double> taps;      // used when not randomized
  std::size_t random_len = 4;    // used when randomized
  bool randomized = true;
};

struct ExperimentSpec {
  SignalSpec signal;
  NoiseSpec noise;
  ChannelChoice channel;
  double input_snr_db = 10.0;
  Algorithm algorithm = Algorithm::gal;
  FilterConfig filter;
  std::size_t n_samples = 20000;
  std::uint64_t seed = 1;
  std::size_t mse_window = 100;

  void validate() const;  // throws std::invalid_argument
};

struct Traces {
  SignalBuffer d;  // primary input (signal + filtered noise)
  SignalBuffer x;  // reference input
  SignalBuffer y;  // filter output
  SignalBuffer e;  // canceller output (recovered signal)
};

struct RunRecord {
  ExperimentSpec spec;      // fully resolved: channel taps drawn, seeds derived
  SignalBuffer clean;       // s(n), kept for metric recomputation
  double noise_scale = 0.0; // applied identically to both noise paths
  MetricsReport report;
  std::optional<Traces> traces;
};

// Wires the dual-input canceller: s from the signal spec, reference noise
// v1 through the unknown channel to the primary interference v0, scaled so
// the input SNR of s against scaled v0 hits spec.input_snr_db; then runs the
// selected algorithm and measures the result.
RunRecord run_experiment(const ExperimentSpec& spec, bool keep_traces = false);

// Same signal, noise, channel and seed; only the algorithm differs.
// Order: rls, ftf, gal.
std::array<RunRecord, 3> run_comparison(const ExperimentSpec& base,
                                        bool keep_traces = false);

enum class SweepParam { order, lambda, mu, snr };

// One record per value with everything else (including the seed) fixed.
std::vector<RunRecord> run_sweep(const ExperimentSpec& base, SweepParam param,
                                 const std::vector<double>& values,
                                 bool keep_traces = false);

// Per-sample trace: header n,d,x,y,e,mse_windowed; full round-trip precision;
// the mse column is empty until the window fills.
void write_csv(const RunRecord& record, const std::string& path);

// JSON document with one entry per record: spec echo plus corr_coeff,
// output_snr_db, convergence_samples and convergence_seconds.
void write_summary(const std::vector<RunRecord>& records,
                   const std::string& path);

// Split-mix style derivation of per-purpose substreams from the experiment
// seed (noise, channel, grid cells).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Subcommands: run, compare, sweep, tables.
// Exit codes: 0 success, 1 validation/usage error, 2 runtime or I/O error.
int cli_main(int argc, const char* const* argv);

}  // namespace anc
