#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "anc/signal.hpp"

namespace anc {

enum class Algorithm { rls, ftf, gal };

const char* algorithm_name(Algorithm a);

struct FilterConfig {
  std::size_t order = 16;            // tap count N / final lattice order M
  double forgetting_factor = 0.995;  // lambda in (0, 1]
  double init_delta = 0.01;          // inverse-correlation / LS-sum seed
  double refl_step = 0.05;           // lattice reflection step, keep < 0.1
  double ladder_step = 0.05;         // joint-process (ladder) step
  double smoothing = 0.9;            // lattice energy smoothing in (0, 1)
  double power_floor = 1e-6;         // lower bound on adaptive denominators

  void validate() const;  // throws std::invalid_argument
};

// One sample through a filter: output y and error e = d - y.  The error is
// the canceller's system output (the recovered signal).
struct StepResult {
  double y;
  double e;
};

// Exponentially weighted recursive least squares over an N-tap transversal
// filter.  State: tap weights w, inverse correlation matrix P (started at
// I/delta and re-symmetrized every step), and the last N reference samples.
class RlsFilter {
 public:
  explicit RlsFilter(const FilterConfig& cfg);

  StepResult step(double x, double d);

  const FilterConfig& config() const { return cfg_; }
  std::span<const double> weights() const { return w_; }
  // Row-major N x N inverse-correlation estimate.
  std::span<const double> inverse_correlation() const { return p_; }
  std::span<const double> history() const { return x_hist_; }

 private:
  FilterConfig cfg_;
  std::vector<double> w_;
  std::vector<double> p_;
  std::vector<double> x_hist_;  // newest first
  std::vector<double> u_;       // P * x workspace
  std::vector<double> k_;       // gain workspace
};

// Fast transversal filter: forward/backward predictors, normalized gain and
// conversion factor updated in O(N) per sample; algebraically equivalent to
// RlsFilter with matching lambda/delta.  When the conversion factor or a
// least-squares sum leaves its valid range the predictor part is soft-reset
// (weights kept) and rescue_count() increments.
class FtfFilter {
 public:
  explicit FtfFilter(const FilterConfig& cfg);

  StepResult step(double x, double d);

  const FilterConfig& config() const { return cfg_; }
  std::span<const double> weights() const { return w_; }
  double gamma() const { return gamma_; }
  double forward_sum() const { return zeta_f_; }
  double backward_sum() const { return zeta_b_; }
  std::size_t rescue_count() const { return rescue_count_; }

 private:
  void reset_predictor();

  FilterConfig cfg_;
  std::vector<double> a_fwd_;   // forward predictor, length N+1, leading 1
  std::vector<double> g_bwd_;   // backward predictor, length N+1, trailing 1
  std::vector<double> w_;       // joint-process weights, length N
  std::vector<double> k_norm_;  // normalized gain, length N
  std::vector<double> k_ext_;   // order N+1 workspace
  std::vector<double> x_hist_;  // newest first, length N+1
  double gamma_ = 1.0;
  double zeta_f_ = 0.0;
  double zeta_b_ = 0.0;
  std::size_t rescue_count_ = 0;
};

// Gradient adaptive lattice: M reflection stages orthogonalize the input into
// backward errors; a normalized-gradient ladder regresses the desired signal
// on them.  Reflection coefficients are clamped to |k| <= 1 and all adaptive
// denominators are floored at power_floor.  order == 0 degenerates to a
// single normalized-gradient tap on the raw input.
class GalFilter {
 public:
  explicit GalFilter(const FilterConfig& cfg);

  StepResult step(double x, double d);

  const FilterConfig& config() const { return cfg_; }
  std::span<const double> reflection() const { return refl_; }
  std::span<const double> ladder() const { return ladder_; }
  std::span<const double> stage_power() const { return power_; }
  std::span<const double> backward_norms() const { return b_norm_; }

 private:
  FilterConfig cfg_;
  std::vector<double> refl_;    // k_m, m = 1..M
  std::vector<double> ladder_;  // h_m, m = 0..M
  std::vector<double> power_;   // smoothed stage energies, m = 1..M
  std::vector<double> b_prev_;  // delayed backward errors b_m(n-1), m = 0..M-1
  std::vector<double> b_norm_;  // cumulative backward-error norms, m = 0..M
};

// Drives a filter sample-by-sample over whole buffers; element n of the
// outputs equals the n-th step result.  State carries across calls.
template <typename Filter>
std::pair<SignalBuffer, SignalBuffer> process(Filter& filter,
                                              const SignalBuffer& x,
                                              const SignalBuffer& d) {
  if (x.size() != d.size()) {
    throw std::invalid_argument("process: x and d lengths differ");
  }
  SignalBuffer y, e;
  y.sample_rate_hz = x.sample_rate_hz;
  e.sample_rate_hz = x.sample_rate_hz;
  y.samples.resize(x.size());
  e.samples.resize(x.size());
  for (std::size_t n = 0; n < x.size(); ++n) {
    const StepResult r = filter.step(x[n], d[n]);
    y.samples[n] = r.y;
    e.samples[n] = r.e;
  }
  return {std::move(y), std::move(e)};
}

}  // namespace anc
