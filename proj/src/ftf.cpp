#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "anc/filters.hpp"
#include "anc/kernels.hpp"

namespace anc {

namespace {
// Tiny overshoot of the conversion factor above 1 is rounding, not
// divergence; anything beyond this margin triggers a rescue.
constexpr double kGammaSlack = 1e-9;
}  // namespace

FtfFilter::FtfFilter(const FilterConfig& cfg) : cfg_(cfg) {
  cfg_.validate();
  const std::size_t n = cfg_.order;
  w_.assign(n, 0.0);
  k_norm_.assign(n, 0.0);
  k_ext_.assign(n + 1, 0.0);
  x_hist_.assign(n + 1, 0.0);
  a_fwd_.assign(n + 1, 0.0);
  g_bwd_.assign(n + 1, 0.0);
  reset_predictor();
}

void FtfFilter::reset_predictor() {
  std::fill(a_fwd_.begin(), a_fwd_.end(), 0.0);
  std::fill(g_bwd_.begin(), g_bwd_.end(), 0.0);
  std::fill(k_norm_.begin(), k_norm_.end(), 0.0);
  a_fwd_.front() = 1.0;
  g_bwd_.back() = 1.0;
  gamma_ = 1.0;
  zeta_f_ = cfg_.init_delta;
  zeta_b_ = cfg_.init_delta;
}

StepResult FtfFilter::step(double x, double d) {
  if (!std::isfinite(x) || !std::isfinite(d)) {
    throw std::invalid_argument("ftf step: non-finite input");
  }
  const std::size_t n = cfg_.order;
  const double lambda = cfg_.forgetting_factor;

  // Extended regressor x_{N+1}(n) = [x(n), ..., x(n-N)], newest first; the
  // order-N regressor is its leading N entries.
  for (std::size_t i = n + 1; i-- > 1;) x_hist_[i] = x_hist_[i - 1];
  x_hist_[0] = x;

  // A priori filtering against the previous weights.
  const double y = kern::dot(w_.data(), x_hist_.data(), n);
  const double e = d - y;

  // Forward prediction.
  const double f_pri = kern::dot(a_fwd_.data(), x_hist_.data(), n + 1);
  const double f_post = gamma_ * f_pri;

  // Extended normalized gain from the forward residual decomposition.
  k_ext_[0] = 0.0;
  std::copy(k_norm_.begin(), k_norm_.end(), k_ext_.begin() + 1);
  kern::axpy(f_pri / (lambda * zeta_f_), a_fwd_.data(), k_ext_.data(), n + 1);

  const double zeta_f_new = lambda * zeta_f_ + f_pri * f_post;
  const double gamma_ext = gamma_ * (lambda * zeta_f_) / zeta_f_new;

  // Forward predictor update uses the pre-step gain.
  kern::axpy(-f_post, k_norm_.data(), a_fwd_.data() + 1, n);

  // Backward prediction via the last extended-gain element.
  const double k_last = k_ext_[n];
  const double b_pri = lambda * zeta_b_ * k_last;
  const double beta = 1.0 - b_pri * gamma_ext * k_last;
  const double gamma_new = gamma_ext / beta;
  const double b_post = gamma_new * b_pri;
  const double zeta_b_new = lambda * zeta_b_ + b_pri * b_post;

  // Deflate the gain to order N and update the backward predictor.
  for (std::size_t i = 0; i < n; ++i) k_norm_[i] = k_ext_[i] - k_last * g_bwd_[i];
  kern::axpy(-b_post, k_norm_.data(), g_bwd_.data(), n);

  bool sane = beta > 0.0 && gamma_new > 0.0 && gamma_new <= 1.0 + kGammaSlack &&
              zeta_f_new > 0.0 && zeta_b_new > 0.0 && std::isfinite(gamma_new) &&
              std::isfinite(zeta_b_new);
  for (std::size_t i = 0; sane && i < n; ++i) sane = std::isfinite(k_norm_[i]);
  if (!sane) {
    // Soft restart: predictor state back to its initial form, weights kept,
    // joint-process update skipped for this sample.
    reset_predictor();
    ++rescue_count_;
    return {y, e};
  }

  zeta_f_ = zeta_f_new;
  zeta_b_ = zeta_b_new;
  gamma_ = std::min(gamma_new, 1.0);

  // Joint-process estimation.
  kern::axpy(gamma_ * e, k_norm_.data(), w_.data(), n);
  return {y, e};
}

}  // namespace anc
