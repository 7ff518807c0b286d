#include <cmath>
#include <stdexcept>

#include "anc/filters.hpp"
#include "anc/kernels.hpp"

namespace anc {

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::rls: return "rls";
    case Algorithm::ftf: return "ftf";
    case Algorithm::gal: return "gal";
  }
  return "?";
}

void FilterConfig::validate() const {
  if (order == 0) throw std::invalid_argument("order must be positive");
  if (!(forgetting_factor > 0.0) || forgetting_factor > 1.0) {
    throw std::invalid_argument("forgetting factor must lie in (0, 1]");
  }
  if (!(init_delta > 0.0)) throw std::invalid_argument("init_delta must be positive");
  if (!(refl_step > 0.0)) throw std::invalid_argument("refl_step must be positive");
  if (!(ladder_step > 0.0)) throw std::invalid_argument("ladder_step must be positive");
  if (!(smoothing > 0.0) || !(smoothing < 1.0)) {
    throw std::invalid_argument("smoothing must lie in (0, 1)");
  }
  if (!(power_floor > 0.0)) throw std::invalid_argument("power_floor must be positive");
}

RlsFilter::RlsFilter(const FilterConfig& cfg) : cfg_(cfg) {
  cfg_.validate();
  const std::size_t n = cfg_.order;
  w_.assign(n, 0.0);
  x_hist_.assign(n, 0.0);
  u_.assign(n, 0.0);
  k_.assign(n, 0.0);
  p_.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) p_[i * n + i] = 1.0 / cfg_.init_delta;
}

StepResult RlsFilter::step(double x, double d) {
  if (!std::isfinite(x) || !std::isfinite(d)) {
    throw std::invalid_argument("rls step: non-finite input");
  }
  const std::size_t n = cfg_.order;
  const double lambda = cfg_.forgetting_factor;

  // Regressor x(n) = [x(n), x(n-1), ..., x(n-N+1)], newest first.
  for (std::size_t i = n; i-- > 1;) x_hist_[i] = x_hist_[i - 1];
  x_hist_[0] = x;

  // Gain: u = P x, k = u / (lambda + x'u).
  kern::matvec(p_.data(), x_hist_.data(), u_.data(), n, n);
  const double denom = lambda + kern::dot(x_hist_.data(), u_.data(), n);
  const double inv_denom = 1.0 / denom;
  for (std::size_t i = 0; i < n; ++i) k_[i] = u_[i] * inv_denom;

  // A priori filtering and error.
  const double y = kern::dot(w_.data(), x_hist_.data(), n);
  const double e = d - y;

  // Tap-weight adaptation and inverse-correlation update.
  kern::axpy(e, k_.data(), w_.data(), n);
  // x'P equals (P x)' because P is kept symmetric.
  kern::rank1_sub_scale(p_.data(), k_.data(), u_.data(), 1.0 / lambda, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const double avg = 0.5 * (p_[i * n + j] + p_[j * n + i]);
      p_[i * n + j] = avg;
      p_[j * n + i] = avg;
    }
  }
  return {y, e};
}

}  // namespace anc
