#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "anc/filters.hpp"

namespace anc {

GalFilter::GalFilter(const FilterConfig& cfg) : cfg_(cfg) {
  // Validate by hand: a zero-stage lattice (bare normalized-gradient tap) is
  // legitimate here even though the shared config insists on order >= 1.
  FilterConfig probe = cfg_;
  probe.order = std::max<std::size_t>(probe.order, 1);
  probe.validate();
  const std::size_t m = cfg_.order;
  refl_.assign(m, 0.0);
  ladder_.assign(m + 1, 0.0);
  power_.assign(m, cfg_.power_floor);
  b_prev_.assign(m, 0.0);
  b_norm_.assign(m + 1, cfg_.power_floor);
}

StepResult GalFilter::step(double x, double d) {
  if (!std::isfinite(x) || !std::isfinite(d)) {
    throw std::invalid_argument("gal step: non-finite input");
  }
  const std::size_t m_final = cfg_.order;
  const double beta = cfg_.smoothing;
  const double mu_refl = cfg_.refl_step;
  const double mu_ladder = cfg_.ladder_step;
  const double floor = cfg_.power_floor;

  double f = x;       // f_{m-1}(n), starting at stage 0
  double b_cur = x;   // b_{m-1}(n)
  double y = 0.0;
  double e = d;
  double norm_acc = 0.0;

  // Ladder tap for stage m, fed the freshly computed backward error.
  auto ladder_tap = [&](std::size_t m, double b_m) {
    norm_acc += b_m * b_m;
    b_norm_[m] = norm_acc;
    const double denom = std::max(norm_acc, floor);
    y += ladder_[m] * b_m;
    e = d - y;
    ladder_[m] += (mu_ladder / denom) * b_m * e;
  };

  ladder_tap(0, b_cur);

  for (std::size_t m = 1; m <= m_final; ++m) {
    const double b_delayed = b_prev_[m - 1];  // b_{m-1}(n-1)
    b_prev_[m - 1] = b_cur;

    double eps = beta * power_[m - 1] +
                 (1.0 - beta) * (f * f + b_delayed * b_delayed);
    if (eps < floor) eps = floor;
    power_[m - 1] = eps;

    const double k = refl_[m - 1];  // k_m(n-1) filters the current sample
    const double f_m = f + k * b_delayed;
    const double b_m = b_delayed + k * f;

    double k_new = k - (mu_refl / eps) * (f * b_m + b_delayed * f_m);
    refl_[m - 1] = std::clamp(k_new, -1.0, 1.0);

    ladder_tap(m, b_m);
    f = f_m;
    b_cur = b_m;
  }

  return {y, e};
}

}  // namespace anc
