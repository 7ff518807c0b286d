#include "anc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "anc/kernels.hpp"

namespace anc {

std::vector<MsePoint> mse_curve(const SignalBuffer& e, std::size_t window) {
  if (window == 0) throw std::invalid_argument("mse_curve: window must be positive");
  if (window > e.size()) {
    throw std::invalid_argument("mse_curve: window larger than buffer");
  }
  std::vector<MsePoint> curve;
  curve.reserve(e.size() - window + 1);
  const double inv_w = 1.0 / static_cast<double>(window);
  for (std::size_t n = window - 1; n < e.size(); ++n) {
    const double ss = kern::sum_sq(e.data() + n + 1 - window, window);
    curve.push_back({n, ss * inv_w});
  }
  return curve;
}

namespace {

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace

std::optional<std::size_t> convergence_time(const std::vector<MsePoint>& curve,
                                            double settle_ratio) {
  if (curve.empty()) throw std::invalid_argument("convergence_time: empty curve");
  if (settle_ratio <= 1.0) {
    throw std::invalid_argument("convergence_time: settle_ratio must exceed 1");
  }
  const std::size_t tail_len =
      std::max<std::size_t>(1, (curve.size() + 9) / 10);  // final 10%
  std::vector<double> tail;
  tail.reserve(tail_len);
  double global_min = curve.front().mse;
  for (const auto& p : curve) global_min = std::min(global_min, p.mse);
  for (std::size_t i = curve.size() - tail_len; i < curve.size(); ++i) {
    tail.push_back(curve[i].mse);
  }
  const double floor = median_of(std::move(tail));
  if (floor > 4.0 * global_min) return std::nullopt;  // still rising at the end

  const double threshold = settle_ratio * floor;
  // Earliest entry from which the curve never exceeds the threshold again.
  std::size_t first_ok = 0;
  for (std::size_t i = curve.size(); i-- > 0;) {
    if (curve[i].mse > threshold) {
      first_ok = i + 1;
      break;
    }
  }
  if (first_ok >= curve.size()) return std::nullopt;
  return curve[first_ok].n;
}

double correlation_coefficient(const SignalBuffer& a, const SignalBuffer& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("correlation: length mismatch");
  }
  if (a.size() < 2) throw std::invalid_argument("correlation: need >= 2 samples");
  const std::size_t n = a.size();
  const double inv_n = 1.0 / static_cast<double>(n);
  const double ma = kern::sum(a.data(), n) * inv_n;
  const double mb = kern::sum(b.data(), n) * inv_n;
  std::vector<double> ca(n), cb(n);
  for (std::size_t i = 0; i < n; ++i) {
    ca[i] = a[i] - ma;
    cb[i] = b[i] - mb;
  }
  const double va = kern::sum_sq(ca.data(), n);
  const double vb = kern::sum_sq(cb.data(), n);
  if (va <= 0.0 || vb <= 0.0) {
    throw std::invalid_argument("correlation: zero-variance input");
  }
  return kern::dot(ca.data(), cb.data(), n) / std::sqrt(va * vb);
}

double output_snr(const SignalBuffer& s, const SignalBuffer& e) {
  if (s.size() != e.size()) throw std::invalid_argument("output_snr: length mismatch");
  if (s.size() == 0) throw std::invalid_argument("output_snr: empty buffers");
  // Post-convergence window: the last half of the run.
  const std::size_t start = s.size() / 2;
  const std::size_t len = s.size() - start;
  std::vector<double> residual(len);
  for (std::size_t i = 0; i < len; ++i) {
    residual[i] = e[start + i] - s[start + i];
  }
  const double p_sig = kern::sum_sq(s.data() + start, len) / static_cast<double>(len);
  const double p_res = kern::sum_sq(residual.data(), len) / static_cast<double>(len);
  if (p_sig <= 0.0) throw std::invalid_argument("output_snr: zero-power signal");
  if (p_res <= 0.0) return kOutputSnrCapDb;
  return std::min(10.0 * std::log10(p_sig / p_res), kOutputSnrCapDb);
}

}  // namespace anc
