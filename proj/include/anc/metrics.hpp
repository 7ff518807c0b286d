#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "anc/signal.hpp"

namespace anc {

inline constexpr double kOutputSnrCapDb = 120.0;

struct MsePoint {
  std::size_t n;  // sample index the window ends at
  double mse;     // mean of e^2 over [n - window + 1, n]
};

// Sliding mean-square of the error, one point per n >= window - 1.
std::vector<MsePoint> mse_curve(const SignalBuffer& e, std::size_t window);

// First sample index after which every curve value stays within
// settle_ratio times the steady-state floor (median of the final 10%).
// nullopt when the rule is never met or the tail sits above 4x the global
// minimum (the curve is still rising).
std::optional<std::size_t> convergence_time(const std::vector<MsePoint>& curve,
                                            double settle_ratio = 2.0);

// Pearson correlation, population convention.
double correlation_coefficient(const SignalBuffer& a, const SignalBuffer& b);

// Residual-based output SNR in dB: 10*log10(P_s / P_{e-s}) over the last
// half of the buffers, capped at +120 dB when the residual underflows.
double output_snr(const SignalBuffer& s, const SignalBuffer& e);

struct MetricsReport {
  std::vector<MsePoint> mse_curve;
  std::optional<std::size_t> convergence_samples;
  // Signal time to convergence (convergence_samples / sample rate); part of
  // the deterministic record.
  std::optional<double> convergence_seconds;
  // Wall-clock cost of the filtering loop, informational only; never
  // persisted, so summaries stay byte-reproducible.
  double filter_wall_seconds = 0.0;
  double corr_coeff = 0.0;
  double output_snr_db = 0.0;
  double input_snr_db = 0.0;
};

}  // namespace anc
