#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include "report_json.hpp"

namespace anc {

namespace detail {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

nlohmann::json record_json(const RunRecord& rec) {
  nlohmann::json sig{{"kind", signal_kind_name(rec.spec.signal.kind)},
                     {"amplitude", rec.spec.signal.amplitude},
                     {"sample_rate_hz", rec.spec.signal.sample_rate_hz}};
  switch (rec.spec.signal.kind) {
    case SignalKind::sinusoid:
    case SignalKind::sawtooth:
      sig["freq_hz"] = rec.spec.signal.freq_hz;
      break;
    case SignalKind::chirp:
      sig["f0_hz"] = rec.spec.signal.chirp_f0_hz;
      sig["f1_hz"] = rec.spec.signal.chirp_f1_hz;
      break;
    case SignalKind::audio:
      sig["path"] = rec.spec.signal.audio_path;
      break;
  }

  nlohmann::json noise{{"seed", rec.spec.noise.seed}};
  switch (rec.spec.noise.kind) {
    case NoiseKind::white: noise["kind"] = "white"; break;
    case NoiseKind::pink: noise["kind"] = "pink"; break;
    case NoiseKind::burst:
      noise["kind"] = "burst";
      noise["on_prob"] = rec.spec.noise.burst_on_prob;
      noise["off_prob"] = rec.spec.noise.burst_off_prob;
      noise["gain"] = rec.spec.noise.burst_gain;
      break;
  }

  const FilterConfig& fc = rec.spec.filter;
  nlohmann::json filter{{"order", fc.order},
                        {"lambda", fc.forgetting_factor},
                        {"delta", fc.init_delta},
                        {"mu_refl", fc.refl_step},
                        {"mu_ladder", fc.ladder_step},
                        {"beta", fc.smoothing},
                        {"floor", fc.power_floor}};

  nlohmann::json j{{"status", "ok"},
                   {"signal", sig},
                   {"noise", noise},
                   {"channel_taps", rec.spec.channel.taps},
                   {"input_snr_db", rec.spec.input_snr_db},
                   {"noise_scale", rec.noise_scale},
                   {"algorithm", algorithm_name(rec.spec.algorithm)},
                   {"filter", filter},
                   {"n_samples", rec.spec.n_samples},
                   {"seed", rec.spec.seed},
                   {"mse_window", rec.spec.mse_window},
                   {"corr_coeff", rec.report.corr_coeff},
                   {"output_snr_db", rec.report.output_snr_db}};
  if (rec.report.convergence_samples) {
    j["convergence_samples"] = *rec.report.convergence_samples;
    j["convergence_seconds"] = *rec.report.convergence_seconds;
  } else {
    j["convergence_samples"] = nullptr;
    j["convergence_seconds"] = nullptr;
  }
  return j;
}

}  // namespace detail

void write_csv(const RunRecord& record, const std::string& path) {
  if (!record.traces) {
    throw std::invalid_argument("write_csv: record carries no traces");
  }
  const Traces& tr = *record.traces;
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path);

  out << "n,d,x,y,e,mse_windowed\n";
  const auto& curve = record.report.mse_curve;
  const std::size_t first_curve_n = curve.empty() ? tr.d.size() : curve.front().n;
  for (std::size_t n = 0; n < tr.d.size(); ++n) {
    out << n << ',' << detail::format_double(tr.d[n]) << ','
        << detail::format_double(tr.x[n]) << ','
        << detail::format_double(tr.y[n]) << ','
        << detail::format_double(tr.e[n]) << ',';
    if (n >= first_curve_n && n - first_curve_n < curve.size()) {
      out << detail::format_double(curve[n - first_curve_n].mse);
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write_csv: write failed: " + path);
}

void write_summary(const std::vector<RunRecord>& records,
                   const std::string& path) {
  nlohmann::json doc;
  doc["records"] = nlohmann::json::array();
  for (const auto& rec : records) doc["records"].push_back(detail::record_json(rec));
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("write_summary: cannot open " + path);
  out << doc.dump(2) << '\n';
  if (!out) throw std::runtime_error("write_summary: write failed: " + path);
}

}  // namespace anc
