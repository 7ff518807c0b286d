#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "anc/kernels.hpp"
#include "anc/wav.hpp"
#include "report_json.hpp"

namespace anc {

namespace {

struct CommonOpts {
  std::string signal = "sinusoid";
  std::string noise = "white";
  std::string algo = "gal";
  std::size_t order = 16;
  double lambda = 0.995;
  double mu = 0.05;
  double mu_ladder = 0.05;
  double beta = 0.9;
  double snr_db = 10.0;
  std::size_t samples = 20000;
  std::uint64_t seed = 1;
  std::size_t channel_len = 4;
  std::size_t mse_window = 100;
  std::string out_dir = "out";
  bool traces = false;
  std::string audio;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_algo) {
  cmd->add_option("--signal", o.signal, "sinusoid|sawtooth|chirp|audio")
      ->check(CLI::IsMember({"sinusoid", "sawtooth", "chirp", "audio"}));
  cmd->add_option("--noise", o.noise, "white|pink|burst")
      ->check(CLI::IsMember({"white", "pink", "burst"}));
  if (with_algo) {
    cmd->add_option("--algo", o.algo, "rls|ftf|gal")
        ->check(CLI::IsMember({"rls", "ftf", "gal"}));
  }
  cmd->add_option("--order", o.order, "filter order / lattice stages");
  cmd->add_option("--lambda", o.lambda, "forgetting factor (0, 1]");
  cmd->add_option("--mu", o.mu, "lattice reflection step");
  cmd->add_option("--mu-ladder", o.mu_ladder, "lattice ladder step");
  cmd->add_option("--beta", o.beta, "lattice energy smoothing (0, 1)");
  cmd->add_option("--snr-db", o.snr_db, "input SNR in dB");
  cmd->add_option("--samples", o.samples, "samples per run");
  cmd->add_option("--seed", o.seed, "experiment seed");
  cmd->add_option("--channel-len", o.channel_len,
                  "taps in the randomly drawn noise channel");
  cmd->add_option("--mse-window", o.mse_window, "MSE averaging window");
  cmd->add_option("--out-dir", o.out_dir, "output directory");
  cmd->add_flag("--traces", o.traces, "write per-sample CSV traces");
  cmd->add_option("--audio", o.audio, "WAV file for signal=audio");
}

Algorithm parse_algo(const std::string& s) {
  if (s == "rls") return Algorithm::rls;
  if (s == "ftf") return Algorithm::ftf;
  return Algorithm::gal;
}

ExperimentSpec build_spec(const CommonOpts& o) {
  ExperimentSpec spec;
  if (o.signal == "sinusoid") {
    spec.signal.kind = SignalKind::sinusoid;
  } else if (o.signal == "sawtooth") {
    spec.signal.kind = SignalKind::sawtooth;
    spec.signal.freq_hz = 100.0;
  } else if (o.signal == "chirp") {
    spec.signal.kind = SignalKind::chirp;
  } else {
    spec.signal.kind = SignalKind::audio;
    spec.signal.audio_path = o.audio;
  }
  if (!o.audio.empty() && o.signal != "audio") {
    throw std::invalid_argument("--audio is only valid with --signal audio");
  }
  if (o.signal == "audio" && o.audio.empty()) {
    throw std::invalid_argument("--signal audio requires --audio <path>");
  }

  if (o.noise == "white") spec.noise.kind = NoiseKind::white;
  if (o.noise == "pink") spec.noise.kind = NoiseKind::pink;
  if (o.noise == "burst") spec.noise.kind = NoiseKind::burst;

  spec.algorithm = parse_algo(o.algo);
  spec.filter.order = o.order;
  spec.filter.forgetting_factor = o.lambda;
  spec.filter.refl_step = o.mu;
  spec.filter.ladder_step = o.mu_ladder;
  spec.filter.smoothing = o.beta;
  spec.input_snr_db = o.snr_db;
  spec.n_samples = o.samples;
  spec.seed = o.seed;
  spec.channel.random_len = o.channel_len;
  spec.mse_window = o.mse_window;
  spec.validate();
  return spec;
}

void report_line(const RunRecord& rec) {
  std::cout << algorithm_name(rec.spec.algorithm) << ' '
            << signal_kind_name(rec.spec.signal.kind)
            << " snr_in=" << rec.report.input_snr_db
            << "dB corr=" << rec.report.corr_coeff
            << " snr_out=" << rec.report.output_snr_db << "dB conv=";
  if (rec.report.convergence_samples) {
    std::cout << *rec.report.convergence_samples;
  } else {
    std::cout << "n/a";
  }
  std::cout << " wall=" << rec.report.filter_wall_seconds << "s\n";
}

std::filesystem::path prep_out_dir(const std::string& dir) {
  std::filesystem::path p(dir);
  std::filesystem::create_directories(p);
  return p;
}

int do_run(const CommonOpts& o) {
  ExperimentSpec spec = build_spec(o);
  RunRecord rec = run_experiment(spec, o.traces);
  report_line(rec);
  auto dir = prep_out_dir(o.out_dir);
  write_summary({rec}, (dir / "summary.json").string());
  if (o.traces) write_csv(rec, (dir / "trace.csv").string());
  return 0;
}

int do_compare(const CommonOpts& o) {
  ExperimentSpec spec = build_spec(o);
  auto recs = run_comparison(spec, o.traces);
  auto dir = prep_out_dir(o.out_dir);
  std::vector<RunRecord> list;
  for (auto& r : recs) {
    report_line(r);
    if (o.traces) {
      write_csv(r, (dir / ("trace_" +
                           std::string(algorithm_name(r.spec.algorithm)) +
                           ".csv"))
                       .string());
    }
    list.push_back(std::move(r));
  }
  write_summary(list, (dir / "summary.json").string());
  return 0;
}

int do_sweep(const CommonOpts& o, const std::string& param,
             const std::vector<double>& values) {
  SweepParam p;
  if (param == "order") {
    p = SweepParam::order;
  } else if (param == "lambda") {
    p = SweepParam::lambda;
  } else if (param == "mu") {
    p = SweepParam::mu;
  } else if (param == "snr") {
    p = SweepParam::snr;
  } else {
    throw std::invalid_argument("sweep parameter must be order|lambda|mu|snr");
  }
  ExperimentSpec spec = build_spec(o);
  auto recs = run_sweep(spec, p, values, o.traces);
  auto dir = prep_out_dir(o.out_dir);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    report_line(recs[i]);
    if (o.traces) {
      write_csv(recs[i], (dir / ("trace_" + std::to_string(i) + ".csv")).string());
    }
  }
  write_summary(recs, (dir / "summary.json").string());
  return 0;
}

// Tables 1 and 3-5: the four-signal, three-algorithm grid at fixed input SNR
// (Table 1 at the mid setting; 3/4/5 at high/mid/low).  Audio rows run only
// when a WAV is supplied and are marked skipped otherwise.
int do_tables(const CommonOpts& o) {
  struct TableDef {
    int number;
    double snr_db;
  };
  const TableDef defs[] = {{1, 10.0}, {3, 30.0}, {4, 10.0}, {5, -10.0}};
  const char* signals[] = {"sinusoid", "sawtooth", "chirp", "audio"};

  auto dir = prep_out_dir(o.out_dir);
  for (std::size_t t = 0; t < 4; ++t) {
    nlohmann::json doc;
    doc["table"] = defs[t].number;
    doc["input_snr_db"] = defs[t].snr_db;
    doc["records"] = nlohmann::json::array();

    // Rows are independent experiments; launch them concurrently and gather
    // in row order.
    std::vector<std::future<std::array<RunRecord, 3>>> futures(4);
    for (std::size_t row = 0; row < 4; ++row) {
      const std::string sig = signals[row];
      if (sig == "audio" && o.audio.empty()) continue;
      CommonOpts cell = o;
      cell.signal = sig;
      cell.snr_db = defs[t].snr_db;
      cell.seed = derive_seed(o.seed, t * 16 + row);
      futures[row] = std::async(std::launch::async, [cell] {
        return run_comparison(build_spec(cell), cell.traces);
      });
    }

    for (std::size_t row = 0; row < 4; ++row) {
      const std::string sig = signals[row];
      if (sig == "audio" && o.audio.empty()) {
        for (const char* algo : {"rls", "ftf", "gal"}) {
          doc["records"].push_back(
              {{"status", "skipped"},
               {"signal", {{"kind", "audio"}}},
               {"algorithm", algo},
               {"reason", "no --audio file supplied"}});
        }
        continue;
      }
      auto recs = futures[row].get();
      for (auto& rec : recs) {
        report_line(rec);
        doc["records"].push_back(detail::record_json(rec));
        if (o.traces) {
          const std::string name = "table" + std::to_string(defs[t].number) +
                                   "_" + sig + "_" +
                                   algorithm_name(rec.spec.algorithm) +
                                   "_trace.csv";
          write_csv(rec, (dir / name).string());
        }
      }
    }

    const std::string path =
        (dir / ("table" + std::to_string(defs[t].number) + "_summary.json"))
            .string();
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << doc.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
  }
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Adaptive noise cancellation benchmark"};
  app.require_subcommand(1);

  CommonOpts run_o, cmp_o, sweep_o, tab_o;
  std::string sweep_param;
  std::vector<double> sweep_values;

  CLI::App* run = app.add_subcommand("run", "run one experiment");
  add_common(run, run_o, true);
  CLI::App* cmp = app.add_subcommand("compare", "run rls/ftf/gal on shared inputs");
  add_common(cmp, cmp_o, false);
  CLI::App* sweep = app.add_subcommand("sweep", "vary one parameter");
  add_common(sweep, sweep_o, true);
  sweep->add_option("--param", sweep_param, "order|lambda|mu|snr")->required();
  sweep->add_option("--values", sweep_values, "values to sweep")->required();
  CLI::App* tables = app.add_subcommand("tables", "replicate the table grid");
  add_common(tables, tab_o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run->parsed()) return do_run(run_o);
    if (cmp->parsed()) return do_compare(cmp_o);
    if (sweep->parsed()) return do_sweep(sweep_o, sweep_param, sweep_values);
    if (tables->parsed()) return do_tables(tab_o);
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace anc
