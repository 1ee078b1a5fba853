#include "beepid/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>

#include "CLI11.hpp"

#include "beepid/analysis.hpp"
#include "beepid/config.hpp"
#include "beepid/montecarlo.hpp"
#include "beepid/report.hpp"

namespace beepid {
namespace {

/// Options shared by the simulation subcommands.
struct RunOptions {
  std::string config_path;
  std::vector<std::string> overrides;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> filter_len;
  std::string out_path;
  std::string dump_config_path;
  std::string gnuplot_path;
  int threads = 0;
};

struct AnalyzeOptions {
  std::uint64_t n = 0;
  std::optional<double> p;
  std::optional<std::uint64_t> period_slots;
  std::optional<double> target;
};

void add_run_options(CLI::App* cmd, RunOptions& opts, bool with_filter_len) {
  cmd->add_option("--config", opts.config_path, "Flat JSON experiment config")->required();
  cmd->add_option("--set", opts.overrides, "Override a config key: key=value (grids as a,b,c)")
      ->take_all();
  cmd->add_option("--seed", opts.seed, "Master seed (overrides master_seed)");
  cmd->add_option("--threads", opts.threads, "Worker threads for the sweep (0 = default)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--out", opts.out_path, "CSV output path (default: stdout)");
  cmd->add_option("--dump-config", opts.dump_config_path, "Write the effective config as JSON");
  cmd->add_option("--emit-gnuplot", opts.gnuplot_path, "Write a companion gnuplot script");
  if (with_filter_len) {
    cmd->add_option("--filter-len", opts.filter_len, "Filter length m (overrides filter_len)");
  }
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

SimConfig effective_config(const RunOptions& opts) {
  SimConfig cfg = load_config(opts.config_path);
  for (const std::string& assignment : opts.overrides) apply_override(cfg, assignment);
  if (opts.seed) cfg.master_seed = *opts.seed;
  if (opts.filter_len) cfg.filter_len = *opts.filter_len;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
  return cfg;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  return file;
}

template <class Writer>
void emit(const std::string& path, std::ostream& fallback, Writer&& writer) {
  if (path.empty()) {
    writer(fallback);
    return;
  }
  std::ofstream file = open_output(path);
  writer(file);
  if (!file) throw std::runtime_error("failed while writing '" + path + "'");
}

void emit_side_files(const RunOptions& opts, const SimConfig& cfg, const std::string& column) {
  if (!opts.dump_config_path.empty()) {
    emit(opts.dump_config_path, std::cout,
         [&](std::ostream& os) { os << config_to_json(cfg).dump(2) << '\n'; });
  }
  if (!opts.gnuplot_path.empty()) {
    const std::string csv = opts.out_path.empty() ? "results.csv" : opts.out_path;
    emit(opts.gnuplot_path, std::cout, [&](std::ostream& os) {
      write_gnuplot_script(os, csv, column, cfg.period_ms);
    });
  }
}

void run_analyze(const AnalyzeOptions& opts, std::ostream& out) {
  const std::uint64_t n = opts.n;
  const double target = opts.target.value_or(analysis::default_target(n));
  out << "n: " << n << '\n';
  if (opts.p && opts.period_slots) {
    out << "false_id_prob: " << format_real(analysis::false_id_prob(n, *opts.p, *opts.period_slots))
        << '\n';
  }
  out << "optimal_p: " << format_real(analysis::optimal_p(n)) << '\n';
  out << "target: " << format_real(target) << '\n';
  out << "optimal_T: " << format_real(analysis::optimal_T(n, target)) << '\n';
  out << "optimal_T_exact: " << format_real(analysis::optimal_T_exact(n, target)) << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Beep-pattern device identification: analysis and channel simulation", "beepid"};
  app.require_subcommand(1);

  AnalyzeOptions analyze_opts;
  CLI::App* analyze = app.add_subcommand("analyze", "Closed-form false-identification analysis");
  analyze->add_option("--n", analyze_opts.n, "Number of transmitting stations")->required();
  analyze->add_option("--p", analyze_opts.p, "Beep probability");
  analyze->add_option("--T", analyze_opts.period_slots, "Period length in slots");
  analyze->add_option("--target", analyze_opts.target, "False-identification target (default 1/n)");

  RunOptions simulate_opts;
  CLI::App* simulate =
      app.add_subcommand("simulate", "Run the configured grid with the serial reference harness");
  add_run_options(simulate, simulate_opts, false);

  RunOptions sweep_opts;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Run the configured grid in parallel");
  add_run_options(sweep_cmd, sweep_opts, false);

  RunOptions compare_opts;
  CLI::App* compare =
      app.add_subcommand("compare-filter", "TP gain and TN loss from OR-filtering");
  add_run_options(compare, compare_opts, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "beepid: " << e.what() << '\n';
    return kExitConfigError;
  }

  try {
    if (analyze->parsed()) {
      if (analyze_opts.p.has_value() != analyze_opts.period_slots.has_value()) {
        throw std::invalid_argument("--p and --T must be given together");
      }
      try {
        run_analyze(analyze_opts, out);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    } else if (simulate->parsed() || sweep_cmd->parsed()) {
      const RunOptions& opts = simulate->parsed() ? simulate_opts : sweep_opts;
      const SimConfig cfg = effective_config(opts);
      const std::vector<MetricsRecord> records =
          simulate->parsed() && opts.threads == 0 ? sweep_serial(cfg) : sweep(cfg, opts.threads);
      emit(opts.out_path, out, [&](std::ostream& os) { write_metrics_csv(os, records); });
      emit_side_files(opts, cfg, "tn_rate");
    } else if (compare->parsed()) {
      SimConfig cfg = effective_config(compare_opts);
      if (cfg.filter_len == 0) {
        throw ConfigError("compare-filter needs filter_len >= 1 (use --filter-len)");
      }
      const std::vector<FilterComparison> rows = compare_filtering(cfg, compare_opts.threads);
      emit(compare_opts.out_path, out,
           [&](std::ostream& os) { write_comparison_csv(os, rows); });
      emit_side_files(compare_opts, cfg, "net");
    }
  } catch (const ConfigError& e) {
    err << "beepid: config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    err << "beepid: invalid argument: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "beepid: runtime error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
  return kExitOk;
}

}  // namespace beepid
