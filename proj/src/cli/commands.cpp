#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "xyq/cli.hpp"
#include "xyq/oracle.hpp"

#ifndef XYQ_VERSION
#define XYQ_VERSION "dev"
#endif

namespace xyq::cli {

namespace {

struct ModelOptions {
  ModelParams params;
  std::string grid = "antiperiodic";
  int threads = -1;
};

struct OutputOptions {
  std::string path = "-";
  std::string format = "csv";
};

void add_model_options(CLI::App* sub, ModelOptions& m, bool with_h1) {
  sub->add_option("--J", m.params.J, "Exchange coupling")->capture_default_str();
  sub->add_option("--gamma", m.params.gamma, "Anisotropy")->capture_default_str();
  sub->add_option("-n,--n", m.params.N, "Number of sites (even, >= 4)")->capture_default_str();
  sub->add_option("--h0", m.params.h0, "Pre-quench field")->capture_default_str();
  if (with_h1) sub->add_option("--h1", m.params.h1, "Post-quench field")->capture_default_str();
  sub->add_option("--grid", m.grid, "Momentum grid")
      ->check(CLI::IsMember({"antiperiodic", "half-zone"}))
      ->capture_default_str();
  sub->add_option("--threads", m.threads, "Worker threads (default $XYQ_THREADS or all cores)");
}

void add_output_options(CLI::App* sub, OutputOptions& o, const std::string& default_path) {
  o.path = default_path;
  sub->add_option("-o,--output", o.path, "Output file, - for stdout")->capture_default_str();
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

int resolve(ModelOptions& m) {
  m.params.grid = parse_momentum_grid(m.grid);
  return m.threads >= 0 ? m.threads : default_threads();
}

Metadata model_metadata(const std::string& command, const ModelParams& p, bool with_h1) {
  Metadata meta{{"version", XYQ_VERSION},
                {"command", command},
                {"J", format_number(p.J)},
                {"gamma", format_number(p.gamma)}};
  if (command != "revival") meta.emplace_back("N", std::to_string(p.N));
  meta.emplace_back("h0", format_number(p.h0));
  if (with_h1) meta.emplace_back("h1", format_number(p.h1));
  meta.emplace_back("grid", to_string(p.grid));
  return meta;
}

// Opens `path` for writing ("-" = out). Throws InvalidParams if it cannot.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out) : path_(path) {
    if (path == "-") {
      os_ = &out;
    } else {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw InvalidParams("cannot open output file '" + path + "' for writing");
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }
  void finish() {
    os_->flush();
    if (!*os_) throw std::runtime_error("failed writing output '" + path_ + "'");
  }

 private:
  std::string path_;
  std::ofstream file_;
  std::ostream* os_ = nullptr;
};

int cmd_sweep(ModelOptions& m, OutputOptions& o, const std::string& t_range,
              const std::string& h1_range, std::ostream& out) {
  const int threads = resolve(m);
  SweepSpec spec;
  spec.base = m.params;
  spec.t = parse_range(t_range);
  spec.h1 = parse_range(h1_range);
  spec.validate();

  Metadata meta = model_metadata("sweep", spec.base, false);
  meta.emplace_back("h1_range", format_range(spec.h1));
  meta.emplace_back("t_range", format_range(spec.t));
  meta.emplace_back("records", std::to_string(static_cast<long long>(spec.h1.count) * spec.t.count));
  meta.emplace_back("order", "h1 outer, t inner");

  Sink sink(o.path, out);  // fail on an unwritable path before computing
  const auto records = sweep_grid(spec, threads);
  if (o.format == "json")
    write_sweep_json(sink.stream(), meta, records);
  else
    write_sweep_csv(sink.stream(), meta, records);
  sink.finish();
  return kExitOk;
}

int cmd_revival(ModelOptions& m, OutputOptions& o, const std::string& sizes_text, double dt,
                const RevivalConfig& cfg, std::ostream& out) {
  const int threads = resolve(m);
  const std::vector<int> sizes = parse_sizes(sizes_text);
  if (sizes.size() < 3) throw InvalidParams("revival fit needs >= 3 sizes (got " +
                                            std::to_string(sizes.size()) + ")");

  Metadata meta = model_metadata("revival", m.params, true);
  meta.emplace_back("sizes", sizes_text);
  meta.emplace_back("dt", format_number(dt));
  meta.emplace_back("calib_window", format_number(cfg.calib_begin) + "N:" +
                                        format_number(cfg.calib_end) + "N");
  meta.emplace_back("search_window", format_number(cfg.calib_end) + "N:" +
                                         format_number(cfg.search_end) + "N");

  Sink sink(o.path, out);
  const auto studies = revival_study(m.params, sizes, dt, cfg, threads);
  if (o.format == "json")
    write_revival_json(sink.stream(), meta, studies);
  else
    write_revival_csv(sink.stream(), meta, studies);
  sink.finish();

  if (o.path != "-") {
    out << std::left << std::setw(8) << "measure" << std::setw(16) << "slope" << std::setw(16)
        << "intercept" << "r_squared\n";
    for (const auto& s : studies)
      out << std::setw(8) << to_string(s.measure) << std::setw(16) << format_number(s.fit.slope)
          << std::setw(16) << format_number(s.fit.intercept) << format_number(s.fit.r_squared)
          << '\n';
  }
  return kExitOk;
}

struct ValidateOptions {
  std::uint64_t seed = 2024;
  int states = 200;
  int draws = 20;
  std::string ed_sizes = "8,10,12";
  std::vector<std::string> suites{"xstate", "ed", "stationarity", "limits"};
};

int cmd_validate(ModelOptions& m, const ValidateOptions& v, std::ostream& out) {
  resolve(m);
  std::vector<SuiteResult> results;
  for (const auto& s : v.suites) {
    if (s == "xstate")
      results.push_back(suite_xstate_oracle(v.seed, v.states));
    else if (s == "ed")
      results.push_back(suite_ed_convergence(m.params, parse_sizes(v.ed_sizes)));
    else if (s == "stationarity")
      results.push_back(suite_stationarity(v.seed, v.draws, m.params.grid));
    else if (s == "limits")
      results.push_back(suite_limits(m.params.grid));
  }
  bool ok = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << "  worst " << format_number(r.worst)
        << "  tol " << format_number(r.tolerance) << "\n  " << r.detail << '\n';
    ok = ok && r.passed;
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact post-quench dynamics of the transverse-field XY chain", "xyquench"};
  app.set_version_flag("--version", XYQ_VERSION);
  app.set_config("--config", "", "key = value file, one [section] per subcommand");
  app.require_subcommand(1, 1);
  app.allow_config_extras(CLI::config_extras_mode::error);

  ModelOptions sweep_model, revival_model, validate_model;
  OutputOptions sweep_out, revival_out;

  auto* sweep = app.add_subcommand("sweep", "(t, h1) grid of c_l1, c_re and mrq");
  add_model_options(sweep, sweep_model, false);
  add_output_options(sweep, sweep_out, "-");
  std::string t_range = "0:30:0.1", h1_range = "0:2:41";
  sweep->add_option("--t-range", t_range, "min:max:count-or-step")->capture_default_str();
  sweep->add_option("--h1-range", h1_range, "min:max:count-or-step")->capture_default_str();

  auto* revival = app.add_subcommand("revival", "First-revival times and t_r = tau N fit");
  add_model_options(revival, revival_model, true);
  add_output_options(revival, revival_out, "revival.csv");
  std::string sizes = "100,200,300,400,500";
  double dt = 0.05;
  RevivalConfig cfg;
  revival->add_option("--sizes", sizes, "Comma-separated chain sizes")->capture_default_str();
  revival->add_option("--dt", dt, "Time step of the series")->capture_default_str();
  revival->add_option("--calib-begin", cfg.calib_begin, "Calibration window start / N")
      ->capture_default_str();
  revival->add_option("--calib-end", cfg.calib_end, "Calibration window end / N")
      ->capture_default_str();
  revival->add_option("--search-end", cfg.search_end, "Search window end / N")
      ->capture_default_str();

  auto* validate = app.add_subcommand("validate", "Oracle and consistency suites");
  add_model_options(validate, validate_model, true);
  ValidateOptions vopt;
  validate->add_option("--seed", vopt.seed, "Random-state seed")->capture_default_str();
  validate->add_option("--states", vopt.states, "Random X-states")->capture_default_str();
  validate->add_option("--draws", vopt.draws, "Stationarity draws")->capture_default_str();
  validate->add_option("--ed-sizes", vopt.ed_sizes, "ED chain sizes")->capture_default_str();
  validate->add_option("--suites", vopt.suites, "Suites to run")
      ->check(CLI::IsMember({"xstate", "ed", "stationarity", "limits"}))
      ->delimiter(',')
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sweep) return cmd_sweep(sweep_model, sweep_out, t_range, h1_range, out);
    if (*revival) return cmd_revival(revival_model, revival_out, sizes, dt, cfg, out);
    return cmd_validate(validate_model, vopt, out);
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NoRevivalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace xyq::cli
