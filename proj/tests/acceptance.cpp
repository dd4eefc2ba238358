// Acceptance checks, one line per criterion:
//   acceptance [name ...]    (no names = all)
// Exit status 0 iff every selected criterion passes.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "xyq/cli.hpp"
#include "xyq/correlators.hpp"
#include "xyq/oracle.hpp"
#include "xyq/sweeps.hpp"

using namespace xyq;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string num(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

double slope_of(const std::vector<RevivalStudy>& s, Measure m) {
  for (const auto& x : s)
    if (x.measure == m) return x.fit.slope;
  return NAN;
}

std::vector<RevivalStudy> revival_run(double h0) {
  ModelParams p;
  p.gamma = 1.0;
  p.h0 = h0;
  p.h1 = 1.0;
  return revival_study(p, {100, 200, 300, 400, 500}, 0.05, RevivalConfig{}, 1);
}

Outcome revival_slope() {
  const auto start = std::chrono::steady_clock::now();
  const auto studies = revival_run(0.7);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = secs < 60.0;
  std::ostringstream d;
  for (const auto& s : studies) {
    const bool is_mrq = s.measure == Measure::kMrq;
    const double lo = is_mrq ? 0.243 : 0.245, hi = is_mrq ? 0.259 : 0.261;
    const bool good = s.fit.slope >= lo && s.fit.slope <= hi && s.fit.r_squared >= 0.999;
    ok = ok && good;
    d << to_string(s.measure) << " slope " << num(s.fit.slope) << " in [" << lo << ", " << hi
      << "] R2 " << num(s.fit.r_squared, 8) << "; ";
  }
  d << "runtime " << num(secs, 3) << " s (< 60)";
  return {ok, d.str()};
}

Outcome universality() {
  const auto below = revival_run(0.7), above = revival_run(1.3);
  bool ok = true;
  std::ostringstream d;
  for (Measure m : kAllMeasures) {
    const double a = slope_of(below, m), b = slope_of(above, m);
    const double rel = std::fabs(b - a) / std::fabs(a);
    ok = ok && rel <= 0.02;
    d << to_string(m) << " " << num(a) << " vs " << num(b) << " (" << num(100 * rel, 3)
      << "%); ";
  }
  d << "bound 2%";
  return {ok, d.str()};
}

std::vector<ColumnAverage> averaged_columns(double gamma, double h0) {
  SweepSpec spec;
  spec.base.gamma = gamma;
  spec.base.h0 = h0;
  spec.base.N = 100;
  spec.t = Grid1D::from_step(0, 30, 0.1);
  spec.h1 = Grid1D::from_step(0, 2, 0.05);
  return time_average(sweep_grid(spec, 0), spec.t.count);
}

double column(const ColumnAverage& c, Measure m) {
  return m == Measure::kCre ? c.c_re : m == Measure::kMrq ? c.mrq : c.c_l1;
}

Outcome critical_point() {
  bool ok = true;
  std::ostringstream d;
  for (double gamma : {1.0, 0.5}) {
    const auto below = averaged_columns(gamma, 0.7);
    const auto above = averaged_columns(gamma, 1.3);
    for (Measure m : {Measure::kCre, Measure::kMrq}) {
      std::size_t arg = 0;
      for (std::size_t i = 1; i < below.size(); ++i)
        if (column(below[i], m) > column(below[arg], m)) arg = i;
      const double peak = below[arg].h1;

      // Central differences on interior points.
      std::size_t steep = 1;
      double best = -1.0;
      for (std::size_t i = 1; i + 1 < above.size(); ++i) {
        const double slope = std::fabs(column(above[i + 1], m) - column(above[i - 1], m)) /
                             (above[i + 1].h1 - above[i - 1].h1);
        if (slope > best) {
          best = slope;
          steep = i;
        }
      }
      const double drop = above[steep].h1;
      const bool good = std::fabs(peak - 1.0) <= 0.1 + 1e-9 && std::fabs(drop - 1.0) <= 0.1 + 1e-9;
      ok = ok && good;
      d << "gamma " << gamma << " " << to_string(m) << ": argmax(0.7) " << num(peak, 4)
        << ", max slope(1.3) " << num(drop, 4) << "; ";
    }
  }
  d << "bound |h1 - 1| <= 0.1";
  return {ok, d.str()};
}

Outcome oracle_equivalence() {
  const cli::SuiteResult r = cli::suite_xstate_oracle(2024, 200);
  return {r.passed, r.detail};
}

Outcome ed_convergence() {
  const std::vector<int> sizes = {8, 10, 12};
  const char* names[4] = {"mz", "sxx", "syy", "szz"};
  // deviations[grid][size][correlator]
  std::array<std::vector<std::array<double, 4>>, 2> dev;
  const MomentumGrid grids[2] = {MomentumGrid::kAntiperiodic, MomentumGrid::kHalfZone};
  for (int n : sizes) {
    ModelParams p;
    p.N = n;
    const EDState ed = ed_build(p);
    for (int g = 0; g < 2; ++g) {
      ModelParams q = p;
      q.grid = grids[g];
      const QuenchEvaluator eval(q);
      std::array<double, 4> d{};
      for (int k = 0; k <= 10; ++k) {
        const double t = 0.5 * k;
        const XState x = ed_two_site_rdm(ed, t);
        const CorrelatorSet c = eval.correlators(t);
        const double diffs[4] = {c.mz - x.mz, c.sxx - x.txx, c.syy - x.tyy, c.szz - x.tzz};
        for (int j = 0; j < 4; ++j) d[j] = std::max(d[j], std::fabs(diffs[j]));
      }
      dev[g].push_back(d);
    }
  }
  auto verdict = [&](int g, std::ostringstream& d) {
    bool ok = true;
    for (std::size_t s = 0; s < sizes.size(); ++s) {
      d << " n=" << sizes[s] << ":";
      for (int j = 0; j < 4; ++j) {
        const double v = dev[g][s][j];
        d << " " << names[j] << " " << num(v, 3);
        if (!(v <= 4.0 / sizes[s])) ok = false;
        if (s > 0 && !(v < dev[g][s - 1][j])) ok = false;
      }
    }
    return ok;
  };
  std::ostringstream d;
  d << "antiperiodic (used):";
  const bool ok = verdict(0, d);
  d << " | half-zone (reference):";
  const bool ok_half = verdict(1, d);
  d << " | needs <= 4/n and strictly decreasing; half-zone would "
    << (ok_half ? "pass" : "fail");
  return {ok, d.str()};
}

Outcome stationarity_limits() {
  bool ok = true;
  std::ostringstream d;

  ModelParams still;
  still.h0 = still.h1 = 0.7;
  const QuenchEvaluator eval(still);
  const MeasureRecord r0 = evaluate_measures(eval.correlators(0), still.h1);
  const CorrelatorSet c0 = eval.correlators(0);
  double drift = 0.0;
  for (int k = 1; k <= 500; ++k) {
    const CorrelatorSet c = eval.correlators(0.1 * k);
    const MeasureRecord r = evaluate_measures(c, still.h1);
    for (double v : {c.mz - c0.mz, c.sxx - c0.sxx, c.syy - c0.syy, c.szz - c0.szz,
                     r.c_l1 - r0.c_l1, r.c_re - r0.c_re, r.mrq - r0.mrq})
      drift = std::max(drift, std::fabs(v));
  }
  const cli::SuiteResult random = cli::suite_stationarity(2024, 20, MomentumGrid::kAntiperiodic);
  drift = std::max(drift, random.worst);
  ok = ok && drift <= 1e-12;
  d << "h0 = h1 drift over [0, 50] " << num(drift, 3) << " (<= 1e-12); ";

  ModelParams polar;
  polar.h0 = polar.h1 = 20.0;
  const CorrelatorSet c = correlators_nn(polar, 0);
  const MeasureRecord m = evaluate_measures(c, polar.h1);
  auto check = [&](const char* label, double got, double want, double tol) {
    const bool good = std::fabs(got - want) <= tol;
    ok = ok && good;
    d << label << " " << num(got, 7) << (good ? " ok" : " OUT") << " (" << want << " +- " << tol
      << "); ";
  };
  check("mz", c.mz, 1.0, 1e-3);
  check("mrq", m.mrq, 4.0, 1e-2);
  check("c_l1", m.c_l1, 2.0, 1e-2);
  check("c_re", m.c_re, 2.0, 1e-2);
  d << "h = 20, gamma = 1, N = 100";
  return {ok, d.str()};
}

Outcome determinism() {
  bool ok = true;
  std::ostringstream d;
  for (const char* format : {"csv", "json"}) {
    std::string first;
    for (const char* threads : {"1", "4", "8"}) {
      const char* argv[] = {"xyquench", "sweep",    "--gamma",  "1",       "--h0",
                            "0.7",      "--n",      "100",      "--h1-range", "0:2:41",
                            "--t-range", "0:30:0.1", "--threads", threads, "--format",
                            format};
      std::ostringstream out, err;
      const int code = cli::run(static_cast<int>(std::size(argv)), argv, out, err);
      if (code != 0) {
        ok = false;
        d << format << " threads " << threads << " exit " << code << "; ";
        continue;
      }
      if (first.empty())
        first = out.str();
      else if (out.str() != first)
        ok = false;
    }
    d << format << " " << first.size() << " bytes; ";
  }
  d << "workers {1, 4, 8} " << (ok ? "byte-identical" : "DIFFER");
  return {ok, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"revival-slope", revival_slope},
      {"universality", universality},
      {"critical-point", critical_point},
      {"oracle-equivalence", oracle_equivalence},
      {"ed-convergence", ed_convergence},
      {"stationarity-limits", stationarity_limits},
      {"determinism", determinism},
  };
  std::vector<std::string> wanted(argv + 1, argv + argc);
  for (const auto& w : wanted) {
    bool known = false;
    for (const auto& [name, fn] : criteria) known = known || name == w;
    if (!known) {
      std::cerr << "unknown criterion '" << w << "'\n";
      return 2;
    }
  }

  bool all = true;
  for (const auto& [name, fn] : criteria) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), name) == wanted.end()) continue;
    Outcome o{false, ""};
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
