#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "xyq/cli.hpp"
#include "xyq/correlators.hpp"
#include "xyq/oracle.hpp"

namespace xyq::cli {

namespace {

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

}  // namespace

SuiteResult suite_xstate_oracle(std::uint64_t seed, int count) {
  SuiteResult r{"xstate-oracle", false, 0.0, 1e-10, ""};
  std::mt19937_64 rng(seed);
  double d_l1 = 0.0, d_re = 0.0, d_mrq = 0.0;
  for (int i = 0; i < count; ++i) {
    const XState x = random_physical_xstate(rng);
    const Eigen::Matrix4cd rho = x.density_matrix();
    const SteeredCoherence ens = sqc_ensemble(rho);
    d_l1 = std::max(d_l1, std::fabs(c_l1(x) - ens.l1));
    d_re = std::max(d_re, std::fabs(c_re(x) - ens.re));
    d_mrq = std::max(d_mrq, std::fabs(mrq(x) - mrq_pauli(rho)));
  }
  r.worst = std::max({d_l1, d_re, d_mrq});
  r.passed = count > 0 && d_l1 <= 1e-10 && d_re <= 1e-10 && d_mrq <= 1e-12;
  r.detail = std::to_string(count) + " states, seed " + std::to_string(seed) + ": c_l1 " +
             sci(d_l1) + ", c_re " + sci(d_re) + " (tol 1e-10), mrq " + sci(d_mrq) +
             " (tol 1e-12)";
  return r;
}

SuiteResult suite_ed_convergence(const ModelParams& base, const std::vector<int>& sizes,
                                 double t_max, double dt) {
  SuiteResult r{"ed-convergence", true, 0.0, 0.0, ""};
  const char* names[4] = {"mz", "sxx", "syy", "szz"};
  std::vector<std::array<double, 4>> devs;
  std::ostringstream detail;
  const int steps = static_cast<int>(std::llround(t_max / dt));
  for (int n : sizes) {
    ModelParams p = base;
    p.N = n;
    const EDState ed = ed_build(p);
    const QuenchEvaluator eval(p);
    std::array<double, 4> d{};
    for (int k = 0; k <= steps; ++k) {
      const double t = k * dt;
      const XState x = ed_two_site_rdm(ed, t);
      const CorrelatorSet c = eval.correlators(t);
      d[0] = std::max(d[0], std::fabs(c.mz - x.mz));
      d[1] = std::max(d[1], std::fabs(c.sxx - x.txx));
      d[2] = std::max(d[2], std::fabs(c.syy - x.tyy));
      d[3] = std::max(d[3], std::fabs(c.szz - x.tzz));
    }
    const double tol = 4.0 / n;
    detail << (devs.empty() ? "" : "; ") << "n=" << n << " (tol " << sci(tol) << "):";
    for (int j = 0; j < 4; ++j) {
      detail << ' ' << names[j] << ' ' << sci(d[j]);
      r.worst = std::max(r.worst, d[j]);
      if (!(d[j] <= tol)) r.passed = false;
      if (!devs.empty() && !(d[j] < devs.back()[j])) r.passed = false;
    }
    r.tolerance = std::max(r.tolerance, tol);
    devs.push_back(d);
  }
  if (sizes.empty()) r.passed = false;
  r.detail = "grid " + to_string(base.grid) + "; " + detail.str() +
             "; requires each <= 4/n and strictly decreasing in n";
  return r;
}

SuiteResult suite_stationarity(std::uint64_t seed, int draws, MomentumGrid grid) {
  SuiteResult r{"stationarity", false, 0.0, 1e-12, ""};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> gamma_dist(0.1, 1.5), h_dist(0.05, 2.0);
  std::uniform_int_distribution<int> half_n(2, 100);
  for (int i = 0; i < draws; ++i) {
    ModelParams p;
    p.gamma = gamma_dist(rng);
    p.h0 = p.h1 = h_dist(rng);
    p.N = 2 * half_n(rng);
    p.grid = grid;
    const QuenchEvaluator eval(p);
    const CorrelatorSet c0 = eval.correlators(0.0);
    const MeasureRecord m0 = evaluate_measures(c0, p.h1);
    for (int k = 1; k <= 100; ++k) {
      const CorrelatorSet c = eval.correlators(0.5 * k);
      const MeasureRecord m = evaluate_measures(c, p.h1);
      for (double d : {c.mz - c0.mz, c.sxx - c0.sxx, c.syy - c0.syy, c.szz - c0.szz,
                       m.c_l1 - m0.c_l1, m.c_re - m0.c_re, m.mrq - m0.mrq})
        r.worst = std::max(r.worst, std::fabs(d));
    }
  }
  r.passed = draws > 0 && r.worst <= r.tolerance;
  r.detail = std::to_string(draws) + " draws with h0 = h1, t in [0, 50]: max drift " + sci(r.worst);
  return r;
}

SuiteResult suite_limits(MomentumGrid grid) {
  SuiteResult r{"limits", true, 0.0, 1e-2, ""};
  std::ostringstream detail;
  auto check = [&](const char* label, double got, double want, double tol) {
    const double d = std::fabs(got - want);
    r.worst = std::max(r.worst, d);
    if (!(d <= tol)) r.passed = false;
    detail << (detail.tellp() > 0 ? ", " : "") << label << ' ' << format_number(got) << " (want "
           << format_number(want) << " +- " << format_number(tol) << ')';
  };

  ModelParams p;
  p.N = 100;
  p.gamma = 1.0;
  p.grid = grid;
  p.h0 = p.h1 = 20.0;
  const CorrelatorSet polar = correlators_nn(p, 0.0);
  const MeasureRecord mp = evaluate_measures(polar, p.h1);
  check("polarized mz", polar.mz, 1.0, 1e-3);
  check("mrq", mp.mrq, 4.0, 1e-2);
  check("c_l1", mp.c_l1, 2.0, 1e-2);
  check("c_re", mp.c_re, 2.0, 1e-2);

  p.h0 = p.h1 = 0.0;
  const CorrelatorSet ising = correlators_nn(p, 0.0);
  check("ising sxx", ising.sxx, 1.0, 1e-3);
  check("mz", ising.mz, 0.0, 1e-3);
  check("syy", ising.syy, 0.0, 1e-3);
  check("szz", ising.szz, 0.0, 1e-3);
  check("mrq", evaluate_measures(ising, 0.0).mrq, 2.0, 1e-2);
  r.detail = detail.str();
  return r;
}

}  // namespace xyq::cli
