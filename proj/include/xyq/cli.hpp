#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "xyq/measures.hpp"
#include "xyq/model.hpp"
#include "xyq/sweeps.hpp"

namespace xyq::cli {

/// Exit status contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Ordered `key = value` pairs written at the top of every output file.
using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Decimal, 12 significant digits, locale independent. -0 prints as 0.
std::string format_number(double v);
/// The value format_number would print, parsed back.
double round_to_output(double v);

/// `min:max:count-or-step`. A third field without '.', 'e' or 'E' is a
/// point count; otherwise it is a step that must divide max - min.
/// Throws InvalidParams.
Grid1D parse_range(const std::string& text);
std::string format_range(const Grid1D& g);

/// Comma-separated positive integers.
std::vector<int> parse_sizes(const std::string& text);

/// Thread default from XYQ_THREADS (0 = OpenMP default when unset).
int default_threads();

void write_sweep_csv(std::ostream& os, const Metadata& meta,
                     const std::vector<MeasureRecord>& records);
void write_sweep_json(std::ostream& os, const Metadata& meta,
                      const std::vector<MeasureRecord>& records);
void write_revival_csv(std::ostream& os, const Metadata& meta,
                       const std::vector<RevivalStudy>& studies);
void write_revival_json(std::ostream& os, const Metadata& meta,
                        const std::vector<RevivalStudy>& studies);

/// Outcome of one validation suite.
struct SuiteResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;      // largest discrepancy observed
  double tolerance = 0.0;  // bound it was held to
  std::string detail;
};

/// Closed-form c_l1 / c_re / mrq against the ensemble and Pauli-trace
/// oracles on `count` seeded random physical X-states.
SuiteResult suite_xstate_oracle(std::uint64_t seed, int count);
/// Analytic correlators against ED at t = 0, dt, ..., t_max for each n;
/// passes iff every deviation is <= 4/n and strictly decreasing in n.
SuiteResult suite_ed_convergence(const ModelParams& base, const std::vector<int>& sizes,
                                 double t_max = 5.0, double dt = 0.5);
/// h0 == h1 series constant over t in [0, 50] for seeded random (gamma, h, N).
SuiteResult suite_stationarity(std::uint64_t seed, int draws, MomentumGrid grid);
/// Polarized (h0 = h1 = 20) and Ising (h0 = h1 = 0) limits at N = 100.
SuiteResult suite_limits(MomentumGrid grid);

/// Full command-line entry point. Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace xyq::cli
