#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "xyq/measures.hpp"
#include "xyq/model.hpp"

namespace xyq {

enum class Measure { kCl1, kCre, kMrq };

inline constexpr Measure kAllMeasures[] = {Measure::kCl1, Measure::kCre, Measure::kMrq};

std::string to_string(Measure m);
Measure parse_measure(const std::string& name);
double measure_value(const MeasureRecord& r, Measure m);

/// Evenly spaced grid [min, max] with `count` points (count == 1 gives {min}).
struct Grid1D {
  double min = 0.0;
  double max = 0.0;
  int count = 1;

  double at(int i) const;
  std::vector<double> values() const;
  /// Grid with the given step; count = round((max - min) / step) + 1.
  static Grid1D from_step(double min, double max, double step);
};

/// (t x h1) heatmap definition. base.h1 is overridden at every grid point.
struct SweepSpec {
  ModelParams base;
  Grid1D t;
  Grid1D h1;

  void validate() const;
};

/// Grid point failure carrying its coordinates.
class SweepError : public std::runtime_error {
 public:
  SweepError(const std::string& what, double t, double h1)
      : std::runtime_error(what), t_(t), h1_(h1) {}
  double t() const { return t_; }
  double h1() const { return h1_; }

 private:
  double t_, h1_;
};

/// One record per (h1, t), h1 outer and t inner. Output is identical for
/// every worker count; workers <= 0 uses the OpenMP default.
std::vector<MeasureRecord> sweep_grid(const SweepSpec& spec, int workers = 1);

std::vector<MeasureRecord> time_series(const ModelParams& params, const std::vector<double>& times);

/// Mean of each measure over the t grid, one entry per h1 row of a sweep.
struct ColumnAverage {
  double h1 = 0.0;
  double c_l1 = 0.0;
  double c_re = 0.0;
  double mrq = 0.0;
};
std::vector<ColumnAverage> time_average(const std::vector<MeasureRecord>& records, int t_count);

/// Revival detection windows as fractions of N.
struct RevivalConfig {
  double calib_begin = 0.05;
  double calib_end = 0.15;
  double search_end = 0.40;
};

/// Times of a series in which the first revival is searched.
/// Baseline = mean over [calib_begin N, calib_end N]; result = argmax over
/// [calib_end N, search_end N] of |x - baseline|. Returns std::nullopt if
/// the series is flat (max deviation < 1e-9). Throws std::invalid_argument
/// if the series does not reach search_end * N or is not uniform with
/// dt <= 0.1.
std::optional<double> detect_first_revival(const std::vector<double>& times,
                                           const std::vector<double>& values, int N,
                                           const RevivalConfig& cfg = {});

struct RevivalFit {
  std::vector<std::pair<double, double>> points;  // (N, t_r)
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares t_r = slope * N + intercept.
RevivalFit fit_linear(const std::vector<std::pair<double, double>>& points);

/// Series + detection + fit for each measure over a list of sizes.
struct RevivalStudy {
  Measure measure;
  RevivalFit fit;
};
class NoRevivalError : public std::runtime_error {
 public:
  NoRevivalError(const std::string& what, int n) : std::runtime_error(what), n_(n) {}
  int n() const { return n_; }

 private:
  int n_;
};
std::vector<RevivalStudy> revival_study(const ModelParams& base, const std::vector<int>& sizes,
                                        double dt, const RevivalConfig& cfg = {},
                                        int workers = 1);

}  // namespace xyq
