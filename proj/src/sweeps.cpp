#include "xyq/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <set>

#include <omp.h>

#include "xyq/correlators.hpp"
#include "xyq/summation.hpp"

namespace xyq {

std::string to_string(Measure m) {
  switch (m) {
    case Measure::kCl1:
      return "c_l1";
    case Measure::kCre:
      return "c_re";
    case Measure::kMrq:
      return "mrq";
  }
  return "unknown";
}

Measure parse_measure(const std::string& name) {
  if (name == "c_l1") return Measure::kCl1;
  if (name == "c_re") return Measure::kCre;
  if (name == "mrq") return Measure::kMrq;
  throw InvalidParams("unknown measure '" + name + "' (expected c_l1, c_re or mrq)");
}

double measure_value(const MeasureRecord& r, Measure m) {
  switch (m) {
    case Measure::kCl1:
      return r.c_l1;
    case Measure::kCre:
      return r.c_re;
    case Measure::kMrq:
      return r.mrq;
  }
  return 0.0;
}

double Grid1D::at(int i) const {
  if (count == 1) return min;
  return min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
}

std::vector<double> Grid1D::values() const {
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) v[i] = at(i);
  return v;
}

Grid1D Grid1D::from_step(double min, double max, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw InvalidParams("grid step must be > 0");
  if (!(max >= min)) throw InvalidParams("grid max must be >= min");
  const auto intervals = std::llround((max - min) / step);
  return Grid1D{min, max, static_cast<int>(intervals) + 1};
}

void SweepSpec::validate() const {
  ModelParams probe = base;
  probe.h1 = h1.min;
  probe.validate();
  if (!(t.min >= 0.0)) throw InvalidParams("t_min must be >= 0");
  if (t.count < 2 || !(t.max > t.min)) throw InvalidParams("time grid needs t_max > t_min and >= 2 points");
  if (h1.count < 1) throw InvalidParams("h1 grid needs >= 1 point");
  if (h1.count > 1 && !(h1.max > h1.min)) throw InvalidParams("h1 grid needs h1_max > h1_min");
  if (!std::isfinite(h1.min) || !std::isfinite(h1.max)) throw InvalidParams("h1 range must be finite");
}

namespace {

int resolve_workers(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

void fill_row(const ModelParams& params, const std::vector<double>& times, MeasureRecord* out) {
  const QuenchEvaluator eval(params);
  for (std::size_t i = 0; i < times.size(); ++i) {
    try {
      out[i] = evaluate_measures(eval.correlators(times[i]), params.h1);
    } catch (const std::exception& e) {
      throw SweepError(std::string(e.what()) + " at t=" + std::to_string(times[i]) +
                           ", h1=" + std::to_string(params.h1),
                       times[i], params.h1);
    }
  }
}

}  // namespace

std::vector<MeasureRecord> sweep_grid(const SweepSpec& spec, int workers) {
  spec.validate();
  const std::vector<double> times = spec.t.values();
  const int rows = spec.h1.count;
  std::vector<MeasureRecord> records(static_cast<std::size_t>(rows) * times.size());
  std::vector<std::exception_ptr> errors(rows);

#pragma omp parallel for schedule(static) num_threads(resolve_workers(workers))
  for (int row = 0; row < rows; ++row) {
    try {
      ModelParams p = spec.base;
      p.h1 = spec.h1.at(row);
      fill_row(p, times, records.data() + static_cast<std::size_t>(row) * times.size());
    } catch (...) {
      errors[row] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return records;
}

std::vector<MeasureRecord> time_series(const ModelParams& params, const std::vector<double>& times) {
  std::vector<MeasureRecord> out(times.size());
  fill_row(params, times, out.data());
  return out;
}

std::vector<ColumnAverage> time_average(const std::vector<MeasureRecord>& records, int t_count) {
  if (t_count <= 0 || records.size() % static_cast<std::size_t>(t_count) != 0)
    throw std::invalid_argument("record count is not a multiple of the time-grid size");
  const std::size_t rows = records.size() / t_count;
  std::vector<ColumnAverage> out(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    CompensatedSum l1, re, m;
    for (int i = 0; i < t_count; ++i) {
      const auto& rec = records[r * t_count + i];
      l1 += rec.c_l1;
      re += rec.c_re;
      m += rec.mrq;
    }
    out[r] = {records[r * t_count].h1, l1.value() / t_count, re.value() / t_count,
              m.value() / t_count};
  }
  return out;
}

std::optional<double> detect_first_revival(const std::vector<double>& times,
                                           const std::vector<double>& values, int N,
                                           const RevivalConfig& cfg) {
  if (times.size() != values.size()) throw std::invalid_argument("times and values differ in length");
  if (times.size() < 3) throw std::invalid_argument("series too short for revival detection");
  if (!(cfg.calib_begin >= 0.0 && cfg.calib_begin < cfg.calib_end && cfg.calib_end < cfg.search_end))
    throw std::invalid_argument("revival windows must satisfy 0 <= calib_begin < calib_end < search_end");
  const double dt = times[1] - times[0];
  if (!(dt > 0.0) || dt > 0.1 + 1e-12) throw std::invalid_argument("series step must be in (0, 0.1]");
  for (std::size_t i = 0; i < times.size(); ++i)
    if (std::fabs(times[i] - (times[0] + dt * i)) > 1e-6 * dt)
      throw std::invalid_argument("series time grid is not uniform");
  const double eps = 1e-9 * dt;
  const double a = cfg.calib_begin * N, b = cfg.calib_end * N, c = cfg.search_end * N;
  if (times.front() > a + eps || times.back() < c - eps)
    throw std::invalid_argument("series too short: must cover [" + std::to_string(a) + ", " +
                                std::to_string(c) + "]");

  CompensatedSum baseline;
  int calib = 0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] >= a - eps && times[i] <= b + eps) {
      baseline += values[i];
      ++calib;
    }
  }
  if (calib == 0) throw std::invalid_argument("calibration window contains no samples");
  const double mu = baseline.value() / calib;

  double best = -1.0, best_t = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < b - eps || times[i] > c + eps) continue;
    const double dev = std::fabs(values[i] - mu);
    if (dev > best) {
      best = dev;
      best_t = times[i];
    }
  }
  if (best < 1e-9) return std::nullopt;
  return best_t;
}

RevivalFit fit_linear(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) throw InvalidParams("linear fit needs >= 3 points");
  std::set<double> xs;
  for (const auto& [x, y] : points) xs.insert(x);
  if (xs.size() != points.size()) throw InvalidParams("linear fit needs distinct N values");

  const double n = static_cast<double>(points.size());
  CompensatedSum sx, sy;
  for (const auto& [x, y] : points) {
    sx += x;
    sy += y;
  }
  const double mx = sx.value() / n, my = sy.value() / n;
  CompensatedSum sxx, sxy, syy;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  if (!(sxx.value() > 0.0)) throw InvalidParams("degenerate abscissas in linear fit");

  RevivalFit fit;
  fit.points = points;
  fit.slope = sxy.value() / sxx.value();
  fit.intercept = my - fit.slope * mx;
  CompensatedSum ss_res;
  for (const auto& [x, y] : points) {
    const double r = y - (fit.slope * x + fit.intercept);
    ss_res += r * r;
  }
  const double ss_tot = syy.value();
  fit.r_squared = ss_tot > 0.0 ? std::clamp(1.0 - ss_res.value() / ss_tot, 0.0, 1.0) : 1.0;
  return fit;
}

std::vector<RevivalStudy> revival_study(const ModelParams& base, const std::vector<int>& sizes,
                                        double dt, const RevivalConfig& cfg, int workers) {
  if (sizes.size() < 3) throw InvalidParams("revival fit needs >= 3 sizes");
  for (int n : sizes) {
    ModelParams p = base;
    p.N = n;
    p.validate();
  }
  if (!(dt > 0.0) || dt > 0.1) throw InvalidParams("revival dt must be in (0, 0.1]");

  const int count = static_cast<int>(sizes.size());
  constexpr int kMeasures = 3;
  std::vector<std::optional<double>> found(static_cast<std::size_t>(count) * kMeasures);
  std::vector<std::exception_ptr> errors(count);

#pragma omp parallel for schedule(dynamic) num_threads(resolve_workers(workers))
  for (int k = 0; k < count; ++k) {
    try {
      ModelParams p = base;
      p.N = sizes[k];
      const std::vector<double> times =
          Grid1D::from_step(0.0, cfg.search_end * p.N, dt).values();
      const auto series = time_series(p, times);
      std::vector<double> values(series.size());
      for (int m = 0; m < kMeasures; ++m) {
        for (std::size_t i = 0; i < series.size(); ++i)
          values[i] = measure_value(series[i], kAllMeasures[m]);
        found[k * kMeasures + m] = detect_first_revival(times, values, p.N, cfg);
      }
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<RevivalStudy> out;
  for (int m = 0; m < kMeasures; ++m) {
    std::vector<std::pair<double, double>> points;
    for (int k = 0; k < count; ++k) {
      const auto& tr = found[k * kMeasures + m];
      if (!tr)
        throw NoRevivalError("no revival detected for " + to_string(kAllMeasures[m]) +
                                 " at N=" + std::to_string(sizes[k]),
                             sizes[k]);
      points.emplace_back(sizes[k], *tr);
    }
    out.push_back({kAllMeasures[m], fit_linear(points)});
  }
  return out;
}

}  // namespace xyq
