#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>
#include <system_error>

#include "xyq/cli.hpp"

namespace xyq::cli {

namespace {

double parse_double(const std::string& s, const std::string& what) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v))
    throw InvalidParams(what + ": '" + s + "' is not a finite number");
  return v;
}

int parse_int(const std::string& s, const std::string& what) {
  int v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw InvalidParams(what + ": '" + s + "' is not an integer");
  return v;
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

double round_to_output(double v) {
  const std::string s = format_number(v);
  double out = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

Grid1D parse_range(const std::string& text) {
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? a : text.find(':', a + 1);
  if (a == std::string::npos || b == std::string::npos || text.find(':', b + 1) != std::string::npos)
    throw InvalidParams("range '" + text + "' must look like min:max:count-or-step");
  const double lo = parse_double(text.substr(0, a), "range min");
  const double hi = parse_double(text.substr(a + 1, b - a - 1), "range max");
  const std::string third = text.substr(b + 1);
  if (hi < lo) throw InvalidParams("range '" + text + "' has max < min");

  if (third.find_first_of(".eE") == std::string::npos) {
    const int count = parse_int(third, "range count");
    if (count < 1) throw InvalidParams("range count must be >= 1");
    if (count > 1 && !(hi > lo)) throw InvalidParams("range with several points needs max > min");
    return Grid1D{lo, hi, count};
  }
  const double step = parse_double(third, "range step");
  if (!(step > 0.0)) throw InvalidParams("range step must be > 0");
  const double intervals = (hi - lo) / step;
  if (std::fabs(intervals - std::round(intervals)) > 1e-9 * std::max(1.0, intervals))
    throw InvalidParams("range step " + third + " does not divide [" + format_number(lo) + ", " +
                        format_number(hi) + "]");
  return Grid1D::from_step(lo, hi, step);
}

std::string format_range(const Grid1D& g) {
  return format_number(g.min) + ":" + format_number(g.max) + ":" + std::to_string(g.count);
}

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const int n = parse_int(text.substr(start, comma - start), "size list");
    if (n <= 0) throw InvalidParams("sizes must be positive");
    out.push_back(n);
    start = comma + 1;
  }
  return out;
}

int default_threads() {
  const char* env = std::getenv("XYQ_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  const int n = parse_int(env, "XYQ_THREADS");
  if (n < 0) throw InvalidParams("XYQ_THREADS must be >= 0");
  return n;
}

}  // namespace xyq::cli
