#include <ostream>

#include <json.hpp>

#include "xyq/cli.hpp"

namespace xyq::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

void write_meta_lines(std::ostream& os, const Metadata& meta) {
  for (const auto& [k, v] : meta) os << "# " << k << " = " << v << '\n';
}

ordered_json meta_object(const Metadata& meta) {
  ordered_json m = ordered_json::object();
  for (const auto& [k, v] : meta) m[k] = v;
  return m;
}

}  // namespace

void write_sweep_csv(std::ostream& os, const Metadata& meta,
                     const std::vector<MeasureRecord>& records) {
  write_meta_lines(os, meta);
  os << "t,h1,c_l1,c_re,mrq\n";
  for (const auto& r : records)
    os << format_number(r.t) << ',' << format_number(r.h1) << ',' << format_number(r.c_l1) << ','
       << format_number(r.c_re) << ',' << format_number(r.mrq) << '\n';
}

void write_sweep_json(std::ostream& os, const Metadata& meta,
                      const std::vector<MeasureRecord>& records) {
  ordered_json doc;
  doc["meta"] = meta_object(meta);
  ordered_json rows = ordered_json::array();
  for (const auto& r : records) {
    rows.push_back({{"t", round_to_output(r.t)},
                    {"h1", round_to_output(r.h1)},
                    {"c_l1", round_to_output(r.c_l1)},
                    {"c_re", round_to_output(r.c_re)},
                    {"mrq", round_to_output(r.mrq)}});
  }
  doc["records"] = std::move(rows);
  os << doc.dump(1) << '\n';
}

void write_revival_csv(std::ostream& os, const Metadata& meta,
                       const std::vector<RevivalStudy>& studies) {
  write_meta_lines(os, meta);
  for (const auto& s : studies) {
    const std::string m = to_string(s.measure);
    os << "# " << m << ".slope = " << format_number(s.fit.slope) << '\n'
       << "# " << m << ".intercept = " << format_number(s.fit.intercept) << '\n'
       << "# " << m << ".r_squared = " << format_number(s.fit.r_squared) << '\n';
  }
  os << "measure,N,t_r\n";
  for (const auto& s : studies)
    for (const auto& [n, tr] : s.fit.points)
      os << to_string(s.measure) << ',' << format_number(n) << ',' << format_number(tr) << '\n';
}

void write_revival_json(std::ostream& os, const Metadata& meta,
                        const std::vector<RevivalStudy>& studies) {
  ordered_json doc;
  doc["meta"] = meta_object(meta);
  ordered_json fits = ordered_json::array();
  for (const auto& s : studies) {
    ordered_json pts = ordered_json::array();
    for (const auto& [n, tr] : s.fit.points)
      pts.push_back({{"N", static_cast<int>(n)}, {"t_r", round_to_output(tr)}});
    fits.push_back({{"measure", to_string(s.measure)},
                    {"slope", round_to_output(s.fit.slope)},
                    {"intercept", round_to_output(s.fit.intercept)},
                    {"r_squared", round_to_output(s.fit.r_squared)},
                    {"points", std::move(pts)}});
  }
  doc["fits"] = std::move(fits);
  os << doc.dump(1) << '\n';
}

}  // namespace xyq::cli
