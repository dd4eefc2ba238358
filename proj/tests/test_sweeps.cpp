#include <cmath>
#include <numbers>

#include <doctest.h>

#include "xyq/sweeps.hpp"

using namespace xyq;

namespace {

std::vector<double> values_of(const std::vector<MeasureRecord>& rs, Measure m) {
  std::vector<double> v;
  for (const auto& r : rs) v.push_back(measure_value(r, m));
  return v;
}

}  // namespace

TEST_SUITE("sweeps") {

TEST_CASE("grid arithmetic") {
  const Grid1D t = Grid1D::from_step(0, 30, 0.1);
  CHECK(t.count == 301);
  CHECK(t.at(0) == 0.0);
  CHECK(t.at(300) == 30.0);
  CHECK(t.values().size() == 301);
  const Grid1D one{1.5, 1.5, 1};
  CHECK(one.values() == std::vector<double>{1.5});
  CHECK_THROWS_AS(Grid1D::from_step(0, 1, 0), InvalidParams);
  CHECK_THROWS_AS(Grid1D::from_step(1, 0, 0.1), InvalidParams);
}

TEST_CASE("sweep layout and input checks") {
  SweepSpec spec;
  spec.base.N = 40;
  spec.t = Grid1D{0, 2, 5};
  spec.h1 = Grid1D{0, 2, 3};
  const auto rs = sweep_grid(spec);
  REQUIRE(rs.size() == 15);
  CHECK(rs[0].h1 == 0.0);
  CHECK(rs[4].t == 2.0);
  CHECK(rs[5].h1 == 1.0);
  CHECK(rs[5].t == 0.0);
  CHECK(rs[14].h1 == 2.0);

  SweepSpec bad = spec;
  bad.t = Grid1D{1, 1, 2};
  CHECK_THROWS_AS(sweep_grid(bad), InvalidParams);
  bad = spec;
  bad.t.min = -1;
  CHECK_THROWS_AS(sweep_grid(bad), InvalidParams);
  bad = spec;
  bad.h1.count = 0;
  CHECK_THROWS_AS(sweep_grid(bad), InvalidParams);
}

TEST_CASE("no quench gives a flat row") {
  SweepSpec spec;
  spec.base.h0 = 0.7;
  spec.t = Grid1D{0, 30, 61};
  spec.h1 = Grid1D{0.7, 0.7, 1};
  const auto rs = sweep_grid(spec);
  for (const auto& r : rs) {
    CHECK(r.c_l1 == rs[0].c_l1);
    CHECK(r.c_re == rs[0].c_re);
    CHECK(r.mrq == rs[0].mrq);
  }
}

TEST_CASE("results do not depend on the worker count") {
  SweepSpec spec;
  spec.t = Grid1D{0, 30, 151};
  spec.h1 = Grid1D{0, 2, 21};
  const auto one = sweep_grid(spec, 1);
  for (int w : {2, 4, 8}) {
    const auto many = sweep_grid(spec, w);
    REQUIRE(many.size() == one.size());
    bool same = true;
    for (std::size_t i = 0; i < one.size(); ++i)
      same = same && one[i].t == many[i].t && one[i].h1 == many[i].h1 &&
             one[i].c_l1 == many[i].c_l1 && one[i].c_re == many[i].c_re &&
             one[i].mrq == many[i].mrq;
    CHECK(same);
  }
}

TEST_CASE("grid-point failures carry coordinates") {
  // Half-zone grid at N = 4, h = 0 gives a non-positive X-state.
  SweepSpec spec;
  spec.base.N = 4;
  spec.base.h0 = 0;
  spec.base.grid = MomentumGrid::kHalfZone;
  spec.t = Grid1D{0, 1, 2};
  spec.h1 = Grid1D{0, 0, 1};
  try {
    sweep_grid(spec, 2);
    FAIL("expected SweepError");
  } catch (const SweepError& e) {
    CHECK(e.t() == 0.0);
    CHECK(e.h1() == 0.0);
    CHECK(std::string(e.what()).find("h1=") != std::string::npos);
  }
}

TEST_CASE("time average") {
  std::vector<MeasureRecord> rs = {{0, 1, 1, 2, 3}, {1, 1, 3, 4, 5}, {0, 2, 0, 0, 1}, {1, 2, 2, 2, 1}};
  const auto avg = time_average(rs, 2);
  REQUIRE(avg.size() == 2);
  CHECK(avg[0].h1 == 1.0);
  CHECK(avg[0].c_l1 == 2.0);
  CHECK(avg[0].c_re == 3.0);
  CHECK(avg[1].mrq == 1.0);
  CHECK_THROWS(time_average(rs, 3));
}

TEST_CASE("revival detection on constructed series") {
  const std::vector<double> t = Grid1D::from_step(0, 40, 0.05).values();
  std::vector<double> flat(t.size(), 1.0), dip(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    dip[i] = 1.0 - 0.3 * std::exp(-(t[i] - 30) * (t[i] - 30) / 2.0);
  CHECK_FALSE(detect_first_revival(t, flat, 100).has_value());
  const auto found = detect_first_revival(t, dip, 100);
  REQUIRE(found.has_value());
  CHECK(std::fabs(*found - 30) <= 0.05);

  const std::vector<double> short_t(t.begin(), t.begin() + 600);
  const std::vector<double> short_v(dip.begin(), dip.begin() + 600);
  CHECK_THROWS_AS(detect_first_revival(short_t, short_v, 100), std::invalid_argument);
  const std::vector<double> coarse = Grid1D::from_step(0, 40, 0.2).values();
  CHECK_THROWS_AS(detect_first_revival(coarse, std::vector<double>(coarse.size()), 100),
                  std::invalid_argument);
}

TEST_CASE("revival of the quench to the critical field") {
  // First revival near t = N / 4 (maximal group velocity J of the critical chain).
  for (int n : {100, 200}) {
    ModelParams p;
    p.N = n;
    const auto t = Grid1D::from_step(0, 0.4 * n, 0.05).values();
    const auto rs = time_series(p, t);
    const auto tr = detect_first_revival(t, values_of(rs, Measure::kCl1), n);
    REQUIRE(tr.has_value());
    CHECK(std::fabs(*tr - 0.2532 * n) <= 1.0);
  }
}

TEST_CASE("halving dt moves t_r by at most dt") {
  for (int n : {100, 200})
    for (Measure m : kAllMeasures) {
      ModelParams p;
      p.N = n;
      const auto coarse = Grid1D::from_step(0, 0.4 * n, 0.1).values();
      const auto fine = Grid1D::from_step(0, 0.4 * n, 0.05).values();
      const auto a = detect_first_revival(coarse, values_of(time_series(p, coarse), m), n);
      const auto b = detect_first_revival(fine, values_of(time_series(p, fine), m), n);
      REQUIRE(a.has_value());
      REQUIRE(b.has_value());
      CHECK(std::fabs(*a - *b) <= 0.1 + 1e-12);
    }
}

TEST_CASE("linear fit") {
  const RevivalFit f = fit_linear({{100, 25.32}, {200, 50.64}, {300, 75.96}});
  CHECK(f.slope == doctest::Approx(0.2532).epsilon(1e-12));
  CHECK(std::fabs(f.intercept) < 1e-10);
  CHECK(f.r_squared == doctest::Approx(1.0));
  const RevivalFit g = fit_linear({{1, 1}, {2, 3}, {3, 2}});
  CHECK(g.slope == doctest::Approx(0.5));
  CHECK(g.intercept == doctest::Approx(1.0));
  CHECK(g.r_squared == doctest::Approx(0.25));
  CHECK_THROWS_AS(fit_linear({{1, 1}, {2, 2}}), InvalidParams);
  CHECK_THROWS_AS(fit_linear({{1, 1}, {1, 2}, {2, 2}}), InvalidParams);
}

TEST_CASE("revival study") {
  ModelParams p;
  const auto studies = revival_study(p, {100, 200, 300}, 0.05);
  REQUIRE(studies.size() == 3);
  for (const auto& s : studies) {
    CHECK(s.fit.points.size() == 3);
    CHECK(s.fit.slope > 0.24);
    CHECK(s.fit.slope < 0.26);
    CHECK(s.fit.r_squared > 0.999);
  }
  CHECK_THROWS_AS(revival_study(p, {100, 200}, 0.05), InvalidParams);

  ModelParams flat;
  flat.h0 = flat.h1 = 1.0;
  try {
    revival_study(flat, {40, 60, 80}, 0.05);
    FAIL("expected NoRevivalError");
  } catch (const NoRevivalError& e) {
    CHECK(e.n() == 40);
    CHECK(std::string(e.what()).find("N=40") != std::string::npos);
  }
}

TEST_CASE("measure names") {
  for (Measure m : kAllMeasures) CHECK(parse_measure(to_string(m)) == m);
  CHECK_THROWS_AS(parse_measure("l2"), InvalidParams);
}

}
