#include "xyq/measures.hpp"

#include <algorithm>
#include <cmath>

namespace xyq {

namespace {

constexpr double kClampTolerance = 1e-12;
constexpr double kPoleTolerance = 1e-12;

void check_positive(const XState& x) {
  const Eigen::Vector4d ev = x.eigenvalues();
  if (ev(0) < -kPositivityTolerance) {
    throw PositivityError("X-state is not positive semidefinite: eigenvalue " +
                              std::to_string(ev(0)) + " (mz=" + std::to_string(x.mz) +
                              ", txx=" + std::to_string(x.txx) + ", tyy=" +
                              std::to_string(x.tyy) + ", tzz=" + std::to_string(x.tzz) + ")",
                          ev(0));
  }
}

}  // namespace

Eigen::Vector4d XState::eigenvalues() const {
  const double outer = std::hypot(2.0 * mz, txx - tyy);
  const double inner = std::fabs(txx + tyy);
  Eigen::Vector4d ev;
  ev << (1.0 + tzz - outer), (1.0 + tzz + outer), (1.0 - tzz - inner), (1.0 - tzz + inner);
  ev *= 0.25;
  std::sort(ev.data(), ev.data() + 4);
  return ev;
}

Eigen::Matrix4cd XState::density_matrix() const {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  rho(0, 0) = r11();
  rho(1, 1) = r22();
  rho(2, 2) = r33();
  rho(3, 3) = r44();
  rho(0, 3) = rho(3, 0) = r14();
  rho(1, 2) = rho(2, 1) = r23();
  return 0.25 * rho;
}

XState make_xstate(double mz, double txx, double tyy, double tzz) {
  XState x{mz, txx, tyy, tzz};
  check_positive(x);
  return x;
}

double h2(double x) {
  if (!(x >= -kClampTolerance && x <= 1.0 + kClampTolerance))
    throw std::domain_error("h2 argument outside [0, 1]: " + std::to_string(x));
  x = std::clamp(x, 0.0, 1.0);
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

XState assemble_xstate(const CorrelatorSet& c) {
  return make_xstate(c.mz, c.sxx, c.syy, c.szz);
}

double c_l1(const XState& x) {
  return 0.5 * (std::fabs(x.txx) + std::fabs(x.tyy) + std::hypot(x.txx, x.mz) +
                std::hypot(x.tyy, x.mz) + std::fabs(x.mz + x.tzz) + std::fabs(x.mz - x.tzz));
}

double c_l1(const CorrelatorSet& c) { return c_l1(assemble_xstate(c)); }

double c_re(const XState& x) {
  // Steered Bloch lengths lie in [0, 1] for physical states; clamp away
  // rounding so h2 sees a valid probability.
  auto half_up = [](double length) { return 0.5 * (1.0 + std::clamp(length, 0.0, 1.0)); };
  const double t1 = half_up(std::hypot(x.mz, x.txx));
  const double t2 = half_up(std::hypot(x.mz, x.tyy));
  double value = 2.0 - h2(t1) - h2(t2) + h2(std::clamp(0.5 * (1.0 + x.mz), 0.0, 1.0));
  const double up = 1.0 + x.mz;
  const double down = 1.0 - x.mz;
  if (up >= kPoleTolerance) value -= 0.5 * up * h2(half_up(std::fabs(x.mz + x.tzz) / up));
  if (down >= kPoleTolerance) value -= 0.5 * down * h2(half_up(std::fabs(x.mz - x.tzz) / down));
  return value;
}

double c_re(const CorrelatorSet& c) { return c_re(assemble_xstate(c)); }

double mrq(const XState& x) { return characteristic_matrix(x).cwiseAbs().sum(); }

double mrq(const CorrelatorSet& c) { return mrq(assemble_xstate(c)); }

Eigen::Matrix4d characteristic_matrix(const XState& x) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = x.txx;
  m(2, 2) = x.tyy;
  m(3, 3) = x.tzz;
  m(0, 3) = m(3, 0) = x.mz;
  return m;
}

MeasureRecord evaluate_measures(const CorrelatorSet& c, double h1) {
  const XState x = assemble_xstate(c);
  return {c.t, h1, c_l1(x), c_re(x), mrq(x)};
}

}  // namespace xyq
