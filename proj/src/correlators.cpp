#include "xyq/correlators.hpp"

#include <cmath>
#include <string>

#include "xyq/summation.hpp"

namespace xyq {

namespace {

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw InvalidParams("t must be finite and >= 0 (got " + std::to_string(t) + ")");
}

}  // namespace

QuenchEvaluator::QuenchEvaluator(const ModelParams& params)
    : params_(params), modes_(build_momentum_grid(params)), delta_h_(params.h0 - params.h1) {
  terms_.reserve(modes_.size());
  for (const auto& m : modes_) {
    ModeTerms mt{};
    mt.cos_phi = std::cos(m.phi);
    mt.sin_phi = std::sin(m.phi);
    mt.jc_h1 = params.J * mt.cos_phi + params.h1;
    mt.gamma_j_sin = params.gamma * params.J * mt.sin_phi;
    mt.gamma1 = m.gamma1;
    if (m.gamma0 >= kGaplessThreshold) {
      mt.uz = (params.J * mt.cos_phi + params.h0) / m.gamma0;
      mt.uy = mt.gamma_j_sin / m.gamma0;
    } else if (params.gamma != 0.0) {
      // Gapless pre-quench mode (phi = pi at h0 = J): limit of the ground
      // state pseudospin as phi -> pi from below.
      mt.uz = 0.0;
      mt.uy = params.gamma > 0.0 ? 1.0 : -1.0;
    } else {
      // Zero-energy mode of the isotropic chain; taken as empty.
      mt.uz = 1.0;
      mt.uy = 0.0;
    }
    terms_.push_back(mt);
  }
}

QuenchEvaluator::Sums QuenchEvaluator::accumulate(double t) const {
  CompensatedSum a, a_cos, b_sin, re_q, im_q;
  for (const auto& mt : terms_) {
    // sin^2(2 t G1) / G1^2 and sin(4 t G1) / G1 with their G1 -> 0 limits.
    double s2g2, s4g;
    if (mt.gamma1 < kGaplessThreshold) {
      s2g2 = 4.0 * t * t;
      s4g = 4.0 * t;
    } else {
      const double s = std::sin(2.0 * t * mt.gamma1);
      const double c = std::cos(2.0 * t * mt.gamma1);
      s2g2 = (s * s) / (mt.gamma1 * mt.gamma1);
      s4g = 2.0 * s * c / mt.gamma1;
    }
    const double ap = 2.0 * (mt.uz - 2.0 * delta_h_ * mt.gamma_j_sin * mt.uy * s2g2);
    const double bp = 2.0 * mt.uy * (1.0 + 2.0 * delta_h_ * mt.jc_h1 * s2g2);
    const double qp = 2.0 * delta_h_ * mt.uy * s4g;
    a += ap;
    a_cos += ap * mt.cos_phi;
    b_sin += bp * mt.sin_phi;
    re_q += 2.0 * mt.cos_phi;
    im_q += qp * mt.sin_phi;
  }
  return {a.value(), a_cos.value(), b_sin.value(), re_q.value(), im_q.value()};
}

double QuenchEvaluator::F(double t, int offset) const {
  require_time(t);
  if (offset < -1 || offset > 1)
    throw InvalidParams("F offset must be -1, 0 or +1 (got " + std::to_string(offset) + ")");
  const Sums s = accumulate(t);
  const double n = params_.N;
  if (offset == 0) return s.a / n;
  return (s.a_cos + offset * s.b_sin) / n;
}

std::pair<std::complex<double>, std::complex<double>> QuenchEvaluator::QG(double t,
                                                                         int offset) const {
  require_time(t);
  if (offset != -1 && offset != 1)
    throw InvalidParams("Q/G offset must be -1 or +1 (got " + std::to_string(offset) + ")");
  const Sums s = accumulate(t);
  const double n = params_.N;
  const std::complex<double> q(s.re_q / n, offset * s.im_q / n);
  return {q, -std::conj(q)};
}

CorrelatorSet QuenchEvaluator::correlators(double t) const {
  require_time(t);
  const Sums s = accumulate(t);
  const double n = params_.N;
  CorrelatorSet c;
  c.t = t;
  c.f0 = s.a / n;
  c.f_plus = (s.a_cos + s.b_sin) / n;
  c.f_minus = (s.a_cos - s.b_sin) / n;
  c.q = {s.re_q / n, s.im_q / n};
  c.g = -std::conj(c.q);
  c.mz = c.f0;
  c.sxx = c.f_plus;
  c.syy = c.f_minus;
  c.szz = c.f0 * c.f0 - (c.q * c.g).real() - c.f_minus * c.f_plus;
  return c;
}

double compute_F(const ModelParams& params, double t, int offset) {
  return QuenchEvaluator(params).F(t, offset);
}

std::pair<std::complex<double>, std::complex<double>> compute_QG(const ModelParams& params,
                                                                 double t, int offset) {
  return QuenchEvaluator(params).QG(t, offset);
}

CorrelatorSet correlators_nn(const ModelParams& params, double t) {
  return QuenchEvaluator(params).correlators(t);
}

}  // namespace xyq
