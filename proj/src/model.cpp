#include "xyq/model.hpp"

#include <cmath>
#include <numbers>

namespace xyq {

std::string to_string(MomentumGrid grid) {
  switch (grid) {
    case MomentumGrid::kAntiperiodic:
      return "antiperiodic";
    case MomentumGrid::kHalfZone:
      return "half-zone";
  }
  return "unknown";
}

MomentumGrid parse_momentum_grid(const std::string& name) {
  if (name == "antiperiodic") return MomentumGrid::kAntiperiodic;
  if (name == "half-zone") return MomentumGrid::kHalfZone;
  throw InvalidParams("grid must be 'antiperiodic' or 'half-zone', got '" + name + "'");
}

void ModelParams::validate() const {
  if (N < 4 || N % 2 != 0)
    throw InvalidParams("N must be an even integer >= 4 (got " + std::to_string(N) + ")");
  if (!std::isfinite(J) || J <= 0.0) throw InvalidParams("J must be finite and > 0");
  if (!std::isfinite(gamma)) throw InvalidParams("gamma must be finite");
  if (!std::isfinite(h0)) throw InvalidParams("h0 must be finite");
  if (!std::isfinite(h1)) throw InvalidParams("h1 must be finite");
}

double dispersion(double J, double gamma, double h, double phi) {
  const double a = J * std::cos(phi) + h;
  const double b = gamma * J * std::sin(phi);
  return std::sqrt(a * a + b * b);
}

std::vector<MomentumMode> build_momentum_grid(const ModelParams& params) {
  params.validate();
  const int half = params.N / 2;
  std::vector<MomentumMode> modes;
  modes.reserve(half);
  for (int p = 1; p <= half; ++p) {
    MomentumMode m;
    m.p = p;
    m.phi = params.grid == MomentumGrid::kHalfZone
                ? std::numbers::pi * (2 * p) / params.N
                : std::numbers::pi * (2 * p - 1) / params.N;
    m.delta = 2.0 * params.gamma * std::sin(m.phi);
    m.gamma0 = dispersion(params.J, params.gamma, params.h0, m.phi);
    m.gamma1 = dispersion(params.J, params.gamma, params.h1, m.phi);
    modes.push_back(m);
  }
  return modes;
}

}  // namespace xyq
