#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace xyq {

/// Raised when a ModelParams (or any derived spec) violates an invariant.
/// The message names the violated invariant.
class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Momentum quantization used by the closed-form sums.
///
/// kAntiperiodic: phi_p = pi (2p - 1) / N, p = 1..N/2. This is the
///   quantization of the even fermion-parity sector that contains the
///   ground state of the periodic spin chain; closed forms on this grid
///   reproduce exact diagonalization to rounding error.
/// kHalfZone: phi_p = 2 pi p / N, p = 1..N/2. The c-cyclic grid of the
///   textbook momentum sums; deviates from exact finite-N dynamics at
///   O(1) once t exceeds ~N/4 and by O(1/N) before that.
enum class MomentumGrid { kAntiperiodic, kHalfZone };

std::string to_string(MomentumGrid grid);
MomentumGrid parse_momentum_grid(const std::string& name);

/// Definition of one sudden-quench experiment on the periodic XY chain
///   H = -J/2 sum [(1+gamma) sx sx + (1-gamma) sy sy] - h sum sz,
/// prepared in the ground state at field h0 and evolved at field h1.
/// hbar = 1, so time is measured in units of 1/J.
struct ModelParams {
  double J = 1.0;
  double gamma = 1.0;
  int N = 100;
  double h0 = 0.7;
  double h1 = 1.0;
  MomentumGrid grid = MomentumGrid::kAntiperiodic;

  /// Throws InvalidParams naming the first violated invariant.
  void validate() const;
};

struct MomentumMode {
  int p = 0;
  double phi = 0.0;
  double delta = 0.0;   // 2 gamma sin(phi)
  double gamma0 = 0.0;  // dispersion at h0
  double gamma1 = 0.0;  // dispersion at h1
};

/// Bogoliubov dispersion sqrt((J cos(phi) + h)^2 + gamma^2 J^2 sin^2(phi)).
double dispersion(double J, double gamma, double h, double phi);

/// The N/2 modes of the chosen grid in increasing phi.
std::vector<MomentumMode> build_momentum_grid(const ModelParams& params);

}  // namespace xyq
