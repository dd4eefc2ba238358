#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "xyq/model.hpp"

namespace xyq {

/// Magnetization and nearest-neighbour Pauli correlators at one time,
/// together with the fermionic contractions they are built from.
/// All sigma-sigma values are <sigma sigma>, i.e. 4x the spin-1/2 ones.
struct CorrelatorSet {
  double t = 0.0;
  double mz = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  double szz = 0.0;
  double f0 = 0.0;       // F_{l,l}
  double f_plus = 0.0;   // F_{l,l+1}
  double f_minus = 0.0;  // F_{l+1,l}
  std::complex<double> q;  // Q_{l,l+1}
  std::complex<double> g;  // G_{l,l+1} = -conj(q)
};

/// Modes below this dispersion use the analytic Gamma -> 0 limits.
inline constexpr double kGaplessThreshold = 1e-12;

/// Caches the momentum grid of one quench so that many time points can be
/// evaluated cheaply. Sums run in ascending p with compensated
/// accumulation, so results do not depend on the caller's threading.
class QuenchEvaluator {
 public:
  explicit QuenchEvaluator(const ModelParams& params);

  const ModelParams& params() const { return params_; }
  const std::vector<MomentumMode>& modes() const { return modes_; }

  /// F_{l,l+offset}, offset in {-1, 0, +1}.
  double F(double t, int offset) const;
  /// (Q_{l,l+offset}, G_{l,l+offset}), offset in {-1, +1}.
  std::pair<std::complex<double>, std::complex<double>> QG(double t, int offset) const;
  CorrelatorSet correlators(double t) const;

 private:
  struct ModeTerms {
    double cos_phi, sin_phi;
    double uz, uy;        // pre-quench pseudospin (J cos + h0, gamma J sin) / Gamma0
    double jc_h1;         // J cos(phi) + h1
    double gamma_j_sin;   // gamma J sin(phi)
    double gamma1;
  };
  struct Sums {
    double a, a_cos, b_sin, re_q, im_q;
  };
  Sums accumulate(double t) const;

  ModelParams params_;
  std::vector<MomentumMode> modes_;
  std::vector<ModeTerms> terms_;
  double delta_h_;
};

double compute_F(const ModelParams& params, double t, int offset);
std::pair<std::complex<double>, std::complex<double>> compute_QG(const ModelParams& params,
                                                                 double t, int offset);
CorrelatorSet correlators_nn(const ModelParams& params, double t);

}  // namespace xyq
