#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "xyq/correlators.hpp"

namespace xyq {

/// Raised when an X-state built from correlators has an eigenvalue below
/// -kPositivityTolerance.
class PositivityError : public std::domain_error {
 public:
  PositivityError(const std::string& what, double eigenvalue)
      : std::domain_error(what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const { return eigenvalue_; }

 private:
  double eigenvalue_;
};

inline constexpr double kPositivityTolerance = 1e-8;

/// Two-spin X-state
///
///   rho = 1/4 [[r11, 0, 0, r14], [0, r22, r23, 0], [0, r23, r33, 0], [r14, 0, 0, r44]]
///
/// in the basis |up up>, |up down>, |down up>, |down down>, stored through its
/// Bloch coefficients t_z0 = t_0z = mz, txx, tyy, tzz.
struct XState {
  double mz = 0.0;
  double txx = 0.0;
  double tyy = 0.0;
  double tzz = 0.0;

  double r11() const { return 1.0 + 2.0 * mz + tzz; }
  double r22() const { return 1.0 - tzz; }
  double r33() const { return 1.0 - tzz; }
  double r44() const { return 1.0 - 2.0 * mz + tzz; }
  double r14() const { return txx - tyy; }
  double r23() const { return txx + tyy; }

  /// Eigenvalues of rho (with the 1/4 prefactor), ascending.
  Eigen::Vector4d eigenvalues() const;
  /// Dense 4x4 rho, unit trace.
  Eigen::Matrix4cd density_matrix() const;
};

/// Builds an XState from Bloch coefficients and checks positivity.
XState make_xstate(double mz, double txx, double tyy, double tzz);

struct MeasureRecord {
  double t = 0.0;
  double h1 = 0.0;
  double c_l1 = 0.0;
  double c_re = 0.0;
  double mrq = 0.0;
};

/// Binary Shannon entropy in bits. Inputs within 1e-12 outside [0, 1] are
/// clamped; anything further out throws std::domain_error.
double h2(double x);

XState assemble_xstate(const CorrelatorSet& c);

/// l1-norm steered coherence averaged over the three Pauli steering
/// measurements and the two complementary bases.
double c_l1(const XState& x);
double c_l1(const CorrelatorSet& c);

/// Relative-entropy steered coherence (bits).
double c_re(const XState& x);
double c_re(const CorrelatorSet& c);

/// l1 norm of the Pauli characteristic function.
double mrq(const XState& x);
double mrq(const CorrelatorSet& c);

/// Characteristic function c(s, t) = tr(rho sigma^s x sigma^t), s, t in {0, x, y, z}.
Eigen::Matrix4d characteristic_matrix(const XState& x);

/// All three measures for one correlator set.
MeasureRecord evaluate_measures(const CorrelatorSet& c, double h1);

}  // namespace xyq
