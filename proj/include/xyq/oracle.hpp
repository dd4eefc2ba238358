#pragma once

// Brute-force reference implementations used to validate the closed forms:
// exact diagonalization of the spin chain, the steered-ensemble definition
// of steered coherence, and the 16-term Pauli characteristic function.

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "xyq/measures.hpp"
#include "xyq/model.hpp"

namespace xyq {

inline constexpr int kMaxEdSites = 14;

/// Dense spin-chain Hamiltonian with periodic boundary conditions in the
/// computational basis (bit i of the index set = spin i down).
/// parity = +1 or -1 restricts to that eigenspace of prod_i sigma^z_i,
/// parity = 0 keeps the full 2^n space.
struct SectorHamiltonian {
  std::vector<std::uint32_t> basis;
  Eigen::MatrixXd matrix;
};
SectorHamiltonian ed_hamiltonian(int n, double J, double gamma, double h, int parity);

/// Exact quench of an n-site ring. Both Hamiltonians are stored in the
/// even-parity sector, which holds the ground state and is invariant under
/// the dynamics.
class EDState {
 public:
  int n() const { return n_; }
  const ModelParams& params() const { return params_; }
  const std::vector<std::uint32_t>& basis() const { return basis_; }
  const Eigen::MatrixXd& hamiltonian0() const { return hamiltonian0_; }
  const Eigen::MatrixXd& hamiltonian1() const { return hamiltonian1_; }
  /// Ground state of H0 in sector coordinates (unit norm).
  const Eigen::VectorXd& ground() const { return ground_; }
  double ground_energy() const { return ground_energy_; }

  /// exp(-i H1 t) |ground> in sector coordinates.
  Eigen::VectorXcd evolved_sector(double t) const;
  /// exp(-i H1 t) |ground> in the full 2^n computational basis.
  Eigen::VectorXcd evolved(double t) const;
  /// <psi(t)| H1 |psi(t)>.
  double energy1(double t) const;

 private:
  friend EDState ed_build(const ModelParams& params);
  int n_ = 0;
  ModelParams params_;
  std::vector<std::uint32_t> basis_;
  Eigen::MatrixXd hamiltonian0_, hamiltonian1_;
  Eigen::VectorXd ground_;
  double ground_energy_ = 0.0;
  Eigen::VectorXd energies1_;
  Eigen::MatrixXd eigvecs1_;
  Eigen::VectorXd overlaps_;  // eigvecs1^T ground
};

/// Accepts even n with 2 <= n <= kMaxEdSites; params.N is the site count.
EDState ed_build(const ModelParams& params);

/// Reduced density matrix of sites (0, 1) at time t, basis |s0 s1> with
/// index 2*bit0 + bit1 (0 = up).
Eigen::Matrix4cd ed_two_site_density(const EDState& state, double t);

/// Same, reduced to X-state Bloch form. Throws std::runtime_error if
/// entries outside the X pattern exceed 1e-10.
XState ed_two_site_rdm(const EDState& state, double t);

struct SteeredCoherence {
  double l1 = 0.0;
  double re = 0.0;
};

/// Steered coherence from its ensemble definition: A measures each Pauli
/// operator, B's conditional states are scored in the two complementary
/// eigenbases, averaged with weight 1/2. Logs are base 2. Throws
/// PositivityError for non-PSD input and std::invalid_argument for
/// non-Hermitian or non-normalized input.
SteeredCoherence sqc_ensemble(const Eigen::Matrix4cd& rho);

/// sum_{s,t in {0,x,y,z}} |tr(rho sigma^s x sigma^t)|.
double mrq_pauli(const Eigen::Matrix4cd& rho);

/// Physical X-state drawn uniformly from the Bloch box [-1, 1]^4 by
/// rejection on positivity.
XState random_physical_xstate(std::mt19937_64& rng);

/// Pauli matrix k in {0, 1, 2, 3} = {I, x, y, z}.
Eigen::Matrix2cd pauli(int k);

}  // namespace xyq
