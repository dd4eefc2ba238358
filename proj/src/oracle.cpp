#include "xyq/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>
#include <lapacke.h>

namespace xyq {

using cplx = std::complex<double>;

namespace {

int spin_z(std::uint32_t state, int site) { return (state >> site) & 1u ? -1 : 1; }

Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

double entropy_bits(const Eigen::VectorXd& probabilities) {
  double s = 0.0;
  for (double p : probabilities)
    if (p > 1e-300) s -= p * std::log2(p);
  return s;
}

void check_density(const Eigen::Matrix4cd& rho) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(rho.trace() - cplx(1.0, 0.0)) > 1e-10)
    throw std::invalid_argument("density matrix trace is not 1");
  const Eigen::Vector4d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd>(rho).eigenvalues();
  if (ev(0) < -kPositivityTolerance)
    throw PositivityError("density matrix has negative eigenvalue " + std::to_string(ev(0)),
                          ev(0));
}

struct Eigensystem {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

bool accurate(const Eigen::MatrixXd& m, const Eigensystem& es) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff()) * static_cast<double>(m.rows());
  const double residual =
      (m * es.vectors - es.vectors * es.values.asDiagonal()).cwiseAbs().maxCoeff();
  const double orth =
      (es.vectors.transpose() * es.vectors - Eigen::MatrixXd::Identity(m.rows(), m.rows()))
          .cwiseAbs()
          .maxCoeff();
  return residual < 1e-10 * scale && orth < 1e-10 * static_cast<double>(m.rows());
}

// Dense symmetric eigendecomposition, ascending values. LAPACK divide and
// conquer first; some optimized BLAS kernels return garbage on certain CPUs,
// so the result is checked and Eigen's solver is used if it fails.
Eigensystem symmetric_eigensystem(const Eigen::MatrixXd& m) {
  Eigensystem es;
  es.vectors = m;
  es.values.resize(m.rows());
  const auto n = static_cast<lapack_int>(m.rows());
  const lapack_int info =
      LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, es.vectors.data(), n, es.values.data());
  if (info == 0 && accurate(m, es)) return es;

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace

Eigen::Matrix2cd pauli(int k) {
  Eigen::Matrix2cd m;
  switch (k) {
    case 0:
      m << 1, 0, 0, 1;
      break;
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, cplx(0, -1), cplx(0, 1), 0;
      break;
    case 3:
      m << 1, 0, 0, -1;
      break;
    default:
      throw std::out_of_range("Pauli index must be 0..3");
  }
  return m;
}

SectorHamiltonian ed_hamiltonian(int n, double J, double gamma, double h, int parity) {
  if (n < 2 || n > kMaxEdSites || n % 2 != 0)
    throw InvalidParams("ED site count must be even and in [2, " + std::to_string(kMaxEdSites) +
                        "] (got " + std::to_string(n) + ")");
  if (parity < -1 || parity > 1) throw InvalidParams("parity must be -1, 0 or +1");

  SectorHamiltonian out;
  const std::uint32_t dim = 1u << n;
  std::vector<std::int64_t> index(dim, -1);
  for (std::uint32_t s = 0; s < dim; ++s) {
    const int p = std::popcount(s) % 2 == 0 ? 1 : -1;
    if (parity == 0 || p == parity) {
      index[s] = static_cast<std::int64_t>(out.basis.size());
      out.basis.push_back(s);
    }
  }
  const auto size = static_cast<Eigen::Index>(out.basis.size());
  out.matrix = Eigen::MatrixXd::Zero(size, size);
  for (Eigen::Index col = 0; col < size; ++col) {
    const std::uint32_t s = out.basis[col];
    double diag = 0.0;
    for (int i = 0; i < n; ++i) diag -= h * spin_z(s, i);
    out.matrix(col, col) = diag;
    for (int i = 0; i < n; ++i) {
      const int j = (i + 1) % n;
      // sx_i sx_j |s> = |s'>,  sy_i sy_j |s> = -z_i z_j |s'>
      const std::uint32_t flipped = s ^ (1u << i) ^ (1u << j);
      const double amp =
          -0.5 * J * ((1.0 + gamma) - (1.0 - gamma) * spin_z(s, i) * spin_z(s, j));
      out.matrix(index[flipped], col) += amp;
    }
  }
  return out;
}

EDState ed_build(const ModelParams& params) {
  if (!std::isfinite(params.J) || params.J <= 0.0) throw InvalidParams("J must be finite and > 0");
  if (!std::isfinite(params.gamma) || !std::isfinite(params.h0) || !std::isfinite(params.h1))
    throw InvalidParams("gamma, h0, h1 must be finite");

  EDState st;
  st.n_ = params.N;
  st.params_ = params;
  auto h0 = ed_hamiltonian(params.N, params.J, params.gamma, params.h0, +1);
  auto h1 = ed_hamiltonian(params.N, params.J, params.gamma, params.h1, +1);
  st.basis_ = std::move(h0.basis);
  st.hamiltonian0_ = std::move(h0.matrix);
  st.hamiltonian1_ = std::move(h1.matrix);

  const Eigensystem pre = symmetric_eigensystem(st.hamiltonian0_);
  st.ground_ = pre.vectors.col(0);
  st.ground_energy_ = pre.values(0);

  Eigensystem post = symmetric_eigensystem(st.hamiltonian1_);
  st.energies1_ = std::move(post.values);
  st.eigvecs1_ = std::move(post.vectors);
  st.overlaps_ = st.eigvecs1_.transpose() * st.ground_;
  return st;
}

Eigen::VectorXcd EDState::evolved_sector(double t) const {
  Eigen::VectorXcd phased(overlaps_.size());
  for (Eigen::Index k = 0; k < overlaps_.size(); ++k)
    phased(k) = std::polar(1.0, -energies1_(k) * t) * overlaps_(k);
  return eigvecs1_.cast<cplx>() * phased;
}

Eigen::VectorXcd EDState::evolved(double t) const {
  const Eigen::VectorXcd sector = evolved_sector(t);
  Eigen::VectorXcd full = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_);
  for (std::size_t k = 0; k < basis_.size(); ++k) full(basis_[k]) = sector(k);
  return full;
}

double EDState::energy1(double t) const {
  const Eigen::VectorXcd psi = evolved_sector(t);
  return (psi.adjoint() * (hamiltonian1_.cast<cplx>() * psi))(0).real();
}

Eigen::Matrix4cd ed_two_site_density(const EDState& state, double t) {
  const Eigen::VectorXcd psi = state.evolved(t);
  // Index = rest * 4 + 2 * bit1 + bit0; regroup so row index is 2*bit0 + bit1.
  const Eigen::Index rest = psi.size() / 4;
  Eigen::MatrixXcd amps(4, rest);
  for (Eigen::Index r = 0; r < rest; ++r)
    for (int b0 = 0; b0 < 2; ++b0)
      for (int b1 = 0; b1 < 2; ++b1) amps(2 * b0 + b1, r) = psi(r * 4 + 2 * b1 + b0);
  return amps * amps.adjoint();
}

XState ed_two_site_rdm(const EDState& state, double t) {
  const Eigen::Matrix4cd rho = ed_two_site_density(state, t);
  double leak = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && i + j != 3) leak = std::max(leak, std::abs(rho(i, j)));
  if (leak > 1e-10)
    throw std::runtime_error("two-site density is not of X form (leak " + std::to_string(leak) +
                             ")");
  auto expect = [&](int a, int b) { return (rho * kron(pauli(a), pauli(b))).trace().real(); };
  XState x;
  x.mz = 0.5 * (expect(3, 0) + expect(0, 3));
  x.txx = expect(1, 1);
  x.tyy = expect(2, 2);
  x.tzz = expect(3, 3);
  return x;
}

SteeredCoherence sqc_ensemble(const Eigen::Matrix4cd& rho) {
  check_density(rho);
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  // Eigenbases of sigma^x, sigma^y, sigma^z as columns.
  Eigen::Matrix2cd bases[3];
  for (int nu = 0; nu < 3; ++nu)
    bases[nu] = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd>(pauli(nu + 1)).eigenvectors();

  SteeredCoherence out;
  for (int mu = 0; mu < 3; ++mu) {
    for (int a = 0; a < 2; ++a) {
      const Eigen::Matrix2cd proj = 0.5 * (id + (a == 0 ? 1.0 : -1.0) * pauli(mu + 1));
      const Eigen::Matrix4cd m = kron(proj, id) * rho;
      Eigen::Matrix2cd rho_b = Eigen::Matrix2cd::Zero();
      for (int i = 0; i < 2; ++i) rho_b += m.block<2, 2>(2 * i, 2 * i);
      const double p = rho_b.trace().real();
      if (p < 1e-14) continue;
      rho_b /= p;
      rho_b = 0.5 * (rho_b + rho_b.adjoint()).eval();
      const Eigen::VectorXd spectrum =
          Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd>(rho_b).eigenvalues();
      const double s_rho = entropy_bits(spectrum);
      for (int nu = 0; nu < 3; ++nu) {
        if (nu == mu) continue;
        const Eigen::Matrix2cd in_basis = bases[nu].adjoint() * rho_b * bases[nu];
        const double l1 = 2.0 * std::abs(in_basis(0, 1));
        const Eigen::Vector2d diag(in_basis(0, 0).real(), in_basis(1, 1).real());
        const double re = entropy_bits(diag) - s_rho;
        out.l1 += 0.5 * p * l1;
        out.re += 0.5 * p * re;
      }
    }
  }
  return out;
}

double mrq_pauli(const Eigen::Matrix4cd& rho) {
  double total = 0.0;
  for (int s = 0; s < 4; ++s)
    for (int t = 0; t < 4; ++t) total += std::abs((rho * kron(pauli(s), pauli(t))).trace());
  return total;
}

XState random_physical_xstate(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    XState x{u(rng), u(rng), u(rng), u(rng)};
    if (x.eigenvalues()(0) >= 0.0) return x;
  }
}

}  // namespace xyq
