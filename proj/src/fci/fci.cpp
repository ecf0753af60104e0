// Copyright 2026 the qpdft developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fci/fci.hpp"

#include <bit>
#include <cmath>

#include "common.hpp"

namespace qpdft::fci {
namespace {

/// Occupied-orbital list of a bitmask, ascending.
std::vector<int> occupied(std::uint32_t mask) {
  std::vector<int> occ;
  for (int p = 0; mask >> p; ++p)
    if ((mask >> p) & 1u) occ.push_back(p);
  return occ;
}

/// Fermionic phase (-1)^{occupied strictly between p and q in mask}.
double between_phase(std::uint32_t mask, int p, int q) {
  const int lo = std::min(p, q);
  const int hi = std::max(p, q);
  if (hi - lo < 2) return 1.0;
  const std::uint32_t between = ((1u << hi) - 1u) & ~((1u << (lo + 1)) - 1u);
  return (std::popcount(mask & between) & 1) ? -1.0 : 1.0;
}

/// Callback f(I, J, value) receives every ordered off-diagonal Hamiltonian
/// element exactly once, plus every diagonal once (I == J).
template <class F>
void for_each_element(const scf::ActiveHamiltonian& h, const DeterminantBasis& basis, F&& f) {
  const int m = h.norb;
  const auto& eri = h.eri;
  const auto h1 = [&](int p, int q) { return h.h(p, q); };

  const std::size_t nb = basis.beta_strings.size();
  for (std::size_t ia = 0; ia < basis.alpha_strings.size(); ++ia) {
    const std::uint32_t A = basis.alpha_strings[ia];
    const auto occ_a = occupied(A);
    for (std::size_t ib = 0; ib < nb; ++ib) {
      const std::uint32_t B = basis.beta_strings[ib];
      const auto occ_b = occupied(B);
      const std::size_t I = ia * nb + ib;

      // Diagonal.
      double diag = 0.0;
      for (int i : occ_a) diag += h1(i, i);
      for (int i : occ_b) diag += h1(i, i);
      for (int i : occ_a)
        for (int j : occ_a) diag += 0.5 * (eri(i, i, j, j) - eri(i, j, j, i));
      for (int i : occ_b)
        for (int j : occ_b) diag += 0.5 * (eri(i, i, j, j) - eri(i, j, j, i));
      for (int i : occ_a)
        for (int j : occ_b) diag += eri(i, i, j, j);
      f(I, I, diag);

      // Alpha singles (include the mean field of both spins).
      for (int i : occ_a)
        for (int a = 0; a < m; ++a) {
          if ((A >> a) & 1u) continue;
          double v = h1(i, a);
          for (int j : occ_a) v += eri(i, a, j, j) - eri(i, j, j, a);
          for (int j : occ_b) v += eri(i, a, j, j);
          const std::uint32_t A2 = A ^ (1u << i) ^ (1u << a);
          const std::size_t J = basis.index(basis.alpha_rank.at(A2), static_cast<int>(ib));
          f(I, J, between_phase(A, i, a) * v);
        }

      // Beta singles.
      for (int i : occ_b)
        for (int a = 0; a < m; ++a) {
          if ((B >> a) & 1u) continue;
          double v = h1(i, a);
          for (int j : occ_b) v += eri(i, a, j, j) - eri(i, j, j, a);
          for (int j : occ_a) v += eri(i, a, j, j);
          const std::uint32_t B2 = B ^ (1u << i) ^ (1u << a);
          const std::size_t J = basis.index(static_cast<int>(ia), basis.beta_rank.at(B2));
          f(I, J, between_phase(B, i, a) * v);
        }

      // Same-spin doubles, alpha then beta.
      for (int spin = 0; spin < 2; ++spin) {
        const std::uint32_t S = spin == 0 ? A : B;
        const auto& occ = spin == 0 ? occ_a : occ_b;
        for (std::size_t oi = 0; oi < occ.size(); ++oi)
          for (std::size_t oj = oi + 1; oj < occ.size(); ++oj) {
            const int i = occ[oi];
            const int j = occ[oj];
            for (int a = 0; a < m; ++a) {
              if ((S >> a) & 1u) continue;
              for (int b = a + 1; b < m; ++b) {
                if ((S >> b) & 1u) continue;
                const double v = eri(i, a, j, b) - eri(i, b, j, a);
                if (v == 0.0) continue;
                const std::uint32_t S1 = S ^ (1u << i) ^ (1u << a);
                const double phase = between_phase(S, i, a) * between_phase(S1, j, b);
                const std::uint32_t S2 = S1 ^ (1u << j) ^ (1u << b);
                const std::size_t J =
                    spin == 0 ? basis.index(basis.alpha_rank.at(S2), static_cast<int>(ib))
                              : basis.index(static_cast<int>(ia), basis.beta_rank.at(S2));
                f(I, J, phase * v);
              }
            }
          }
      }

      // Alpha-beta doubles.
      for (int i : occ_a)
        for (int a = 0; a < m; ++a) {
          if ((A >> a) & 1u) continue;
          const double pa = between_phase(A, i, a);
          const std::uint32_t A2 = A ^ (1u << i) ^ (1u << a);
          const int ja2 = basis.alpha_rank.at(A2);
          for (int j : occ_b)
            for (int b = 0; b < m; ++b) {
              if ((B >> b) & 1u) continue;
              const double v = eri(i, a, j, b);
              if (v == 0.0) continue;
              const std::uint32_t B2 = B ^ (1u << j) ^ (1u << b);
              const std::size_t J = basis.index(ja2, basis.beta_rank.at(B2));
              f(I, J, pa * between_phase(B, j, b) * v);
            }
        }
    }
  }
}

}  // namespace

DeterminantBasis make_basis(int norb, int n_alpha, int n_beta) {
  require(norb >= 1 && norb <= 20, ErrorKind::invalid_window, "FCI supports 1..20 orbitals");
  require(n_alpha >= 0 && n_beta >= 0 && n_alpha <= norb && n_beta <= norb,
          ErrorKind::invalid_window, "electron counts incompatible with orbital count");
  DeterminantBasis basis;
  basis.norb = norb;
  basis.n_alpha = n_alpha;
  basis.n_beta = n_beta;
  const auto enumerate = [&](int ne) {
    std::vector<std::uint32_t> strings;
    for (std::uint32_t mask = 0; mask < (1u << norb); ++mask)
      if (std::popcount(mask) == ne) strings.push_back(mask);
    return strings;  // ascending by construction
  };
  basis.alpha_strings = enumerate(n_alpha);
  basis.beta_strings = enumerate(n_beta);
  require(basis.size() <= 1000000, ErrorKind::size_exceeded,
          "determinant basis exceeds 1e6 states");
  for (std::size_t i = 0; i < basis.alpha_strings.size(); ++i)
    basis.alpha_rank[basis.alpha_strings[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < basis.beta_strings.size(); ++i)
    basis.beta_rank[basis.beta_strings[i]] = static_cast<int>(i);
  return basis;
}

Eigen::VectorXd apply_hamiltonian(const Eigen::VectorXd& x, const scf::ActiveHamiltonian& h,
                                  const DeterminantBasis& basis) {
  require(static_cast<std::size_t>(x.size()) == basis.size(), ErrorKind::dimension,
          "CI vector length does not match the basis");
  require(h.norb == basis.norb, ErrorKind::dimension,
          "Hamiltonian orbital count does not match the basis");
  Eigen::VectorXd y = Eigen::VectorXd::Zero(x.size());
  for_each_element(h, basis, [&](std::size_t I, std::size_t J, double v) {
    y[static_cast<Eigen::Index>(J)] += v * x[static_cast<Eigen::Index>(I)];
  });
  return y;
}

Eigen::MatrixXd dense_hamiltonian(const scf::ActiveHamiltonian& h, const DeterminantBasis& basis) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  require(n <= 20000, ErrorKind::size_exceeded, "dense Hamiltonian limited to 20000 determinants");
  Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(n, n);
  for_each_element(h, basis, [&](std::size_t I, std::size_t J, double v) {
    mat(static_cast<Eigen::Index>(J), static_cast<Eigen::Index>(I)) += v;
  });
  return mat;
}

Eigen::VectorXd apply_epq(const Eigen::VectorXd& x, int p, int q, const DeterminantBasis& basis) {
  require(p >= 0 && q >= 0 && p < basis.norb && q < basis.norb, ErrorKind::dimension,
          "orbital index out of range");
  require(static_cast<std::size_t>(x.size()) == basis.size(), ErrorKind::dimension,
          "CI vector length does not match the basis");
  Eigen::VectorXd y = Eigen::VectorXd::Zero(x.size());
  const std::size_t nb = basis.beta_strings.size();
  for (std::size_t ia = 0; ia < basis.alpha_strings.size(); ++ia) {
    const std::uint32_t A = basis.alpha_strings[ia];
    for (std::size_t ib = 0; ib < nb; ++ib) {
      const std::uint32_t B = basis.beta_strings[ib];
      const std::size_t I = ia * nb + ib;
      const double xi = x[static_cast<Eigen::Index>(I)];
      if (xi == 0.0) continue;
      // Alpha component of a^dag_p a_q.
      if ((A >> q) & 1u) {
        if (p == q) {
          y[static_cast<Eigen::Index>(I)] += xi;
        } else if (!((A >> p) & 1u)) {
          const std::uint32_t A2 = A ^ (1u << q) ^ (1u << p);
          const std::size_t J = basis.index(basis.alpha_rank.at(A2), static_cast<int>(ib));
          y[static_cast<Eigen::Index>(J)] += between_phase(A, q, p) * xi;
        }
      }
      // Beta component.
      if ((B >> q) & 1u) {
        if (p == q) {
          y[static_cast<Eigen::Index>(I)] += xi;
        } else if (!((B >> p) & 1u)) {
          const std::uint32_t B2 = B ^ (1u << q) ^ (1u << p);
          const std::size_t J = basis.index(static_cast<int>(ia), basis.beta_rank.at(B2));
          y[static_cast<Eigen::Index>(J)] += between_phase(B, q, p) * xi;
        }
      }
    }
  }
  return y;
}

rdm::RdmPair contract_rdms(const Eigen::VectorXd& x, const DeterminantBasis& basis) {
  const int n = basis.norb;
  rdm::RdmPair rdms(n);
  // One E_pq application per (p,q); gamma and Gamma follow from inner
  // products via E_pq E_rs = delta_qr E_ps + sum a^dag a^dag a a.
  std::vector<Eigen::VectorXd> w(static_cast<std::size_t>(n) * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) w[static_cast<std::size_t>(p) * n + q] = apply_epq(x, p, q, basis);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) rdms.gamma(p, q) = x.dot(w[static_cast<std::size_t>(p) * n + q]);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          double value = w[static_cast<std::size_t>(q) * n + p].dot(
              w[static_cast<std::size_t>(r) * n + s]);
          if (q == r) value -= rdms.gamma(p, s);
          rdms.g2(p, q, r, s) = value;
        }
  return rdms;
}

FciResult fci_ground(const scf::ActiveHamiltonian& h, int n_alpha, int n_beta,
                     const FciOptions& options) {
  FciResult result;
  result.basis = make_basis(h.norb, n_alpha, n_beta);
  const auto& basis = result.basis;
  const auto ndet = basis.size();

  if (ndet <= options.dense_cutoff && !options.force_iterative) {
    const Eigen::MatrixXd mat = dense_hamiltonian(h, basis);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat);
    result.energy = solver.eigenvalues()(0);
    result.ground = solver.eigenvectors().col(0);
    result.dense = true;
    result.residual = (mat * result.ground - result.energy * result.ground).norm();
  } else {
    // Lanczos with full reorthogonalization; start from the determinant with
    // the lowest diagonal element.
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(ndet));
    for_each_element(h, basis, [&](std::size_t I, std::size_t J, double v) {
      if (I == J) diag[static_cast<Eigen::Index>(I)] += v;
    });
    Eigen::Index start = 0;
    diag.minCoeff(&start);

    std::vector<Eigen::VectorXd> vs;
    std::vector<double> alphas, betas;
    Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(ndet));
    v[start] = 1.0;
    vs.push_back(v);
    double energy = diag[start];
    Eigen::VectorXd ground = v;

    const int max_iter = std::min<int>(options.max_iterations, static_cast<int>(ndet));
    for (int k = 0; k < max_iter; ++k) {
      Eigen::VectorXd w = apply_hamiltonian(vs.back(), h, basis);
      const double alpha = vs.back().dot(w);
      alphas.push_back(alpha);
      // Two-pass full reorthogonalization keeps the Krylov basis clean.
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& u : vs) w -= u.dot(w) * u;
      const double beta = w.norm();

      // Ritz pair from the tridiagonal projection.
      const auto kdim = static_cast<Eigen::Index>(alphas.size());
      Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(kdim, kdim);
      for (Eigen::Index i = 0; i < kdim; ++i) {
        tri(i, i) = alphas[static_cast<std::size_t>(i)];
        if (i + 1 < kdim) {
          tri(i, i + 1) = betas[static_cast<std::size_t>(i)];
          tri(i + 1, i) = betas[static_cast<std::size_t>(i)];
        }
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(tri);
      energy = small.eigenvalues()(0);
      const Eigen::VectorXd s = small.eigenvectors().col(0);
      ground.setZero();
      for (Eigen::Index i = 0; i < kdim; ++i) ground += s[i] * vs[static_cast<std::size_t>(i)];
      ground.normalize();
      result.iterations = k + 1;

      const double residual_estimate = beta * std::abs(s[kdim - 1]);
      if (residual_estimate < options.tolerance || beta < 1e-14) break;
      betas.push_back(beta);
      vs.push_back(w / beta);
    }
    result.energy = energy;
    result.ground = ground;
    result.dense = false;
    result.residual =
        (apply_hamiltonian(result.ground, h, basis) - result.energy * result.ground).norm();
    require(result.residual < 1e-7, ErrorKind::not_converged,
            "Lanczos did not converge to the requested residual");
  }

  // Fix the eigenvector's overall sign deterministically: largest component
  // positive.
  Eigen::Index imax = 0;
  result.ground.cwiseAbs().maxCoeff(&imax);
  if (result.ground[imax] < 0) result.ground = -result.ground;

  // The determinant matrix is purely electronic; report the total energy.
  result.energy += h.core_energy;
  result.rdms = contract_rdms(result.ground, basis);
  return result;
}

std::vector<std::complex<double>> ci_to_statevector(const Eigen::VectorXd& x,
                                                    const DeterminantBasis& basis) {
  require(static_cast<std::size_t>(x.size()) == basis.size(), ErrorKind::dimension,
          "CI vector length does not match the basis");
  const int m = basis.norb;
  std::vector<std::complex<double>> amplitudes(1ull << (2 * m), {0.0, 0.0});
  const std::size_t nb = basis.beta_strings.size();
  for (std::size_t ia = 0; ia < basis.alpha_strings.size(); ++ia)
    for (std::size_t ib = 0; ib < nb; ++ib) {
      const std::uint64_t occ = basis.alpha_strings[ia] |
                                (static_cast<std::uint64_t>(basis.beta_strings[ib]) << m);
      amplitudes[occ] = x[static_cast<Eigen::Index>(ia * nb + ib)];
    }
  return amplitudes;
}

Eigen::VectorXd statevector_to_ci(const std::vector<std::complex<double>>& amplitudes,
                                  const DeterminantBasis& basis, double* leaked_norm) {
  const int m = basis.norb;
  require(amplitudes.size() == (1ull << (2 * m)), ErrorKind::dimension,
          "amplitude vector does not match a 2m-qubit register");

  // Remove any global phase so the CI vector is real for real wavefunctions.
  std::complex<double> anchor = 0.0;
  for (const auto& a : amplitudes)
    if (std::abs(a) > std::abs(anchor)) anchor = a;
  const std::complex<double> phase =
      std::abs(anchor) > 0 ? anchor / std::abs(anchor) : std::complex<double>(1.0, 0.0);

  Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis.size()));
  double captured = 0.0;
  double total = 0.0;
  const std::size_t nb = basis.beta_strings.size();
  for (std::uint64_t occ = 0; occ < amplitudes.size(); ++occ) {
    const double a2 = std::norm(amplitudes[occ]);
    total += a2;
    if (a2 == 0.0) continue;
    const std::uint32_t alpha = static_cast<std::uint32_t>(occ & ((1ull << m) - 1));
    const std::uint32_t beta = static_cast<std::uint32_t>(occ >> m);
    const auto it_a = basis.alpha_rank.find(alpha);
    const auto it_b = basis.beta_rank.find(beta);
    if (it_a == basis.alpha_rank.end() || it_b == basis.beta_rank.end()) continue;
    const std::complex<double> aligned = amplitudes[occ] * std::conj(phase);
    require(std::abs(aligned.imag()) < 1e-8, ErrorKind::internal,
            "statevector is not real up to a global phase");
    x[static_cast<Eigen::Index>(it_a->second * nb + it_b->second)] = aligned.real();
    captured += a2;
  }
  if (leaked_norm != nullptr) *leaked_norm = total - captured;
  return x;
}

}  // namespace qpdft::fci
