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

#include "scf/rhf.hpp"

#include <cmath>

#include "common.hpp"

namespace qpdft::scf {

IntegralSet compute_integrals(const io::Geometry& geometry, const std::string& basis_name) {
  IntegralSet set;
  set.geometry = geometry;
  set.basis = build_basis(geometry, basis_name);
  set.overlap = overlap_matrix(set.basis);
  set.kinetic = kinetic_matrix(set.basis);
  set.nuclear = nuclear_attraction_matrix(set.basis, geometry);
  set.core_hamiltonian = set.kinetic + set.nuclear;
  set.dipole = dipole_matrices(set.basis);
  set.eri = eri_tensor(set.basis);
  set.nuclear_repulsion = geometry.atoms.size() > 1 ? io::nuclear_repulsion(geometry) : 0.0;
  return set;
}

namespace {

// G(D)_pq = sum_rs D_rs [ (pq|rs) - (1/2)(pr|qs) ]
Eigen::MatrixXd build_g(const EriTensor& eri, const Eigen::MatrixXd& density) {
  const int n = eri.n();
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(n, n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q) {
      double g = 0.0;
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
          g += density(r, s) * (eri(p, q, r, s) - 0.5 * eri(p, r, q, s));
      G(p, q) = G(q, p) = g;
    }
  return G;
}

}  // namespace

RhfResult run_rhf(const IntegralSet& integrals, int n_electrons, const RhfOptions& options) {
  const int n = integrals.basis.size();
  require(n_electrons > 0, ErrorKind::usage, "rhf: electron count must be positive");
  require(n_electrons % 2 == 0, ErrorKind::usage,
          "rhf: restricted solve requires an even electron count");
  const int n_occ = n_electrons / 2;
  require(n_occ <= n, ErrorKind::invalid_window,
          "rhf: " + std::to_string(n_electrons) + " electrons do not fit in " +
              std::to_string(n) + " basis functions");

  // Symmetric orthogonalization X = S^(-1/2).
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> s_eig(integrals.overlap);
  require(s_eig.eigenvalues().minCoeff() > 1e-10, ErrorKind::dimension,
          "rhf: overlap matrix is numerically singular");
  const Eigen::MatrixXd X = s_eig.eigenvectors() *
                            s_eig.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                            s_eig.eigenvectors().transpose();

  const auto solve_fock = [&](const Eigen::MatrixXd& F, Eigen::MatrixXd& C,
                              Eigen::VectorXd& eps) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> f_eig(X.transpose() * F * X);
    C = X * f_eig.eigenvectors();
    eps = f_eig.eigenvalues();
  };

  const auto density_from = [&](const Eigen::MatrixXd& C) {
    return Eigen::MatrixXd(2.0 * C.leftCols(n_occ) * C.leftCols(n_occ).transpose());
  };

  RhfResult result;
  result.n_electrons = n_electrons;
  result.nuclear_repulsion = integrals.nuclear_repulsion;

  // Core-Hamiltonian initial guess.
  Eigen::MatrixXd C;
  Eigen::VectorXd eps;
  solve_fock(integrals.core_hamiltonian, C, eps);
  Eigen::MatrixXd D = density_from(C);

  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    const Eigen::MatrixXd F = integrals.core_hamiltonian + build_g(integrals.eri, D);
    solve_fock(F, C, eps);
    const Eigen::MatrixXd D_raw = density_from(C);
    const double delta = (D_raw - D).cwiseAbs().maxCoeff();
    // Fixed-fraction damping of the density update stabilizes the plain
    // Roothaan iteration for the stretched geometries exercised here.
    D = options.damping * D + (1.0 - options.damping) * D_raw;
    result.iterations = iter;
    if (delta < options.density_tolerance) {
      result.converged = true;
      break;
    }
  }
  require(result.converged, ErrorKind::scf_not_converged,
          "rhf: no convergence within " + std::to_string(options.max_iterations) +
              " iterations");

  // Final self-consistent quantities from the converged density.
  const Eigen::MatrixXd F = integrals.core_hamiltonian + build_g(integrals.eri, D);
  solve_fock(F, C, eps);
  D = density_from(C);
  result.coefficients = C;
  result.orbital_energies = eps;
  result.density = D;
  result.energy = 0.5 * (D.cwiseProduct(integrals.core_hamiltonian +
                                        integrals.core_hamiltonian +
                                        build_g(integrals.eri, D)))
                            .sum() +
                  integrals.nuclear_repulsion;
  return result;
}

}  // namespace qpdft::scf
