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

#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "rdm/rdm_pair.hpp"
#include "scf/active_space.hpp"

namespace qpdft::fci {

// ---------------------------------------------------------------------------
// Exact diagonalization over determinants of a fixed (n_alpha, n_beta)
// sector.  Determinants are pairs of occupation bitmasks; the fermionic
// phase convention places creation operators in ascending mode order with
// the alpha block (modes 0..m-1) before the beta block (modes m..2m-1),
// matching the qubit-side Jordan-Wigner convention bit for bit.
// ---------------------------------------------------------------------------
struct DeterminantBasis {
  int norb = 0;
  int n_alpha = 0;
  int n_beta = 0;
  std::vector<std::uint32_t> alpha_strings;  // ascending bitmask order
  std::vector<std::uint32_t> beta_strings;
  std::unordered_map<std::uint32_t, int> alpha_rank;
  std::unordered_map<std::uint32_t, int> beta_rank;

  std::size_t size() const { return alpha_strings.size() * beta_strings.size(); }
  std::size_t index(int ia, int ib) const { return static_cast<std::size_t>(ia) * beta_strings.size() + ib; }
};

/// Enumerate the sector basis; Error(size_exceeded) above 1e6 determinants.
DeterminantBasis make_basis(int norb, int n_alpha, int n_beta);

/// Matrix-free action y = H x (Slater-Condon rules).
Eigen::VectorXd apply_hamiltonian(const Eigen::VectorXd& x, const scf::ActiveHamiltonian& h,
                                  const DeterminantBasis& basis);

/// Dense Hamiltonian matrix over the determinant basis.
Eigen::MatrixXd dense_hamiltonian(const scf::ActiveHamiltonian& h, const DeterminantBasis& basis);

/// Action of the spin-summed shift operator E_pq on a CI vector.
Eigen::VectorXd apply_epq(const Eigen::VectorXd& x, int p, int q, const DeterminantBasis& basis);

/// Spin-summed 1-/2-RDMs of a normalized CI vector.
rdm::RdmPair contract_rdms(const Eigen::VectorXd& x, const DeterminantBasis& basis);

struct FciOptions {
  std::size_t dense_cutoff = 2000;  // determinant count above which Lanczos is used
  bool force_iterative = false;
  int max_iterations = 400;
  double tolerance = 1e-10;  // residual norm ||Hv - Ev||
};

struct FciResult {
  double energy = 0.0;
  Eigen::VectorXd ground;  // normalized CI vector
  DeterminantBasis basis;
  rdm::RdmPair rdms;
  int iterations = 0;      // 0 for the dense path
  double residual = 0.0;
  bool dense = true;
};

/// Ground state of the sector: dense below options.dense_cutoff determinants,
/// Lanczos with full reorthogonalization above.
FciResult fci_ground(const scf::ActiveHamiltonian& h, int n_alpha, int n_beta,
                     const FciOptions& options = {});

/// CI vector re-expressed as amplitudes over occupation-number basis states
/// (bit p = occupation of mode p, alpha block low) — the Jordan-Wigner image.
std::vector<std::complex<double>> ci_to_statevector(const Eigen::VectorXd& x,
                                                    const DeterminantBasis& basis);

/// Inverse of ci_to_statevector: project occupation-basis amplitudes onto the
/// sector determinants (amplitudes outside the sector are ignored and
/// returned separately as leaked norm).
Eigen::VectorXd statevector_to_ci(const std::vector<std::complex<double>>& amplitudes,
                                  const DeterminantBasis& basis, double* leaked_norm = nullptr);

}  // namespace qpdft::fci
