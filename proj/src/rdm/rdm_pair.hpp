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

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "scf/active_space.hpp"

namespace qpdft::rdm {

// ---------------------------------------------------------------------------
// Spin-summed reduced density matrices over spatial active orbitals.
//
// Conventions (fixed across the whole code base):
//   gamma_pq    = <E_pq> = sum_s <a^dag_{ps} a_{qs}>
//   Gamma_pqrs  = sum_{st} <a^dag_{ps} a^dag_{rt} a_{st} a_{qs}>
// so that  E = sum h_pq gamma_pq + 1/2 sum Gamma_pqrs (pq|rs) + E_core,
// trace(gamma) = N and sum_r Gamma_pqrr = (N-1) gamma_pq.
// For real wavefunctions Gamma has the 4-fold symmetry group
// {pqrs, rspq, qpsr, srqp}.
// ---------------------------------------------------------------------------
struct RdmPair {
  int norb = 0;
  Eigen::MatrixXd gamma;        // norb x norb
  std::vector<double> big_gamma;  // norb^4, index ((p*n+q)*n+r)*n+s

  RdmPair() = default;
  explicit RdmPair(int n)
      : norb(n), gamma(Eigen::MatrixXd::Zero(n, n)),
        big_gamma(static_cast<std::size_t>(n) * n * n * n, 0.0) {}

  double& g2(int p, int q, int r, int s) {
    return big_gamma[((static_cast<std::size_t>(p) * norb + q) * norb + r) * norb + s];
  }
  double g2(int p, int q, int r, int s) const {
    return big_gamma[((static_cast<std::size_t>(p) * norb + q) * norb + r) * norb + s];
  }
};

/// Model energy from the RDM contraction identity above.
double contract_energy(const scf::ActiveHamiltonian& h, const RdmPair& rdms);

/// Symmetrize in place: gamma <- (gamma + gamma^T)/2 and Gamma averaged over
/// its real-wavefunction 4-fold symmetry group.
void impose_symmetry(RdmPair& rdms);

/// Largest violation of the partial trace identity sum_r Gamma_pqrr = (N-1) gamma_pq.
double partial_trace_residual(const RdmPair& rdms, int n_electrons);

/// Text export (header `rdm v1 <norb>`, then gamma row-major, then Gamma),
/// full precision; parse counterpart.
std::string emit_rdms(const RdmPair& rdms);
RdmPair parse_rdms(const std::string& text);

}  // namespace qpdft::rdm
