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

#include <Eigen/Dense>

#include "io/fcidump.hpp"
#include "scf/integrals.hpp"
#include "scf/rhf.hpp"

namespace qpdft::scf {

// ---------------------------------------------------------------------------
// Active-space (CAS-style) Hamiltonian in an orthonormal orbital basis:
//
//   H = E_core + sum_pq h_pq E_pq + (1/2) sum_pqrs (pq|rs) e_pqrs
//
// with spatial indices, chemist-notation integrals, and inactive-orbital
// contributions folded into E_core and h.
// ---------------------------------------------------------------------------
struct ActiveHamiltonian {
  int norb = 0;
  int n_alpha = 0;
  int n_beta = 0;
  double core_energy = 0.0;
  Eigen::MatrixXd h;  // norb x norb effective one-electron integrals
  EriTensor eri;      // active two-electron integrals

  int n_electrons() const { return n_alpha + n_beta; }
  int n_spin_orbitals() const { return 2 * norb; }
};

struct ActiveWindow {
  int n_active_electrons = 0;
  int n_active_orbitals = 0;
  int spin_twice = 0;  // n_alpha - n_beta
};

/// Carve an active window out of a converged RHF solution: doubly occupied
/// orbitals below the window are folded into the core energy and effective
/// one-electron integrals.  Raises Error(invalid_window) when the window is
/// inconsistent with the electron count or basis size.
ActiveHamiltonian make_active_space(const IntegralSet& integrals, const RhfResult& scf,
                                    const ActiveWindow& window);

/// Same construction over an arbitrary orthonormal orbital set (columns of
/// `orbitals` against the AO basis of `integrals`), e.g. Loewdin orbitals.
ActiveHamiltonian make_active_space_orbitals(const IntegralSet& integrals,
                                             const Eigen::MatrixXd& orbitals, int n_electrons,
                                             const ActiveWindow& window);

ActiveHamiltonian from_fcidump(const io::Fcidump& dump);
io::Fcidump to_fcidump(const ActiveHamiltonian& hamiltonian);

}  // namespace qpdft::scf
