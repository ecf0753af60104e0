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

#include "io/geometry.hpp"
#include "scf/basis.hpp"
#include "scf/integrals.hpp"

namespace qpdft::scf {

struct RhfOptions {
  int max_iterations = 200;
  double density_tolerance = 1e-8;  // max-abs change of the density matrix
  double damping = 0.5;             // mixing factor on the density update
};

struct RhfResult {
  double energy = 0.0;               // total energy incl. nuclear repulsion
  double nuclear_repulsion = 0.0;
  Eigen::MatrixXd coefficients;      // AO x MO
  Eigen::VectorXd orbital_energies;  // ascending
  Eigen::MatrixXd density;           // AO basis, trace(D S) = n_electrons
  int n_electrons = 0;
  int iterations = 0;
  bool converged = false;
};

/// Precomputed AO-basis operator set for a geometry/basis pair.
struct IntegralSet {
  io::Geometry geometry;
  BasisSet basis;
  Eigen::MatrixXd overlap;
  Eigen::MatrixXd kinetic;
  Eigen::MatrixXd nuclear;
  Eigen::MatrixXd core_hamiltonian;
  std::array<Eigen::MatrixXd, 3> dipole;
  EriTensor eri;
  double nuclear_repulsion = 0.0;
};

IntegralSet compute_integrals(const io::Geometry& geometry, const std::string& basis_name);

/// Closed-shell restricted Hartree-Fock with fixed density damping (no
/// level shifting, no DIIS).  n_electrons must be even and positive and is
/// limited by the basis size.  Non-convergence raises
/// Error(scf_not_converged).
RhfResult run_rhf(const IntegralSet& integrals, int n_electrons,
                  const RhfOptions& options = {});

}  // namespace qpdft::scf
