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

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "io/geometry.hpp"
#include "scf/basis.hpp"

namespace qpdft::scf {

// ---------------------------------------------------------------------------
// Two-electron integral tensor under 8-fold permutational symmetry,
// chemist's notation (pq|rs).
// ---------------------------------------------------------------------------
class EriTensor {
 public:
  EriTensor() = default;
  explicit EriTensor(int n);

  int n() const { return n_; }
  double operator()(int p, int q, int r, int s) const { return data_[index(p, q, r, s)]; }
  void set(int p, int q, int r, int s, double value) { data_[index(p, q, r, s)] = value; }

  const std::vector<double>& raw() const { return data_; }

 private:
  std::size_t index(int p, int q, int r, int s) const;
  int n_ = 0;
  std::vector<double> data_;
};

// ---------------------------------------------------------------------------
// Analytic integrals over contracted s-Gaussians.  All closed forms reduce
// to the Boys function F0(t) = (1/2) sqrt(pi/t) erf(sqrt(t)).
// ---------------------------------------------------------------------------

/// Boys function of order zero; series expansion below t ~ 1e-12.
double boys_f0(double t);

Eigen::MatrixXd overlap_matrix(const BasisSet& basis);
Eigen::MatrixXd kinetic_matrix(const BasisSet& basis);
Eigen::MatrixXd nuclear_attraction_matrix(const BasisSet& basis, const io::Geometry& geometry);

/// Cartesian dipole operator matrices <i| r_c |j>, c = x,y,z (electron
/// position, no charge factor).
std::array<Eigen::MatrixXd, 3> dipole_matrices(const BasisSet& basis);

EriTensor eri_tensor(const BasisSet& basis);

/// One-index-at-a-time AO->MO transform of the two-electron tensor.
EriTensor transform_eri(const EriTensor& ao, const Eigen::MatrixXd& coeffs);

}  // namespace qpdft::scf
