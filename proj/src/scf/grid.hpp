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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "io/geometry.hpp"
#include "scf/basis.hpp"

namespace qpdft::scf {

// ---------------------------------------------------------------------------
// Atom-centered molecular quadrature grid (Becke partitioning).
//
// Radial shells use the second-kind Gauss-Chebyshev rule mapped through
// r = R_m (1+x)/(1-x); the sphere uses a Gauss-Legendre rule in cos(theta)
// crossed with a uniform azimuthal rule (n_phi = 2 n_polar).  Cell weights
// are Becke's fuzzy Voronoi weights with three smoothing iterations.
// ---------------------------------------------------------------------------
struct MolGrid {
  std::vector<std::array<double, 3>> points;
  std::vector<double> weights;

  std::size_t size() const { return points.size(); }
};

MolGrid build_becke_grid(const io::Geometry& geometry, int n_radial, int n_polar);

/// Gauss-Legendre nodes/weights on [-1, 1] (ascending nodes).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// ---------------------------------------------------------------------------
// Orbital values and gradients tabulated on a grid, the quantity the density
// functional machinery consumes.  values(i, j) = phi_j(r_i); gradients[c]
// holds the Cartesian derivative c of the same table.
// ---------------------------------------------------------------------------
struct GridData {
  MolGrid grid;
  Eigen::MatrixXd values;                    // npoints x norb
  std::array<Eigen::MatrixXd, 3> gradients;  // each npoints x norb

  int norb() const { return static_cast<int>(values.cols()); }
};

/// Tabulate molecular orbitals (columns of `orbitals` over the AO basis).
GridData orbitals_on_grid(const MolGrid& grid, const BasisSet& basis,
                          const Eigen::MatrixXd& orbitals);

// Text format, whitespace separated and full precision:
//   grid v1 <npoints> <norb>
//   x y z w  v_1..v_norb  gx_1 gy_1 gz_1 ... gx_norb gy_norb gz_norb
std::string emit_grid_data(const GridData& data);
GridData parse_grid_data(const std::string& text);

}  // namespace qpdft::scf
