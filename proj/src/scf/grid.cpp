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

#include "scf/grid.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "common.hpp"

namespace qpdft::scf {
namespace {

/// Bragg-Slater radius used as the radial map midpoint, in Bohr.  Hydrogen
/// and helium both map to 1.0; heavier elements are not needed by the
/// supported basis tables but keep sensible defaults.
double atomic_radius(int charge) {
  static const double radii[] = {1.0, 1.0, 1.0, 1.45, 1.05, 0.85,
                                 0.70, 0.65, 0.60, 0.50, 0.45};
  if (charge >= 1 && charge <= 10) return radii[charge];
  return 1.0;
}

/// Becke's smoothing polynomial p(mu) = (3 mu - mu^3) / 2 iterated k times.
double becke_smooth(double mu, int iterations) {
  double p = mu;
  for (int k = 0; k < iterations; ++k) p = 0.5 * (3.0 * p - p * p * p);
  return p;
}

}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  require(n >= 1, ErrorKind::dimension, "Gauss-Legendre rule needs n >= 1");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  // Newton iteration from the Chebyshev initial guess; standard construction.
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(constants::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[n - 1 - i] = weights[i];
  }
}

MolGrid build_becke_grid(const io::Geometry& geometry, int n_radial, int n_polar) {
  require(!geometry.atoms.empty(), ErrorKind::dimension, "grid needs at least one atom");
  require(n_radial >= 2 && n_polar >= 2, ErrorKind::dimension,
          "grid needs at least two radial and two polar points");

  const int n_atoms = static_cast<int>(geometry.atoms.size());
  const int n_phi = 2 * n_polar;

  std::vector<double> cos_nodes;
  std::vector<double> cos_weights;
  gauss_legendre(n_polar, cos_nodes, cos_weights);

  MolGrid grid;
  grid.points.reserve(static_cast<std::size_t>(n_atoms) * n_radial * n_polar * n_phi);
  grid.weights.reserve(grid.points.capacity());

  for (int a = 0; a < n_atoms; ++a) {
    const auto& atom = geometry.atoms[a];
    const double rm = atomic_radius(static_cast<int>(std::lround(atom.charge)));

    for (int i = 1; i <= n_radial; ++i) {
      // Second-kind Gauss-Chebyshev: x_i = cos(i pi / (n+1)),
      // w_i = pi/(n+1) sin^2(theta_i) / sqrt(1-x^2) = pi/(n+1) sin(theta_i).
      const double theta = constants::pi * i / (n_radial + 1.0);
      const double x = std::cos(theta);
      const double r = rm * (1.0 + x) / (1.0 - x);
      // Jacobian dr/dx = 2 R_m / (1-x)^2; weight gains r^2 for the volume.
      const double w_radial =
          constants::pi / (n_radial + 1.0) * std::sin(theta) * 2.0 * rm / ((1.0 - x) * (1.0 - x)) * r * r;
      if (!(r > 0.0) || !std::isfinite(w_radial)) continue;

      for (int j = 0; j < n_polar; ++j) {
        const double ct = cos_nodes[j];
        const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        for (int k = 0; k < n_phi; ++k) {
          const double phi = 2.0 * constants::pi * (k + 0.5) / n_phi;
          const std::array<double, 3> point = {
              atom.position[0] + r * st * std::cos(phi),
              atom.position[1] + r * st * std::sin(phi),
              atom.position[2] + r * ct,
          };
          // Angular weight: GL weight in cos(theta) times uniform phi cell.
          const double w_angular = cos_weights[j] * (2.0 * constants::pi / n_phi);

          // Becke cell function for every atom at this point.
          double cell_a = 1.0;
          double cell_sum = 0.0;
          for (int b = 0; b < n_atoms; ++b) {
            double cell = 1.0;
            for (int c = 0; c < n_atoms; ++c) {
              if (b == c) continue;
              const auto& pb = geometry.atoms[b].position;
              const auto& pc = geometry.atoms[c].position;
              const double rb = std::hypot(point[0] - pb[0], point[1] - pb[1], point[2] - pb[2]);
              const double rc = std::hypot(point[0] - pc[0], point[1] - pc[1], point[2] - pc[2]);
              const double rbc = std::hypot(pb[0] - pc[0], pb[1] - pc[1], pb[2] - pc[2]);
              const double mu = (rb - rc) / rbc;
              cell *= 0.5 * (1.0 - becke_smooth(mu, 3));
            }
            cell_sum += cell;
            if (b == a) cell_a = cell;
          }
          const double becke = cell_sum > 0.0 ? cell_a / cell_sum : 0.0;

          grid.points.push_back(point);
          grid.weights.push_back(w_radial * w_angular * becke);
        }
      }
    }
  }
  return grid;
}

GridData orbitals_on_grid(const MolGrid& grid, const BasisSet& basis,
                          const Eigen::MatrixXd& orbitals) {
  const int n_ao = static_cast<int>(basis.size());
  require(orbitals.rows() == n_ao, ErrorKind::dimension,
          "orbital matrix rows must match the basis dimension");
  const int n_mo = static_cast<int>(orbitals.cols());
  const auto n_points = static_cast<Eigen::Index>(grid.size());

  // AO values and gradients first; the MO table is a single matrix product.
  Eigen::MatrixXd ao(n_points, n_ao);
  std::array<Eigen::MatrixXd, 3> ao_grad = {Eigen::MatrixXd(n_points, n_ao),
                                            Eigen::MatrixXd(n_points, n_ao),
                                            Eigen::MatrixXd(n_points, n_ao)};
  for (Eigen::Index ip = 0; ip < n_points; ++ip) {
    const auto& p = grid.points[static_cast<std::size_t>(ip)];
    for (int f = 0; f < n_ao; ++f) {
      const auto& fn = basis.functions[static_cast<std::size_t>(f)];
      const double dx = p[0] - fn.center[0];
      const double dy = p[1] - fn.center[1];
      const double dz = p[2] - fn.center[2];
      const double r2 = dx * dx + dy * dy + dz * dz;
      double value = 0.0;
      double radial = 0.0;  // sum of -2 alpha c N exp(-alpha r^2)
      for (std::size_t k = 0; k < fn.exponents.size(); ++k) {
        const double alpha = fn.exponents[k];
        const double c = fn.coefficients[k] * std::pow(2.0 * alpha / constants::pi, 0.75);
        const double g = c * std::exp(-alpha * r2);
        value += g;
        radial += -2.0 * alpha * g;
      }
      ao(ip, f) = value;
      ao_grad[0](ip, f) = radial * dx;
      ao_grad[1](ip, f) = radial * dy;
      ao_grad[2](ip, f) = radial * dz;
    }
  }

  GridData data;
  data.grid = grid;
  data.values = ao * orbitals;
  for (int c = 0; c < 3; ++c) data.gradients[c] = ao_grad[c] * orbitals;
  (void)n_mo;
  return data;
}

std::string emit_grid_data(const GridData& data) {
  const auto npoints = data.grid.size();
  const int norb = data.norb();
  std::ostringstream out;
  out << "grid v1 " << npoints << ' ' << norb << '\n';
  for (std::size_t i = 0; i < npoints; ++i) {
    const auto ip = static_cast<Eigen::Index>(i);
    out << format_full(data.grid.points[i][0]) << ' ' << format_full(data.grid.points[i][1])
        << ' ' << format_full(data.grid.points[i][2]) << ' '
        << format_full(data.grid.weights[i]);
    for (int j = 0; j < norb; ++j) out << ' ' << format_full(data.values(ip, j));
    for (int j = 0; j < norb; ++j)
      for (int c = 0; c < 3; ++c) out << ' ' << format_full(data.gradients[c](ip, j));
    out << '\n';
  }
  return out.str();
}

GridData parse_grid_data(const std::string& text) {
  std::istringstream in(text);
  std::string tag, version;
  std::size_t npoints = 0;
  int norb = 0;
  if (!(in >> tag >> version >> npoints >> norb) || tag != "grid" || version != "v1")
    fail(ErrorKind::parse, "grid file must start with 'grid v1 <npoints> <norb>'");
  require(norb >= 0, ErrorKind::parse, "grid file reports a negative orbital count");

  GridData data;
  data.grid.points.resize(npoints);
  data.grid.weights.resize(npoints);
  const auto rows = static_cast<Eigen::Index>(npoints);
  data.values.resize(rows, norb);
  for (int c = 0; c < 3; ++c) data.gradients[c].resize(rows, norb);

  for (std::size_t i = 0; i < npoints; ++i) {
    const auto ip = static_cast<Eigen::Index>(i);
    auto& point = data.grid.points[i];
    if (!(in >> point[0] >> point[1] >> point[2] >> data.grid.weights[i]))
      fail(ErrorKind::parse, "grid file truncated at point " + std::to_string(i));
    for (int j = 0; j < norb; ++j)
      if (!(in >> data.values(ip, j)))
        fail(ErrorKind::parse, "grid file truncated in orbital values at point " +
                                   std::to_string(i));
    for (int j = 0; j < norb; ++j)
      for (int c = 0; c < 3; ++c)
        if (!(in >> data.gradients[c](ip, j)))
          fail(ErrorKind::parse, "grid file truncated in orbital gradients at point " +
                                     std::to_string(i));
  }
  return data;
}

}  // namespace qpdft::scf
