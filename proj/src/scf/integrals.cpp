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

#include "scf/integrals.hpp"

#include <cmath>

#include "common.hpp"

namespace qpdft::scf {

namespace {

using Vec3 = std::array<double, 3>;

double dist2(const Vec3& a, const Vec3& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
  return dx * dx + dy * dy + dz * dz;
}

double prim_norm(double a) { return std::pow(2.0 * a / constants::pi, 0.75); }

Vec3 gaussian_product_center(double a, const Vec3& A, double b, const Vec3& B) {
  const double p = a + b;
  return {(a * A[0] + b * B[0]) / p, (a * A[1] + b * B[1]) / p, (a * A[2] + b * B[2]) / p};
}

// Loop over primitive pairs of two contractions, invoking fn with the
// combined coefficient (including primitive norms) and exponents.
template <typename F>
void for_primitive_pairs(const ContractedS& f1, const ContractedS& f2, F&& fn) {
  for (std::size_t k = 0; k < f1.exponents.size(); ++k)
    for (std::size_t l = 0; l < f2.exponents.size(); ++l) {
      const double a = f1.exponents[k];
      const double b = f2.exponents[l];
      const double c = f1.coefficients[k] * f2.coefficients[l] * prim_norm(a) * prim_norm(b);
      fn(a, b, c);
    }
}

}  // namespace

double boys_f0(double t) {
  if (t < 1e-12) return 1.0 - t / 3.0 + t * t / 10.0;
  const double st = std::sqrt(t);
  return 0.5 * std::sqrt(constants::pi / t) * std::erf(st);
}

EriTensor::EriTensor(int n) : n_(n) {
  const std::size_t npair = static_cast<std::size_t>(n) * (n + 1) / 2;
  data_.assign(npair * (npair + 1) / 2, 0.0);
}

std::size_t EriTensor::index(int p, int q, int r, int s) const {
  const auto pair = [](int a, int b) -> std::size_t {
    if (a < b) std::swap(a, b);
    return static_cast<std::size_t>(a) * (a + 1) / 2 + b;
  };
  std::size_t pq = pair(p, q), rs = pair(r, s);
  if (pq < rs) std::swap(pq, rs);
  return pq * (pq + 1) / 2 + rs;
}

Eigen::MatrixXd overlap_matrix(const BasisSet& basis) {
  const int n = basis.size();
  Eigen::MatrixXd S(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      const auto& fi = basis.functions[static_cast<std::size_t>(i)];
      const auto& fj = basis.functions[static_cast<std::size_t>(j)];
      const double r2 = dist2(fi.center, fj.center);
      double s = 0.0;
      for_primitive_pairs(fi, fj, [&](double a, double b, double c) {
        const double p = a + b;
        s += c * std::pow(constants::pi / p, 1.5) * std::exp(-a * b / p * r2);
      });
      S(i, j) = S(j, i) = s;
    }
  return S;
}

Eigen::MatrixXd kinetic_matrix(const BasisSet& basis) {
  const int n = basis.size();
  Eigen::MatrixXd T(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      const auto& fi = basis.functions[static_cast<std::size_t>(i)];
      const auto& fj = basis.functions[static_cast<std::size_t>(j)];
      const double r2 = dist2(fi.center, fj.center);
      double t = 0.0;
      for_primitive_pairs(fi, fj, [&](double a, double b, double c) {
        const double p = a + b;
        const double mu = a * b / p;
        const double s = std::pow(constants::pi / p, 1.5) * std::exp(-mu * r2);
        t += c * mu * (3.0 - 2.0 * mu * r2) * s;
      });
      T(i, j) = T(j, i) = t;
    }
  return T;
}

Eigen::MatrixXd nuclear_attraction_matrix(const BasisSet& basis, const io::Geometry& geometry) {
  const int n = basis.size();
  Eigen::MatrixXd V = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      const auto& fi = basis.functions[static_cast<std::size_t>(i)];
      const auto& fj = basis.functions[static_cast<std::size_t>(j)];
      const double r2 = dist2(fi.center, fj.center);
      double v = 0.0;
      for_primitive_pairs(fi, fj, [&](double a, double b, double c) {
        const double p = a + b;
        const Vec3 P = gaussian_product_center(a, fi.center, b, fj.center);
        const double pre = c * 2.0 * constants::pi / p * std::exp(-a * b / p * r2);
        for (const auto& atom : geometry.atoms)
          v -= pre * atom.charge * boys_f0(p * dist2(P, atom.position));
      });
      V(i, j) = V(j, i) = v;
    }
  return V;
}

std::array<Eigen::MatrixXd, 3> dipole_matrices(const BasisSet& basis) {
  const int n = basis.size();
  std::array<Eigen::MatrixXd, 3> D{Eigen::MatrixXd::Zero(n, n), Eigen::MatrixXd::Zero(n, n),
                                   Eigen::MatrixXd::Zero(n, n)};
  // For s functions <a| r_c |b> = P_c * S_ab with P the product center.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      const auto& fi = basis.functions[static_cast<std::size_t>(i)];
      const auto& fj = basis.functions[static_cast<std::size_t>(j)];
      const double r2 = dist2(fi.center, fj.center);
      Vec3 d{0.0, 0.0, 0.0};
      for_primitive_pairs(fi, fj, [&](double a, double b, double c) {
        const double p = a + b;
        const Vec3 P = gaussian_product_center(a, fi.center, b, fj.center);
        const double s = c * std::pow(constants::pi / p, 1.5) * std::exp(-a * b / p * r2);
        for (int cidx = 0; cidx < 3; ++cidx)
          d[static_cast<std::size_t>(cidx)] += P[static_cast<std::size_t>(cidx)] * s;
      });
      for (int cidx = 0; cidx < 3; ++cidx) {
        D[static_cast<std::size_t>(cidx)](i, j) = d[static_cast<std::size_t>(cidx)];
        D[static_cast<std::size_t>(cidx)](j, i) = d[static_cast<std::size_t>(cidx)];
      }
    }
  return D;
}

EriTensor eri_tensor(const BasisSet& basis) {
  const int n = basis.size();
  EriTensor eri(n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= p; ++r)
        for (int s = 0; s <= r; ++s) {
          if (p * (p + 1) / 2 + q < r * (r + 1) / 2 + s) continue;
          const auto& fp = basis.functions[static_cast<std::size_t>(p)];
          const auto& fq = basis.functions[static_cast<std::size_t>(q)];
          const auto& fr = basis.functions[static_cast<std::size_t>(r)];
          const auto& fs = basis.functions[static_cast<std::size_t>(s)];
          const double r2_pq = dist2(fp.center, fq.center);
          const double r2_rs = dist2(fr.center, fs.center);
          double value = 0.0;
          for_primitive_pairs(fp, fq, [&](double a, double b, double cab) {
            const double zp = a + b;
            const Vec3 P = gaussian_product_center(a, fp.center, b, fq.center);
            const double eab = std::exp(-a * b / zp * r2_pq);
            for_primitive_pairs(fr, fs, [&](double c, double d, double ccd) {
              const double zq = c + d;
              const Vec3 Q = gaussian_product_center(c, fr.center, d, fs.center);
              const double ecd = std::exp(-c * d / zq * r2_rs);
              const double rho = zp * zq / (zp + zq);
              value += cab * ccd * 2.0 * std::pow(constants::pi, 2.5) /
                       (zp * zq * std::sqrt(zp + zq)) * eab * ecd *
                       boys_f0(rho * dist2(P, Q));
            });
          });
          eri.set(p, q, r, s, value);
        }
  return eri;
}

EriTensor transform_eri(const EriTensor& ao, const Eigen::MatrixXd& coeffs) {
  const int n = ao.n();
  const int m = static_cast<int>(coeffs.cols());
  require(static_cast<int>(coeffs.rows()) == n, ErrorKind::dimension,
          "transform_eri: coefficient rows must match AO dimension");

  // Four quarter transforms through dense intermediates; fine at this scale.
  using T4 = std::vector<double>;
  const auto idx = [](int n1, int n2, int n3, int n4, int a, int b, int c, int d) {
    return ((static_cast<std::size_t>(a) * n2 + b) * n3 + c) * n4 + d;
  };
  T4 t0(static_cast<std::size_t>(n) * n * n * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) t0[idx(n, n, n, n, p, q, r, s)] = ao(p, q, r, s);

  T4 t1(static_cast<std::size_t>(m) * n * n * n, 0.0);
  for (int i = 0; i < m; ++i)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          double acc = 0.0;
          for (int p = 0; p < n; ++p) acc += coeffs(p, i) * t0[idx(n, n, n, n, p, q, r, s)];
          t1[idx(m, n, n, n, i, q, r, s)] = acc;
        }
  T4 t2(static_cast<std::size_t>(m) * m * n * n, 0.0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          double acc = 0.0;
          for (int q = 0; q < n; ++q) acc += coeffs(q, j) * t1[idx(m, n, n, n, i, q, r, s)];
          t2[idx(m, m, n, n, i, j, r, s)] = acc;
        }
  T4 t3(static_cast<std::size_t>(m) * m * m * n, 0.0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int s = 0; s < n; ++s) {
          double acc = 0.0;
          for (int r = 0; r < n; ++r) acc += coeffs(r, k) * t2[idx(m, m, n, n, i, j, r, s)];
          t3[idx(m, m, m, n, i, j, k, s)] = acc;
        }
  EriTensor mo(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k <= i; ++k)
        for (int l = 0; l <= k; ++l) {
          if (i * (i + 1) / 2 + j < k * (k + 1) / 2 + l) continue;
          double acc = 0.0;
          for (int s = 0; s < n; ++s) acc += coeffs(s, l) * t3[idx(m, m, m, n, i, j, k, s)];
          mo.set(i, j, k, l, acc);
        }
  return mo;
}

}  // namespace qpdft::scf
