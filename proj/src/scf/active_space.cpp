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

#include "scf/active_space.hpp"

#include "common.hpp"

namespace qpdft::scf {

ActiveHamiltonian make_active_space_orbitals(const IntegralSet& integrals,
                                             const Eigen::MatrixXd& orbitals, int n_electrons,
                                             const ActiveWindow& window) {
  const int n_mo = static_cast<int>(orbitals.cols());
  require(window.n_active_orbitals > 0 && window.n_active_electrons >= 0,
          ErrorKind::invalid_window, "active window must have positive extent");
  require(window.n_active_electrons <= 2 * window.n_active_orbitals, ErrorKind::invalid_window,
          "active electrons exceed window capacity");
  const int remaining = n_electrons - window.n_active_electrons;
  require(remaining >= 0 && remaining % 2 == 0, ErrorKind::invalid_window,
          "inactive electron count must be even and non-negative");
  const int n_core = remaining / 2;
  require(n_core + window.n_active_orbitals <= n_mo, ErrorKind::invalid_window,
          "active window exceeds the orbital space");
  require((window.n_active_electrons + window.spin_twice) % 2 == 0 &&
              window.spin_twice >= 0 &&
              window.spin_twice <= window.n_active_electrons,
          ErrorKind::invalid_window, "spin projection inconsistent with electron count");

  const Eigen::MatrixXd window_orbitals = orbitals.middleCols(0, n_core + window.n_active_orbitals);
  const Eigen::MatrixXd h_mo =
      window_orbitals.transpose() * integrals.core_hamiltonian * window_orbitals;
  const EriTensor eri_mo = transform_eri(integrals.eri, window_orbitals);

  ActiveHamiltonian ham;
  ham.norb = window.n_active_orbitals;
  ham.n_alpha = (window.n_active_electrons + window.spin_twice) / 2;
  ham.n_beta = (window.n_active_electrons - window.spin_twice) / 2;
  ham.h = Eigen::MatrixXd::Zero(ham.norb, ham.norb);
  ham.eri = EriTensor(ham.norb);

  // Inactive (doubly occupied) contributions.
  double core = integrals.nuclear_repulsion;
  for (int i = 0; i < n_core; ++i) {
    core += 2.0 * h_mo(i, i);
    for (int j = 0; j < n_core; ++j)
      core += 2.0 * eri_mo(i, i, j, j) - eri_mo(i, j, i, j);
  }
  ham.core_energy = core;

  for (int t = 0; t < ham.norb; ++t)
    for (int u = 0; u <= t; ++u) {
      const int tt = n_core + t, uu = n_core + u;
      double h_eff = h_mo(tt, uu);
      for (int i = 0; i < n_core; ++i)
        h_eff += 2.0 * eri_mo(tt, uu, i, i) - eri_mo(tt, i, uu, i);
      ham.h(t, u) = ham.h(u, t) = h_eff;
    }

  for (int t = 0; t < ham.norb; ++t)
    for (int u = 0; u <= t; ++u)
      for (int v = 0; v <= t; ++v)
        for (int w = 0; w <= v; ++w) {
          if (t * (t + 1) / 2 + u < v * (v + 1) / 2 + w) continue;
          ham.eri.set(t, u, v, w, eri_mo(n_core + t, n_core + u, n_core + v, n_core + w));
        }
  return ham;
}

ActiveHamiltonian make_active_space(const IntegralSet& integrals, const RhfResult& scf,
                                    const ActiveWindow& window) {
  require(scf.converged, ErrorKind::invalid_window,
          "active space requires a converged SCF reference");
  return make_active_space_orbitals(integrals, scf.coefficients, scf.n_electrons, window);
}

ActiveHamiltonian from_fcidump(const io::Fcidump& dump) {
  ActiveHamiltonian ham;
  ham.norb = dump.norb;
  require((dump.nelec + dump.ms2) % 2 == 0 && dump.ms2 >= 0 && dump.ms2 <= dump.nelec,
          ErrorKind::invalid_window, "fcidump NELEC/MS2 combination is inconsistent");
  ham.n_alpha = (dump.nelec + dump.ms2) / 2;
  ham.n_beta = (dump.nelec - dump.ms2) / 2;
  ham.core_energy = dump.core_energy;
  ham.h = Eigen::MatrixXd::Zero(ham.norb, ham.norb);
  for (int p = 0; p < ham.norb; ++p)
    for (int q = 0; q < ham.norb; ++q) ham.h(p, q) = dump.one_body(p, q);
  ham.eri = EriTensor(ham.norb);
  for (int p = 0; p < ham.norb; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= p; ++r)
        for (int s = 0; s <= r; ++s) {
          if (p * (p + 1) / 2 + q < r * (r + 1) / 2 + s) continue;
          ham.eri.set(p, q, r, s, dump.two_body(p, q, r, s));
        }
  return ham;
}

io::Fcidump to_fcidump(const ActiveHamiltonian& hamiltonian) {
  io::Fcidump dump;
  dump.norb = hamiltonian.norb;
  dump.nelec = hamiltonian.n_electrons();
  dump.ms2 = hamiltonian.n_alpha - hamiltonian.n_beta;
  dump.orbsym.assign(static_cast<std::size_t>(dump.norb), 1);
  dump.core_energy = hamiltonian.core_energy;
  dump.h.assign(static_cast<std::size_t>(dump.norb) * dump.norb, 0.0);
  dump.orbital_energies.assign(static_cast<std::size_t>(dump.norb), 0.0);
  for (int p = 0; p < dump.norb; ++p)
    for (int q = 0; q <= p; ++q) dump.set_one_body(p, q, hamiltonian.h(p, q));
  for (int p = 0; p < dump.norb; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= p; ++r)
        for (int s = 0; s <= r; ++s) {
          if (p * (p + 1) / 2 + q < r * (r + 1) / 2 + s) continue;
          const double v = hamiltonian.eri(p, q, r, s);
          if (v != 0.0) dump.set_two_body(p, q, r, s, v);
        }
  return dump;
}

}  // namespace qpdft::scf
