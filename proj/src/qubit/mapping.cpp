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

#include "qubit/mapping.hpp"

#include <bit>

#include "common.hpp"

namespace qpdft::qubit {
namespace {

/// Conjugate through the CNOT prefix-parity network (occupation -> parity
/// basis permutation): O' = U O U^dag with U = CNOT(n-2 -> n-1) ... CNOT(0 -> 1).
void to_parity_basis(PauliSum& sum, int n_modes) {
  for (int q = 0; q + 1 < n_modes; ++q) sum.conjugate_cnot(q, q + 1);
}

PauliSum finalize(PauliSum jw, const QubitMapping& mapping) {
  if (mapping.scheme == Scheme::parity) {
    to_parity_basis(jw, mapping.n_modes());
    if (mapping.tapered) return taper(jw, mapping.n_spatial, mapping.sector());
  }
  return jw;
}

/// Jordan-Wigner ladder operator on the full (untapered) register.
PauliSum jw_ladder(int mode, bool dagger, int n_modes) {
  require(mode >= 0 && mode < n_modes, ErrorKind::dimension, "ladder mode out of range");
  PauliSum sum(n_modes);
  const std::uint64_t bit = 1ull << mode;
  const std::uint64_t tail = bit - 1;  // Z string on modes below
  // a^dag = (X - iY)/2 (x) Z tail; a = (X + iY)/2 (x) Z tail.
  sum.add(PauliString{n_modes, bit, tail}, 0.5);
  sum.add(PauliString{n_modes, bit, tail | bit}, std::complex<double>(0.0, dagger ? -0.5 : 0.5));
  return sum;
}

int spin_of_mode(int mode, int m) { return mode < m ? 0 : 1; }

}  // namespace

SectorLabel QubitMapping::sector() const {
  SectorLabel label;
  label.alpha_parity = (n_alpha % 2 == 0) ? +1 : -1;
  label.total_parity = ((n_alpha + n_beta) % 2 == 0) ? +1 : -1;
  return label;
}

QubitMapping make_mapping(Scheme scheme, int n_spatial, int n_alpha, int n_beta, bool tapered) {
  require(n_spatial >= 1 && n_spatial <= 30, ErrorKind::invalid_spec,
          "mapping needs 1..30 spatial orbitals");
  require(n_alpha >= 0 && n_beta >= 0 && n_alpha <= n_spatial && n_beta <= n_spatial,
          ErrorKind::invalid_spec, "electron counts incompatible with orbital count");
  require(!tapered || scheme == Scheme::parity, ErrorKind::invalid_spec,
          "tapering requires the parity scheme");
  require(!tapered || n_spatial >= 2, ErrorKind::invalid_spec,
          "tapering needs at least two spatial orbitals");
  return QubitMapping{scheme, n_spatial, n_alpha, n_beta, tapered};
}

PauliSum map_hamiltonian(const scf::ActiveHamiltonian& h, const QubitMapping& mapping) {
  require(h.norb == mapping.n_spatial, ErrorKind::dimension,
          "Hamiltonian orbital count does not match the mapping");
  const int m = h.norb;
  const int n = 2 * m;

  PauliSum sum(n);
  sum.add(PauliString{n, 0, 0}, h.core_energy);

  // Cache ladder operators; each appears in many products.
  std::vector<PauliSum> create, destroy;
  create.reserve(n);
  destroy.reserve(n);
  for (int mode = 0; mode < n; ++mode) {
    create.push_back(jw_ladder(mode, true, n));
    destroy.push_back(jw_ladder(mode, false, n));
  }

  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      const double hpq = h.h(p, q);
      if (std::abs(hpq) <= PauliSum::prune_threshold) continue;
      for (int sigma = 0; sigma < 2; ++sigma) {
        PauliSum term = create[p + sigma * m] * destroy[q + sigma * m];
        term.scale(hpq);
        sum.add(term);
      }
    }

  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s) {
          const double v = h.eri(p, q, r, s);
          if (std::abs(v) <= PauliSum::prune_threshold) continue;
          for (int sigma = 0; sigma < 2; ++sigma)
            for (int tau = 0; tau < 2; ++tau) {
              PauliSum term = create[p + sigma * m] * create[r + tau * m] *
                              destroy[s + tau * m] * destroy[q + sigma * m];
              term.scale(0.5 * v);
              sum.add(term);
            }
        }

  sum.chop_imaginary(1e-9);
  return finalize(std::move(sum), mapping);
}

PauliSum map_ladder(int mode, bool dagger, const QubitMapping& mapping) {
  PauliSum sum = jw_ladder(mode, dagger, mapping.n_modes());
  if (mapping.scheme == Scheme::parity) to_parity_basis(sum, mapping.n_modes());
  require(!mapping.tapered, ErrorKind::invalid_spec,
          "a single ladder operator changes the symmetry sector and cannot be tapered");
  return sum;
}

PauliSum map_one_body(int p, int q, const QubitMapping& mapping) {
  const int n = mapping.n_modes();
  require(p >= 0 && q >= 0 && p < n && q < n, ErrorKind::dimension,
          "one-body mode out of range");
  PauliSum sum = jw_ladder(p, true, n) * jw_ladder(q, false, n);
  return finalize(std::move(sum), mapping);
}

PauliSum map_epq(int p, int q, const QubitMapping& mapping) {
  const int m = mapping.n_spatial;
  require(p >= 0 && q >= 0 && p < m && q < m, ErrorKind::dimension,
          "spatial orbital out of range");
  const int n = mapping.n_modes();
  PauliSum sum(n);
  for (int sigma = 0; sigma < 2; ++sigma)
    sum.add(jw_ladder(p + sigma * m, true, n) * jw_ladder(q + sigma * m, false, n));
  return finalize(std::move(sum), mapping);
}

PauliSum map_dpqrs(int p, int q, int r, int s, const QubitMapping& mapping) {
  const int m = mapping.n_spatial;
  require(p >= 0 && q >= 0 && r >= 0 && s >= 0 && p < m && q < m && r < m && s < m,
          ErrorKind::dimension, "spatial orbital out of range");
  const int n = mapping.n_modes();
  PauliSum sum(n);
  for (int sigma = 0; sigma < 2; ++sigma)
    for (int tau = 0; tau < 2; ++tau) {
      PauliSum term = jw_ladder(p + sigma * m, true, n) * jw_ladder(r + tau * m, true, n) *
                      jw_ladder(s + tau * m, false, n) * jw_ladder(q + sigma * m, false, n);
      sum.add(term);
    }
  return finalize(std::move(sum), mapping);
}

PauliSum map_single_excitation(int p, int q, const QubitMapping& mapping) {
  const int n = mapping.n_modes();
  const int m = mapping.n_spatial;
  require(p >= 0 && q >= 0 && p < n && q < n, ErrorKind::dimension,
          "excitation mode out of range");
  require(spin_of_mode(p, m) == spin_of_mode(q, m), ErrorKind::symmetry_violation,
          "spin-flip excitation leaves the (n_alpha, n_beta) sector");
  PauliSum t = jw_ladder(p, true, n) * jw_ladder(q, false, n);
  PauliSum tdag = jw_ladder(q, true, n) * jw_ladder(p, false, n);
  tdag.scale(-1.0);
  t.add(tdag);
  t.scale(std::complex<double>(0.0, 1.0));  // G = i (T - T^dag), Hermitian
  t.chop_imaginary(1e-10);
  return finalize(std::move(t), mapping);
}

PauliSum map_double_excitation(int p, int q, int r, int s, const QubitMapping& mapping) {
  const int n = mapping.n_modes();
  const int m = mapping.n_spatial;
  require(p >= 0 && q >= 0 && r >= 0 && s >= 0 && p < n && q < n && r < n && s < n,
          ErrorKind::dimension, "excitation mode out of range");
  // Created and destroyed spin multisets must match to stay in the sector.
  const int created_beta = spin_of_mode(p, m) + spin_of_mode(q, m);
  const int destroyed_beta = spin_of_mode(r, m) + spin_of_mode(s, m);
  require(created_beta == destroyed_beta, ErrorKind::symmetry_violation,
          "double excitation changes (n_alpha, n_beta)");
  PauliSum t = jw_ladder(p, true, n) * jw_ladder(q, true, n) * jw_ladder(s, false, n) *
               jw_ladder(r, false, n);
  PauliSum tdag = jw_ladder(r, true, n) * jw_ladder(s, true, n) * jw_ladder(q, false, n) *
                  jw_ladder(p, false, n);
  tdag.scale(-1.0);
  t.add(tdag);
  t.scale(std::complex<double>(0.0, 1.0));
  t.chop_imaginary(1e-10);
  return finalize(std::move(t), mapping);
}

PauliSum taper(const PauliSum& h, int n_spatial, SectorLabel sector) {
  const int n = 2 * n_spatial;
  require(h.n_qubits() == n, ErrorKind::dimension,
          "taper expects the full 2m-qubit parity-mapped operator");
  const int qa = n_spatial - 1;  // alpha-parity qubit
  const int qt = n - 1;          // total-parity qubit
  const std::uint64_t abit = 1ull << qa;
  const std::uint64_t tbit = 1ull << qt;
  const std::uint64_t low = abit - 1;  // qubits below qa keep their index

  PauliSum out(n - 2);
  for (const auto& [key, c] : h.terms()) {
    const auto [x, z] = key;
    require((x & (abit | tbit)) == 0, ErrorKind::symmetry_violation,
            "operator acts with X/Y on a parity symmetry qubit");
    std::complex<double> coeff = c;
    if (z & abit) coeff *= static_cast<double>(sector.alpha_parity);
    if (z & tbit) coeff *= static_cast<double>(sector.total_parity);
    // Compact the register: bits 0..m-2 keep their index, bits m..2m-2 shift
    // down one; bits m-1 and 2m-1 vanish.
    const auto compact = [&](std::uint64_t mask) {
      const std::uint64_t high = (mask >> n_spatial) & low;
      return (mask & low) | (high << (n_spatial - 1));
    };
    out.add(PauliString{n - 2, compact(x), compact(z)}, coeff);
  }
  out.prune();
  return out;
}

std::uint64_t occupation_to_parity(std::uint64_t occ, int n_modes) {
  std::uint64_t par = 0;
  std::uint64_t running = 0;
  for (int k = 0; k < n_modes; ++k) {
    running ^= (occ >> k) & 1ull;
    par |= running << k;
  }
  return par;
}

std::uint64_t parity_to_occupation(std::uint64_t par, int n_modes) {
  std::uint64_t occ = 0;
  std::uint64_t prev = 0;
  for (int k = 0; k < n_modes; ++k) {
    const std::uint64_t pk = (par >> k) & 1ull;
    occ |= (pk ^ prev) << k;
    prev = pk;
  }
  return occ;
}

std::uint64_t encode_determinant(std::uint64_t alpha_mask, std::uint64_t beta_mask,
                                 const QubitMapping& mapping) {
  const int m = mapping.n_spatial;
  require((alpha_mask >> m) == 0 && (beta_mask >> m) == 0, ErrorKind::invalid_spec,
          "occupation mask exceeds the orbital count");
  const std::uint64_t occ = alpha_mask | (beta_mask << m);
  if (mapping.scheme == Scheme::jordan_wigner) return occ;
  const std::uint64_t par = occupation_to_parity(occ, mapping.n_modes());
  if (!mapping.tapered) return par;
  require(std::popcount(alpha_mask) == mapping.n_alpha &&
              std::popcount(beta_mask) == mapping.n_beta,
          ErrorKind::invalid_spec, "determinant outside the tapered sector");
  // Remove the two pinned parity bits (positions m-1 and 2m-1).
  const std::uint64_t low = (1ull << (m - 1)) - 1;
  const std::uint64_t mid = ((par >> m) & ((1ull << (m - 1)) - 1)) << (m - 1);
  return (par & low) | mid;
}

namespace {

/// Occupation bitmask encoded by basis state `b` of the mapping's register.
std::uint64_t decode_basis_index(std::uint64_t b, const QubitMapping& mapping) {
  if (mapping.scheme == Scheme::jordan_wigner) return b;
  const int n = mapping.n_modes();
  if (!mapping.tapered) return parity_to_occupation(b, n);
  const int m = mapping.n_spatial;
  const std::uint64_t low = (1ull << (m - 1)) - 1;
  const std::uint64_t pa = static_cast<std::uint64_t>(mapping.n_alpha % 2);
  const std::uint64_t pt = static_cast<std::uint64_t>((mapping.n_alpha + mapping.n_beta) % 2);
  std::uint64_t par = (b & low) | (pa << (m - 1));
  par |= ((b >> (m - 1)) & low) << m;
  par |= pt << (n - 1);
  return parity_to_occupation(par, n);
}

}  // namespace

std::vector<std::complex<double>> decode_to_occupation(
    const std::vector<std::complex<double>>& state, const QubitMapping& mapping) {
  const int nq = mapping.n_qubits();
  require(state.size() == (1ull << nq), ErrorKind::dimension,
          "statevector size does not match the mapping register");
  std::vector<std::complex<double>> occ_state(1ull << mapping.n_modes(), {0.0, 0.0});
  for (std::uint64_t b = 0; b < state.size(); ++b) {
    if (state[b] == std::complex<double>(0.0, 0.0)) continue;
    occ_state[decode_basis_index(b, mapping)] = state[b];
  }
  return occ_state;
}

std::vector<std::uint64_t> sector_basis_states(const QubitMapping& mapping) {
  const int m = mapping.n_spatial;
  std::vector<std::uint64_t> out;
  for (std::uint64_t b = 0; b < (1ull << mapping.n_qubits()); ++b) {
    const std::uint64_t occ = decode_basis_index(b, mapping);
    const auto alpha = occ & ((1ull << m) - 1);
    const auto beta = occ >> m;
    if (std::popcount(alpha) == mapping.n_alpha && std::popcount(beta) == mapping.n_beta)
      out.push_back(b);
  }
  return out;
}

}  // namespace qpdft::qubit
