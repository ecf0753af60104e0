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

#include <complex>
#include <cstdint>
#include <vector>

#include "qubit/pauli.hpp"
#include "scf/active_space.hpp"

namespace qpdft::qubit {

// ---------------------------------------------------------------------------
// Fermion-to-qubit translation.
//
// Spin orbitals are blocked: mode p (0 <= p < m) is spatial orbital p with
// alpha spin, mode m+p the same orbital with beta spin.  Jordan-Wigner
// assigns mode p to qubit p.  The parity scheme stores cumulative occupation
// parities instead; it is realized by conjugating the Jordan-Wigner image
// through the CNOT prefix network 0->1, 1->2, ..., so qubit m-1 carries the
// alpha-electron parity and qubit 2m-1 the total parity.  Fixing those two
// parities to their sector values removes both qubits (tapering).
// ---------------------------------------------------------------------------

enum class Scheme { jordan_wigner, parity };

/// Symmetry-sector eigenvalues of the two parity qubits.
struct SectorLabel {
  int alpha_parity = +1;  // (-1)^{n_alpha}
  int total_parity = +1;  // (-1)^{n_alpha + n_beta}
};

struct QubitMapping {
  Scheme scheme = Scheme::jordan_wigner;
  int n_spatial = 0;
  int n_alpha = 0;
  int n_beta = 0;
  bool tapered = false;  // parity scheme only

  int n_modes() const { return 2 * n_spatial; }
  int n_qubits() const { return tapered ? n_modes() - 2 : n_modes(); }
  SectorLabel sector() const;
};

QubitMapping make_mapping(Scheme scheme, int n_spatial, int n_alpha, int n_beta, bool tapered);

// --- Operator translation ---------------------------------------------------

/// Full second-quantized Hamiltonian; Hermitian with real coefficients.
PauliSum map_hamiltonian(const scf::ActiveHamiltonian& h, const QubitMapping& mapping);

/// Single ladder operator a_p^dagger (dagger=true) or a_p over spin-orbital
/// modes, translated but NOT tapered (non-Hermitian).
PauliSum map_ladder(int mode, bool dagger, const QubitMapping& mapping);

/// a_p^dagger a_q over spin-orbital modes (translated and tapered).
PauliSum map_one_body(int p, int q, const QubitMapping& mapping);

/// Spin-summed spatial-orbital operator E_pq = sum_s a^dag_{ps} a_{qs}.
PauliSum map_epq(int p, int q, const QubitMapping& mapping);

/// Spin-summed two-body operator sum_{st} a^dag_{ps} a^dag_{rt} a_{st} a_{qs}
/// whose expectation is the 2-RDM element Gamma_pqrs.
PauliSum map_dpqrs(int p, int q, int r, int s, const QubitMapping& mapping);

/// Hermitian generator G = i(a^dag_p a_q - a^dag_q a_p) of the single
/// excitation (spin-orbital modes); exp(theta (T - T^dag)) = exp(-i theta G).
PauliSum map_single_excitation(int p, int q, const QubitMapping& mapping);

/// Hermitian generator of the double excitation r,s -> p,q:
/// G = i(a^dag_p a^dag_q a_s a_r - h.c.).
PauliSum map_double_excitation(int p, int q, int r, int s, const QubitMapping& mapping);

/// Drop the two parity qubits (positions m-1 and 2m-1), substituting the
/// sector eigenvalues.  Strings carrying X or Y there raise
/// Error(symmetry_violation).
PauliSum taper(const PauliSum& h, int n_spatial, SectorLabel sector);

// --- Basis-state bookkeeping ------------------------------------------------

/// Cumulative-parity transform p_k = n_0 xor ... xor n_k and its inverse.
std::uint64_t occupation_to_parity(std::uint64_t occ, int n_modes);
std::uint64_t parity_to_occupation(std::uint64_t par, int n_modes);

/// Basis index on the mapping's register for the determinant with the given
/// alpha/beta spatial occupation masks.  Raises Error(invalid_spec) when the
/// masks contradict the mapping's sector (tapered case).
std::uint64_t encode_determinant(std::uint64_t alpha_mask, std::uint64_t beta_mask,
                                 const QubitMapping& mapping);

/// Amplitudes re-expressed over occupation-number basis states of the full
/// 2m-qubit register (bit p of the index = occupation of mode p).  For
/// tapered mappings the two parity bits are reinserted from the sector.
std::vector<std::complex<double>> decode_to_occupation(
    const std::vector<std::complex<double>>& state, const QubitMapping& mapping);

/// All basis states of the mapping's register whose decoded occupations have
/// exactly (n_alpha, n_beta) electrons — ascending order.  On the tapered
/// 4-qubit registers used here this is the 9-state accessible manifold.
std::vector<std::uint64_t> sector_basis_states(const QubitMapping& mapping);

}  // namespace qpdft::qubit
