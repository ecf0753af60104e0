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

#include <cstdint>
#include <string>
#include <vector>

#include "qubit/mapping.hpp"
#include "sim/circuit.hpp"

namespace qpdft::ansatz {

// ---------------------------------------------------------------------------
// Four ansatz families.  The UCC families are first-order Trotterized
// products of excitation exponentials; the HEA families are fixed
// shallow-depth Ry/CRy layouts confined to the 9-state sector manifold of
// the tapered 4-qubit register.
// ---------------------------------------------------------------------------
enum class Family { uccsd, rouccsd, chea, ohea };

Family parse_family(const std::string& name);
const char* family_name(Family family);

/// One excitation T = prod a^dag_{create} prod a_{destroy} over spin-orbital
/// modes (alpha block first); the ansatz factor is exp(theta (T - T^dag)).
struct Excitation {
  std::vector<int> create;
  std::vector<int> destroy;

  bool is_single() const { return create.size() == 1; }
};

struct Ansatz {
  Family family = Family::uccsd;
  qubit::QubitMapping mapping;
  sim::Circuit circuit;
  /// Excitation list driving the parameter slots (empty for HEA families).
  std::vector<Excitation> excitations;
  /// Computational basis states the ansatz may populate.
  std::vector<std::uint64_t> manifold;
};

/// X-gate prefix preparing the mapped image of the Aufbau determinant.
sim::Circuit reference_state(const qubit::QubitMapping& mapping);

/// Singles then doubles, lexicographic within each class over spin-orbital
/// mode indices, restricted to sector-preserving spin combinations.
std::vector<Excitation> enumerate_excitations(Family family, const qubit::QubitMapping& mapping);

/// Trotterized product with each Pauli exponential compiled to basis-change
/// gates, a CNOT parity ladder, and a parameter-bound Rz.
sim::Circuit compile_excitations_gadget(const std::vector<Excitation>& excitations,
                                        const qubit::QubitMapping& mapping);

/// Each excitation exponential realized as a controlled-Ry two-level rotation
/// between the computational basis states it connects.  Agrees with the
/// gadget compilation on every state of the symmetry sector (which is all a
/// sector-preserving circuit can ever reach) at a fraction of the depth.
sim::Circuit compile_excitations_sector(const std::vector<Excitation>& excitations,
                                        const qubit::QubitMapping& mapping);

/// Assemble the full ansatz (reference preparation plus parameterized body).
Ansatz build_ansatz(Family family, const qubit::QubitMapping& mapping);

}  // namespace qpdft::ansatz
