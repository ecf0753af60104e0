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
#include <map>
#include <vector>

#include "common.hpp"
#include "qubit/pauli.hpp"
#include "sim/circuit.hpp"

namespace qpdft::sim {

/// Dense state over n qubits; basis index bit q = value of qubit q.
using Statevector = std::vector<std::complex<double>>;

/// |0...0> on n qubits.
Statevector zero_state(int n_qubits);

/// Apply one gate in place; `angle` pre-resolved by the caller.
void apply_gate(Statevector& state, const Gate& gate, double angle);

/// Run a circuit from |0...0>.  `gate_shifts` (optional) adds a per-gate
/// angle offset keyed by gate index — the parameter-shift evaluation hook.
Statevector run_circuit(const Circuit& circuit, const std::vector<double>& params,
                        const std::map<std::size_t, double>* gate_shifts = nullptr);

double norm(const Statevector& state);

/// Exact <psi|O|psi> for a Hermitian Pauli sum; raises
/// Error(invalid_observable) when O is not Hermitian, Error(internal) when
/// the imaginary residue exceeds 1e-10.
double expectation(const Statevector& state, const qubit::PauliSum& obs);

/// Shot histogram over full-register bitstrings (size 2^n, entries sum to
/// `shots`), sampled with the replayable counter generator.
std::vector<std::int64_t> sample(const Statevector& state, std::int64_t shots, CounterRng& rng);

/// Estimated expectation of the Z-string `zmask` from a histogram.
double histogram_z_expectation(const std::vector<std::int64_t>& histogram, std::uint64_t zmask);

/// Exact probability vector |amp|^2.
std::vector<double> probabilities(const Statevector& state);

}  // namespace qpdft::sim
