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

#include <string>
#include <vector>

namespace qpdft::sim {

enum class GateKind { x, h, ry, rz, cnot, cz, cry };

const char* gate_name(GateKind kind);
bool gate_is_parameterized(GateKind kind);  // ry, rz, cry

// ---------------------------------------------------------------------------
// One gate.  q0 is the single target, or the control of a two-qubit gate
// whose target is q1.  Parameterized gates resolve their angle as
//   angle = offset + scale * params[slot]      (slot >= 0)
//   angle = offset                             (slot < 0, fixed gate)
// which lets compiled Pauli exponentials share one variational parameter
// across many rotations with per-gate scales.
// ---------------------------------------------------------------------------
struct Gate {
  GateKind kind = GateKind::x;
  int q0 = 0;
  int q1 = -1;
  int slot = -1;
  double scale = 1.0;
  double offset = 0.0;

  bool two_qubit() const { return kind == GateKind::cnot || kind == GateKind::cz || kind == GateKind::cry; }
  double angle(const std::vector<double>& params) const;
};

struct Circuit {
  int n_qubits = 0;
  int n_params = 0;
  std::vector<Gate> gates;
  // Leading gates excluded from depth accounting (reference-state X prep).
  int prefix_size = 0;

  Circuit() = default;
  Circuit(int nq, int np) : n_qubits(nq), n_params(np) {}

  void x(int q);
  void h(int q);
  void ry(int q, int slot, double scale = 1.0, double offset = 0.0);
  void ry_fixed(int q, double angle);
  void rz(int q, int slot, double scale = 1.0, double offset = 0.0);
  void rz_fixed(int q, double angle);
  void cnot(int control, int target);
  void cz(int a, int b);
  void cry(int control, int target, int slot, double scale = 1.0, double offset = 0.0);

  /// Longest dependency chain over gates past the prefix; every gate
  /// occupies one layer on each qubit it touches (logical depth).
  int depth() const;

  /// Ordered text lines `gate qubit(s) [angle spec]`, one per gate.
  std::string dump() const;
};

/// Concatenate: `tail`'s gates appended to `head` (registers must match;
/// parameter slots are shared, n_params = max of the two).
Circuit concatenate(const Circuit& head, const Circuit& tail);

}  // namespace qpdft::sim
