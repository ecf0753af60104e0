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

#include "sim/circuit.hpp"

#include <algorithm>
#include <sstream>

#include "common.hpp"

namespace qpdft::sim {

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::x: return "x";
    case GateKind::h: return "h";
    case GateKind::ry: return "ry";
    case GateKind::rz: return "rz";
    case GateKind::cnot: return "cnot";
    case GateKind::cz: return "cz";
    case GateKind::cry: return "cry";
  }
  return "?";
}

bool gate_is_parameterized(GateKind kind) {
  return kind == GateKind::ry || kind == GateKind::rz || kind == GateKind::cry;
}

double Gate::angle(const std::vector<double>& params) const {
  if (slot < 0) return offset;
  require(slot < static_cast<int>(params.size()), ErrorKind::dimension,
          "parameter vector shorter than circuit slots");
  return offset + scale * params[static_cast<std::size_t>(slot)];
}

namespace {

void check_qubit(const Circuit& c, int q) {
  require(q >= 0 && q < c.n_qubits, ErrorKind::dimension, "gate qubit out of range");
}

void track_slot(Circuit& c, int slot) {
  require(slot >= 0, ErrorKind::dimension, "parameter slot must be nonnegative");
  c.n_params = std::max(c.n_params, slot + 1);
}

}  // namespace

void Circuit::x(int q) {
  check_qubit(*this, q);
  gates.push_back({GateKind::x, q, -1, -1, 1.0, 0.0});
}

void Circuit::h(int q) {
  check_qubit(*this, q);
  gates.push_back({GateKind::h, q, -1, -1, 1.0, 0.0});
}

void Circuit::ry(int q, int slot, double scale, double offset) {
  check_qubit(*this, q);
  track_slot(*this, slot);
  gates.push_back({GateKind::ry, q, -1, slot, scale, offset});
}

void Circuit::ry_fixed(int q, double angle) {
  check_qubit(*this, q);
  gates.push_back({GateKind::ry, q, -1, -1, 1.0, angle});
}

void Circuit::rz(int q, int slot, double scale, double offset) {
  check_qubit(*this, q);
  track_slot(*this, slot);
  gates.push_back({GateKind::rz, q, -1, slot, scale, offset});
}

void Circuit::rz_fixed(int q, double angle) {
  check_qubit(*this, q);
  gates.push_back({GateKind::rz, q, -1, -1, 1.0, angle});
}

void Circuit::cnot(int control, int target) {
  check_qubit(*this, control);
  check_qubit(*this, target);
  require(control != target, ErrorKind::dimension, "control equals target");
  gates.push_back({GateKind::cnot, control, target, -1, 1.0, 0.0});
}

void Circuit::cz(int a, int b) {
  check_qubit(*this, a);
  check_qubit(*this, b);
  require(a != b, ErrorKind::dimension, "control equals target");
  gates.push_back({GateKind::cz, a, b, -1, 1.0, 0.0});
}

void Circuit::cry(int control, int target, int slot, double scale, double offset) {
  check_qubit(*this, control);
  check_qubit(*this, target);
  require(control != target, ErrorKind::dimension, "control equals target");
  track_slot(*this, slot);
  gates.push_back({GateKind::cry, control, target, slot, scale, offset});
}

int Circuit::depth() const {
  std::vector<int> level(static_cast<std::size_t>(n_qubits), 0);
  for (std::size_t g = static_cast<std::size_t>(prefix_size); g < gates.size(); ++g) {
    const Gate& gate = gates[g];
    int layer = level[static_cast<std::size_t>(gate.q0)];
    if (gate.two_qubit()) layer = std::max(layer, level[static_cast<std::size_t>(gate.q1)]);
    ++layer;
    level[static_cast<std::size_t>(gate.q0)] = layer;
    if (gate.two_qubit()) level[static_cast<std::size_t>(gate.q1)] = layer;
  }
  return level.empty() ? 0 : *std::max_element(level.begin(), level.end());
}

std::string Circuit::dump() const {
  std::ostringstream out;
  for (const Gate& gate : gates) {
    out << gate_name(gate.kind) << ' ' << gate.q0;
    if (gate.two_qubit()) out << ' ' << gate.q1;
    if (gate_is_parameterized(gate.kind)) {
      out << ' ';
      if (gate.slot < 0) {
        out << format_full(gate.offset);
      } else {
        out << 'p' << gate.slot;
        if (gate.scale != 1.0) out << '*' << format_full(gate.scale);
        if (gate.offset != 0.0) out << '+' << format_full(gate.offset);
      }
    }
    out << '\n';
  }
  return out.str();
}

Circuit concatenate(const Circuit& head, const Circuit& tail) {
  require(head.n_qubits == tail.n_qubits, ErrorKind::dimension,
          "cannot concatenate circuits over different registers");
  Circuit out = head;
  out.n_params = std::max(head.n_params, tail.n_params);
  out.gates.insert(out.gates.end(), tail.gates.begin(), tail.gates.end());
  return out;
}

}  // namespace qpdft::sim
