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

#include "sim/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace qpdft::sim {
namespace {

/// Apply a general single-qubit matrix [[a,b],[c,d]] on qubit q.
void apply_1q(Statevector& state, int q, std::complex<double> a, std::complex<double> b,
              std::complex<double> c, std::complex<double> d) {
  const std::uint64_t bit = 1ull << q;
  for (std::uint64_t i = 0; i < state.size(); ++i) {
    if (i & bit) continue;
    const std::complex<double> lo = state[i];
    const std::complex<double> hi = state[i | bit];
    state[i] = a * lo + b * hi;
    state[i | bit] = c * lo + d * hi;
  }
}

/// Apply Ry(angle) on qubit q restricted to basis states where `mask` bits
/// are all set (mask = 0 for the plain gate, control bit for CRy).
void apply_ry_masked(Statevector& state, int q, double angle, std::uint64_t mask) {
  const double cos_half = std::cos(0.5 * angle);
  const double sin_half = std::sin(0.5 * angle);
  const std::uint64_t bit = 1ull << q;
  for (std::uint64_t i = 0; i < state.size(); ++i) {
    if (i & bit) continue;
    if ((i & mask) != mask) continue;
    const std::complex<double> lo = state[i];
    const std::complex<double> hi = state[i | bit];
    state[i] = cos_half * lo - sin_half * hi;
    state[i | bit] = sin_half * lo + cos_half * hi;
  }
}

}  // namespace

Statevector zero_state(int n_qubits) {
  require(n_qubits >= 1 && n_qubits <= 24, ErrorKind::dimension,
          "statevector register must have 1..24 qubits");
  Statevector state(1ull << n_qubits, {0.0, 0.0});
  state[0] = 1.0;
  return state;
}

void apply_gate(Statevector& state, const Gate& gate, double angle) {
  switch (gate.kind) {
    case GateKind::x:
      apply_1q(state, gate.q0, 0.0, 1.0, 1.0, 0.0);
      break;
    case GateKind::h: {
      const double s = 1.0 / std::sqrt(2.0);
      apply_1q(state, gate.q0, s, s, s, -s);
      break;
    }
    case GateKind::ry:
      apply_ry_masked(state, gate.q0, angle, 0);
      break;
    case GateKind::rz: {
      const std::complex<double> lo = std::exp(std::complex<double>(0.0, -0.5 * angle));
      const std::complex<double> hi = std::exp(std::complex<double>(0.0, 0.5 * angle));
      apply_1q(state, gate.q0, lo, 0.0, 0.0, hi);
      break;
    }
    case GateKind::cnot: {
      const std::uint64_t cbit = 1ull << gate.q0;
      const std::uint64_t tbit = 1ull << gate.q1;
      for (std::uint64_t i = 0; i < state.size(); ++i)
        if ((i & cbit) && !(i & tbit)) std::swap(state[i], state[i | tbit]);
      break;
    }
    case GateKind::cz: {
      const std::uint64_t bits = (1ull << gate.q0) | (1ull << gate.q1);
      for (std::uint64_t i = 0; i < state.size(); ++i)
        if ((i & bits) == bits) state[i] = -state[i];
      break;
    }
    case GateKind::cry:
      apply_ry_masked(state, gate.q1, angle, 1ull << gate.q0);
      break;
  }
}

Statevector run_circuit(const Circuit& circuit, const std::vector<double>& params,
                        const std::map<std::size_t, double>* gate_shifts) {
  require(static_cast<int>(params.size()) >= circuit.n_params, ErrorKind::dimension,
          "parameter vector shorter than the circuit's slot count");
  Statevector state = zero_state(circuit.n_qubits);
  for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
    const Gate& gate = circuit.gates[g];
    double angle = gate_is_parameterized(gate.kind) ? gate.angle(params) : 0.0;
    if (gate_shifts != nullptr) {
      const auto it = gate_shifts->find(g);
      if (it != gate_shifts->end()) {
        require(gate_is_parameterized(gate.kind), ErrorKind::dimension,
                "angle shift requested on a non-parameterized gate");
        angle += it->second;
      }
    }
    apply_gate(state, gate, angle);
  }
  return state;
}

double norm(const Statevector& state) {
  std::vector<double> sq(state.size());
  for (std::size_t i = 0; i < state.size(); ++i) sq[i] = std::norm(state[i]);
  return std::sqrt(pairwise_sum(sq));
}

double expectation(const Statevector& state, const qubit::PauliSum& obs) {
  require(1ull << obs.n_qubits() == state.size(), ErrorKind::dimension,
          "observable register does not match the state");
  require(obs.is_hermitian(1e-10), ErrorKind::invalid_observable,
          "expectation requires a Hermitian Pauli sum");
  std::complex<double> total = 0.0;
  for (const auto& [key, coeff] : obs.terms()) {
    const auto [x, z] = key;
    const int y_count = std::popcount(x & z);
    std::complex<double> term = 0.0;
    for (std::uint64_t b = 0; b < state.size(); ++b) {
      if (state[b] == std::complex<double>(0.0, 0.0)) continue;
      std::complex<double> contrib = std::conj(state[b ^ x]) * state[b];
      if (std::popcount(z & b) & 1) contrib = -contrib;
      term += contrib;
    }
    switch (((y_count % 4) + 4) % 4) {
      case 1: term *= std::complex<double>(0.0, 1.0); break;
      case 2: term = -term; break;
      case 3: term *= std::complex<double>(0.0, -1.0); break;
      default: break;
    }
    total += coeff * term;
  }
  require(std::abs(total.imag()) < 1e-10, ErrorKind::internal,
          "Hermitian expectation produced an imaginary residue");
  return total.real();
}

std::vector<std::int64_t> sample(const Statevector& state, std::int64_t shots, CounterRng& rng) {
  require(shots >= 1, ErrorKind::dimension, "sampling requires at least one shot");
  require(state.size() <= (1ull << 16), ErrorKind::size_exceeded,
          "sampling limited to 16-qubit registers");
  std::vector<double> cdf(state.size());
  double running = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    running += std::norm(state[i]);
    cdf[i] = running;
  }
  require(std::abs(running - 1.0) < 1e-9, ErrorKind::internal,
          "sampling from an unnormalized state");
  std::vector<std::int64_t> histogram(state.size(), 0);
  for (std::int64_t s = 0; s < shots; ++s) {
    const double u = rng.next_double() * running;
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    const auto idx = static_cast<std::size_t>(std::min<std::ptrdiff_t>(
        std::distance(cdf.begin(), it), static_cast<std::ptrdiff_t>(cdf.size()) - 1));
    ++histogram[idx];
  }
  return histogram;
}

double histogram_z_expectation(const std::vector<std::int64_t>& histogram, std::uint64_t zmask) {
  std::int64_t plus = 0;
  std::int64_t total = 0;
  for (std::size_t b = 0; b < histogram.size(); ++b) {
    total += histogram[b];
    if ((std::popcount(b & zmask) & 1) == 0) plus += histogram[b];
  }
  require(total > 0, ErrorKind::empty_table, "histogram has no shots");
  return (2.0 * static_cast<double>(plus) - static_cast<double>(total)) /
         static_cast<double>(total);
}

std::vector<double> probabilities(const Statevector& state) {
  std::vector<double> p(state.size());
  for (std::size_t i = 0; i < state.size(); ++i) p[i] = std::norm(state[i]);
  return p;
}

}  // namespace qpdft::sim
