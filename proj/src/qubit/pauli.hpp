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
#include <string>
#include <utility>
#include <vector>

namespace qpdft::qubit {

// ---------------------------------------------------------------------------
// Phase-free Pauli string in the symplectic (x, z) mask representation:
// bit q of `x`/`z` marks an X/Z factor on qubit q, both bits mark Y.  The
// operator identity used throughout is P = i^{|x & z|} X^x Z^z, which makes
// every string Hermitian.  Registers are limited to 64 qubits, far beyond
// the tapered problems handled here.
// ---------------------------------------------------------------------------
struct PauliString {
  int n_qubits = 0;
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  char letter(int q) const;  // 'I', 'X', 'Y' or 'Z'
  bool is_identity() const { return x == 0 && z == 0; }
  int weight() const;  // number of non-identity letters

  /// Human-readable label such as "X0 Z2" ("I" for the identity).
  std::string label() const;
  /// Fixed-width letters form such as "XIZI" (length n_qubits).
  std::string letters() const;

  bool commutes_with(const PauliString& other) const;
  /// True when every qubit carries equal letters or at least one identity.
  bool qubitwise_compatible(const PauliString& other) const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
};

/// Product of two strings; `phase` receives the accumulated factor in
/// {1, i, -1, -i}.
PauliString multiply(const PauliString& a, const PauliString& b, std::complex<double>& phase);

/// Matrix element <bra|P|ket> over computational basis states, nonzero only
/// when bra == ket ^ x.
std::complex<double> pauli_matrix_element(const PauliString& p, std::uint64_t bra,
                                          std::uint64_t ket);

// ---------------------------------------------------------------------------
// Sparse real-or-complex combination of Pauli strings.  Terms are keyed by
// (x, z) masks in ascending order so iteration and text dumps are
// deterministic; coefficients below the pruning threshold are dropped.
// ---------------------------------------------------------------------------
class PauliSum {
 public:
  static constexpr double prune_threshold = 1e-12;
  using TermMap = std::map<std::pair<std::uint64_t, std::uint64_t>, std::complex<double>>;

  PauliSum() = default;
  explicit PauliSum(int n_qubits) : n_qubits_(n_qubits) {}

  int n_qubits() const { return n_qubits_; }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add(const PauliString& p, std::complex<double> coefficient);
  void add(const PauliSum& other);
  void scale(std::complex<double> factor);
  /// Drop terms with |coefficient| <= prune_threshold.
  void prune();

  std::complex<double> coefficient(const PauliString& p) const;
  PauliString string_for(const TermMap::key_type& key) const;

  /// Identity-term coefficient (0 when absent).
  std::complex<double> constant() const;

  /// Max |Im c| over terms; Hermitian sums built from Hermitian operators
  /// should be ~0.
  double max_imaginary() const;
  bool is_hermitian(double tolerance = 1e-10) const { return max_imaginary() <= tolerance; }
  /// Discard imaginary residue after asserting it is below `tolerance`.
  void chop_imaginary(double tolerance = 1e-10);

  /// Conjugate every term by CNOT(control, target): P -> CNOT P CNOT.
  void conjugate_cnot(int control, int target);

  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  /// Sorted text dump, one `coeff  IXYZ...` line per term.
  std::string dump() const;

 private:
  int n_qubits_ = 0;
  TermMap terms_;
};

}  // namespace qpdft::qubit
