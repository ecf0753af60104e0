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

#include "qubit/pauli.hpp"

#include <bit>
#include <sstream>

#include "common.hpp"

namespace qpdft::qubit {
namespace {

constexpr std::complex<double> i_unit(0.0, 1.0);

/// i^k for k in Z.
std::complex<double> i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

char PauliString::letter(int q) const {
  const bool has_x = (x >> q) & 1u;
  const bool has_z = (z >> q) & 1u;
  if (has_x && has_z) return 'Y';
  if (has_x) return 'X';
  if (has_z) return 'Z';
  return 'I';
}

int PauliString::weight() const { return std::popcount(x | z); }

std::string PauliString::label() const {
  if (is_identity()) return "I";
  std::string out;
  for (int q = 0; q < n_qubits; ++q) {
    const char c = letter(q);
    if (c == 'I') continue;
    if (!out.empty()) out += ' ';
    out += c;
    out += std::to_string(q);
  }
  return out;
}

std::string PauliString::letters() const {
  std::string out(static_cast<std::size_t>(n_qubits), 'I');
  for (int q = 0; q < n_qubits; ++q) out[static_cast<std::size_t>(q)] = letter(q);
  return out;
}

bool PauliString::commutes_with(const PauliString& other) const {
  const int anti = std::popcount(x & other.z) + std::popcount(z & other.x);
  return (anti & 1) == 0;
}

bool PauliString::qubitwise_compatible(const PauliString& other) const {
  const std::uint64_t both = (x | z) & (other.x | other.z);
  // On shared support the letters must agree exactly.
  return ((x ^ other.x) & both) == 0 && ((z ^ other.z) & both) == 0;
}

PauliString multiply(const PauliString& a, const PauliString& b, std::complex<double>& phase) {
  PauliString out;
  out.n_qubits = std::max(a.n_qubits, b.n_qubits);
  out.x = a.x ^ b.x;
  out.z = a.z ^ b.z;
  // P_a P_b = i^{ya+yb} (-1)^{|za & xb|} X^x Z^z = i^{ya+yb-yo} (-1)^{...} P_o.
  const int ya = std::popcount(a.x & a.z);
  const int yb = std::popcount(b.x & b.z);
  const int yo = std::popcount(out.x & out.z);
  phase = i_power(ya + yb - yo);
  if (std::popcount(a.z & b.x) & 1) phase = -phase;
  return out;
}

std::complex<double> pauli_matrix_element(const PauliString& p, std::uint64_t bra,
                                          std::uint64_t ket) {
  if (bra != (ket ^ p.x)) return {0.0, 0.0};
  std::complex<double> value = i_power(std::popcount(p.x & p.z));
  if (std::popcount(p.z & ket) & 1) value = -value;
  return value;
}

void PauliSum::add(const PauliString& p, std::complex<double> coefficient) {
  require(n_qubits_ >= 64 || ((p.x | p.z) >> n_qubits_) == 0, ErrorKind::dimension,
          "Pauli string does not fit the register");
  auto [it, inserted] = terms_.try_emplace({p.x, p.z}, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (std::abs(it->second) <= prune_threshold) terms_.erase(it);
  } else if (std::abs(coefficient) <= prune_threshold) {
    terms_.erase(it);
  }
}

void PauliSum::add(const PauliSum& other) {
  require(other.n_qubits_ == n_qubits_, ErrorKind::dimension,
          "cannot add Pauli sums over different registers");
  for (const auto& [key, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) it->second += c;
  }
  prune();
}

void PauliSum::scale(std::complex<double> factor) {
  for (auto& [key, c] : terms_) c *= factor;
  prune();
}

void PauliSum::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) <= prune_threshold)
      it = terms_.erase(it);
    else
      ++it;
  }
}

std::complex<double> PauliSum::coefficient(const PauliString& p) const {
  auto it = terms_.find({p.x, p.z});
  return it == terms_.end() ? std::complex<double>(0.0, 0.0) : it->second;
}

PauliString PauliSum::string_for(const TermMap::key_type& key) const {
  return PauliString{n_qubits_, key.first, key.second};
}

std::complex<double> PauliSum::constant() const {
  auto it = terms_.find({0, 0});
  return it == terms_.end() ? std::complex<double>(0.0, 0.0) : it->second;
}

double PauliSum::max_imaginary() const {
  double worst = 0.0;
  for (const auto& [key, c] : terms_) worst = std::max(worst, std::abs(c.imag()));
  return worst;
}

void PauliSum::chop_imaginary(double tolerance) {
  require(max_imaginary() <= tolerance, ErrorKind::invalid_observable,
          "Pauli sum expected to be Hermitian has imaginary coefficients");
  for (auto& [key, c] : terms_) c = std::complex<double>(c.real(), 0.0);
  prune();
}

void PauliSum::conjugate_cnot(int control, int target) {
  require(control != target && control >= 0 && target >= 0 && control < n_qubits_ &&
              target < n_qubits_,
          ErrorKind::dimension, "CNOT conjugation with invalid qubit indices");
  const std::uint64_t cbit = 1ull << control;
  const std::uint64_t tbit = 1ull << target;
  TermMap updated;
  for (const auto& [key, c] : terms_) {
    // Symplectic update: X_c -> X_c X_t and Z_t -> Z_c Z_t.
    std::uint64_t nx = key.first;
    std::uint64_t nz = key.second;
    if (nx & cbit) nx ^= tbit;
    if (nz & tbit) nz ^= cbit;
    // Sign: CNOT (X_c Z_t) CNOT = -Y_c Y_t; the flip occurs exactly when the
    // control carries X and the target carries Z with letters such that the
    // local operator is X_c Z_t or Y_c Y_t.
    std::complex<double> coeff = c;
    const bool xc = key.first & cbit;
    const bool zc = key.second & cbit;
    const bool xt = key.first & tbit;
    const bool zt = key.second & tbit;
    if (xc && zt && (zc == xt)) coeff = -coeff;
    auto [it, inserted] = updated.try_emplace({nx, nz}, coeff);
    if (!inserted) it->second += coeff;
  }
  terms_ = std::move(updated);
  prune();
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  require(a.n_qubits_ == b.n_qubits_, ErrorKind::dimension,
          "cannot multiply Pauli sums over different registers");
  PauliSum out(a.n_qubits_);
  for (const auto& [ka, ca] : a.terms_) {
    const PauliString pa{a.n_qubits_, ka.first, ka.second};
    for (const auto& [kb, cb] : b.terms_) {
      const PauliString pb{b.n_qubits_, kb.first, kb.second};
      std::complex<double> phase;
      const PauliString pc = multiply(pa, pb, phase);
      out.add(pc, ca * cb * phase);
    }
  }
  out.prune();
  return out;
}

std::string PauliSum::dump() const {
  std::ostringstream out;
  for (const auto& [key, c] : terms_) {
    const PauliString p{n_qubits_, key.first, key.second};
    out << format_full(c.real());
    if (std::abs(c.imag()) > prune_threshold) out << (c.imag() < 0 ? "" : "+") << format_full(c.imag()) << 'i';
    out << "  " << p.letters() << '\n';
  }
  return out.str();
}

}  // namespace qpdft::qubit
