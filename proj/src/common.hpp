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
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpdft {

// ---------------------------------------------------------------------------
// Physical constants (CODATA 2018 where applicable).
// ---------------------------------------------------------------------------
namespace constants {
inline constexpr double hartree_to_ev = 27.211386245988;
inline constexpr double angstrom_to_bohr = 1.8897261246257702;
// Reduced Planck constant in eV*s and Boltzmann constant in eV/K; these are
// the values used throughout the rate expressions.
inline constexpr double hbar_ev_s = 6.582119569e-16;
inline constexpr double kb_ev_per_k = 8.617333262e-5;
inline constexpr double pi = 3.14159265358979323846;
}  // namespace constants

// ---------------------------------------------------------------------------
// Error handling.
//
// Every failure the library can produce carries one of these kinds.  The C
// API maps kinds onto a small set of integer codes; the CLI maps them onto
// process exit codes (usage errors -> 2, everything else -> 1).
// ---------------------------------------------------------------------------
enum class ErrorKind {
  parse,              // malformed input text (FCIDUMP, CSV, geometry, ...)
  usage,              // bad configuration / flag combination
  unsupported_basis,  // basis set name not in the built-in tables
  scf_not_converged,
  invalid_window,      // active-space window inconsistent with the system
  symmetry_violation,  // operator breaks a symmetry the call requires
  dimension,           // shape mismatch between coupled arguments
  invalid_observable,  // non-Hermitian or otherwise unusable observable
  invalid_spec,        // ansatz/problem specification inconsistent
  size_exceeded,       // problem too large for the requested method
  degenerate_overlap,  // |S_DA| >= 1 in the coupling transform
  mitigation_failure,  // readout-calibration matrix unusable
  empty_table,         // statistics requested over an empty frame table
  not_converged,       // iterative solver failed to reach tolerance
  io,                  // file could not be read or written
  internal,
};

/// Exception type carrying an ErrorKind plus a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Short stable identifier for an error kind ("parse", "usage", ...).
const char* error_kind_name(ErrorKind kind);

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

// ---------------------------------------------------------------------------
// Deterministic counter-based random source.
//
// Every stochastic code path takes an explicit 64-bit seed and draws values
// through this generator.  Output i is a function of (seed, i) only, so any
// sampling call can be replayed or sharded without hidden state.  The mixing
// function is the splitmix64 finalizer.
// ---------------------------------------------------------------------------
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  /// Next raw 64-bit value.
  std::uint64_t next_u64() {
    std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * (++counter_);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Derive an independent stream for a sub-task (e.g. one restart or one
  /// measurement group) without disturbing this stream.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed ^ (0x9e3779b97f4a7c15ULL + stream * 0xd1342543de82ef95ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

// ---------------------------------------------------------------------------
// Numerics helpers.
// ---------------------------------------------------------------------------

/// Pairwise (cascade) summation.  Used wherever a reduction must be
/// independent of loop blocking so that threaded and serial runs agree
/// bit-for-bit per partition.
double pairwise_sum(const double* data, std::size_t n);
double pairwise_sum(const std::vector<double>& data);

/// Run fn(i) for i in [0, n) on at most `threads` workers with a static
/// block partition.  threads <= 1 degenerates to a plain loop.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

/// Format a double with full round-trip precision (17 significant digits).
std::string format_full(double value);

/// Format a double with exactly 12 significant digits in scientific
/// notation with a compact exponent, e.g. 9.44e9 -> "9.44000000000e9".
std::string format_sci12(double value);

}  // namespace qpdft
