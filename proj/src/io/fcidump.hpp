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
#include <map>
#include <string>
#include <vector>

namespace qpdft::io {

// ---------------------------------------------------------------------------
// FCIDUMP interchange (Molpro conventions).
//
// On disk: a namelist header (&FCI NORB=..,NELEC=..,MS2=.., ORBSYM=..,
// ISYM=.., &END) followed by integral records "value i j k l" with 1-based
// orbital indices and chemist's notation (ij|kl) for the two-electron
// integrals.  Records with k=l=0 are one-electron integrals h_ij, records
// with all indices zero carry the core energy.  In memory all indices are
// 0-based and integrals are stored under 8-fold permutational symmetry.
// ---------------------------------------------------------------------------
struct Fcidump {
  int norb = 0;
  int nelec = 0;
  int ms2 = 0;
  int isym = 1;
  std::vector<int> orbsym;  // size norb
  double core_energy = 0.0;
  std::vector<double> h;                     // norb*norb, row-major, symmetric
  std::map<std::uint64_t, double> eri;       // canonical key -> (pq|rs)
  std::vector<double> orbital_energies;      // optional trailing records

  double one_body(int p, int q) const { return h[static_cast<std::size_t>(p) * norb + q]; }
  void set_one_body(int p, int q, double value);

  double two_body(int p, int q, int r, int s) const;  // chemist (pq|rs)
  void set_two_body(int p, int q, int r, int s, double value);

  /// Canonical 8-fold-symmetry key for (pq|rs); indices 0-based.
  static std::uint64_t canonical_key(int p, int q, int r, int s);
};

/// Parse FCIDUMP text.  Throws Error(parse) with a line number on malformed
/// headers or records, out-of-range indices, or duplicate records whose
/// values disagree by more than 1e-10.
Fcidump parse_fcidump(const std::string& text);

/// Emit FCIDUMP text with one record per symmetry-unique integral and full
/// round-trip precision.  parse_fcidump(emit_fcidump(x)) reproduces x's
/// integrals bit for bit.
std::string emit_fcidump(const Fcidump& data);

}  // namespace qpdft::io
