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

#include <array>
#include <string>
#include <vector>

#include "io/geometry.hpp"

namespace qpdft::scf {

// ---------------------------------------------------------------------------
// Contracted s-type Gaussian basis functions.
//
// chi(r) = sum_k c_k N(a_k) exp(-a_k |r - A|^2),  N(a) = (2a/pi)^(3/4).
//
// Contraction coefficients are stored for unit-normalized primitives and the
// contraction itself is renormalized at build time.  Only s functions are
// supported; the built-in tables cover the STO-3G and 6-31G hydrogen and
// helium sets used by the H-chain model systems.
// ---------------------------------------------------------------------------
struct ContractedS {
  std::array<double, 3> center{};
  std::vector<double> exponents;
  std::vector<double> coefficients;  // for normalized primitives
  int atom_index = -1;
};

struct BasisSet {
  std::string name;
  std::vector<ContractedS> functions;

  int size() const { return static_cast<int>(functions.size()); }
};

/// Build a basis for a geometry.  Accepted names: "sto-3g", "6-31g"
/// (case/hyphen-insensitive).  Unknown names or elements without tabulated
/// s-contractions raise Error(unsupported_basis).
BasisSet build_basis(const io::Geometry& geometry, const std::string& name);

}  // namespace qpdft::scf
