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

namespace qpdft::io {

struct Atom {
  std::string symbol;  // canonical element symbol, or "Q" for a bare charge
  double charge = 0.0;
  std::array<double, 3> position{};  // Bohr
};

struct Geometry {
  std::vector<Atom> atoms;

  double total_nuclear_charge() const;
};

// ---------------------------------------------------------------------------
// Geometry text format: a mandatory unit line followed by one atom per line.
//
//   units bohr          (or "units angstrom")
//   H   0.0 0.0 0.0
//   H   0.0 0.0 1.4
//
// The first field of an atom line is an element symbol or a bare nuclear
// charge.  '#' starts a comment; blank lines are ignored.  Coordinates are
// converted to Bohr on parse.
// ---------------------------------------------------------------------------
Geometry parse_geometry(const std::string& text);

std::string emit_geometry(const Geometry& geometry);

/// Classical point-charge repulsion sum_{i<j} Z_i Z_j / R_ij in Hartree.
/// Coincident nuclei raise Error(dimension).
double nuclear_repulsion(const Geometry& geometry);

}  // namespace qpdft::io
