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

#include "io/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

#include "common.hpp"

namespace qpdft::io {

namespace {

const std::map<std::string, double>& element_charges() {
  static const std::map<std::string, double> table = {
      {"H", 1.0}, {"He", 2.0}, {"Li", 3.0}, {"Be", 4.0}, {"B", 5.0},
      {"C", 6.0}, {"N", 7.0},  {"O", 8.0},  {"F", 9.0},  {"Ne", 10.0},
  };
  return table;
}

std::string canonical_symbol(const std::string& token) {
  std::string s = token;
  if (s.empty()) return s;
  s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  std::transform(s.begin() + 1, s.end(), s.begin() + 1,
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

double Geometry::total_nuclear_charge() const {
  double total = 0.0;
  for (const auto& atom : atoms) total += atom.charge;
  return total;
}

Geometry parse_geometry(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::size_t line_no = 0;
  double to_bohr = 0.0;  // set by the units line
  Geometry geom;

  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream ls(strip_comment(line));
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;

    if (to_bohr == 0.0) {
      std::string key = toks[0];
      std::transform(key.begin(), key.end(), key.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      require(key == "units" || key == "unit", ErrorKind::parse,
              "geometry line " + std::to_string(line_no) +
                  ": expected a units line ('units bohr' or 'units angstrom')");
      require(toks.size() == 2, ErrorKind::parse,
              "geometry line " + std::to_string(line_no) + ": malformed units line");
      std::string unit = toks[1];
      std::transform(unit.begin(), unit.end(), unit.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      if (unit == "bohr" || unit == "au") {
        to_bohr = 1.0;
      } else if (unit == "angstrom" || unit == "ang" || unit == "a") {
        to_bohr = constants::angstrom_to_bohr;
      } else {
        fail(ErrorKind::parse, "geometry line " + std::to_string(line_no) +
                                   ": unknown unit '" + toks[1] + "'");
      }
      continue;
    }

    require(toks.size() == 4, ErrorKind::parse,
            "geometry line " + std::to_string(line_no) + ": expected 'symbol x y z'");
    Atom atom;
    // First field: element symbol or bare nuclear charge.
    try {
      std::size_t pos = 0;
      const double z = std::stod(toks[0], &pos);
      if (pos == toks[0].size()) {
        require(z > 0.0, ErrorKind::parse,
                "geometry line " + std::to_string(line_no) + ": nuclear charge must be positive");
        atom.charge = z;
        atom.symbol = "Q";
      }
    } catch (const std::exception&) {
      // fall through to symbol lookup
    }
    if (atom.symbol.empty()) {
      const std::string sym = canonical_symbol(toks[0]);
      const auto it = element_charges().find(sym);
      require(it != element_charges().end(), ErrorKind::parse,
              "geometry line " + std::to_string(line_no) + ": unknown element '" + toks[0] + "'");
      atom.symbol = sym;
      atom.charge = it->second;
    }
    for (int c = 0; c < 3; ++c) {
      std::size_t pos = 0;
      double v = 0.0;
      try {
        v = std::stod(toks[static_cast<std::size_t>(c) + 1], &pos);
      } catch (const std::exception&) {
        fail(ErrorKind::parse,
             "geometry line " + std::to_string(line_no) + ": bad coordinate");
      }
      require(pos == toks[static_cast<std::size_t>(c) + 1].size(), ErrorKind::parse,
              "geometry line " + std::to_string(line_no) + ": bad coordinate");
      atom.position[static_cast<std::size_t>(c)] = v * to_bohr;
    }
    geom.atoms.push_back(atom);
  }
  require(to_bohr != 0.0, ErrorKind::parse, "geometry: missing units line");
  require(!geom.atoms.empty(), ErrorKind::parse, "geometry: no atoms");
  return geom;
}

std::string emit_geometry(const Geometry& geometry) {
  std::ostringstream os;
  os << "units bohr\n";
  for (const auto& atom : geometry.atoms) {
    if (atom.symbol == "Q")
      os << format_full(atom.charge);
    else
      os << atom.symbol;
    for (double x : atom.position) os << "  " << format_full(x);
    os << "\n";
  }
  return os.str();
}

double nuclear_repulsion(const Geometry& geometry) {
  double energy = 0.0;
  const auto& atoms = geometry.atoms;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      const double dx = atoms[i].position[0] - atoms[j].position[0];
      const double dy = atoms[i].position[1] - atoms[j].position[1];
      const double dz = atoms[i].position[2] - atoms[j].position[2];
      const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
      require(r > 1e-10, ErrorKind::dimension,
              "nuclear_repulsion: coincident nuclei " + std::to_string(i) + " and " +
                  std::to_string(j));
      energy += atoms[i].charge * atoms[j].charge / r;
    }
  return energy;
}

}  // namespace qpdft::io
