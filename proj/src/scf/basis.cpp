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

#include "scf/basis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

#include "common.hpp"

namespace qpdft::scf {

namespace {

struct Shell {
  std::vector<double> exponents;
  std::vector<double> coefficients;
};

std::string normalize_name(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == '-' || c == '_' || c == ' ') continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

// s-contraction tables (exponents in Bohr^-2, coefficients for normalized
// primitives).
const std::map<std::string, std::map<std::string, std::vector<Shell>>>& shell_tables() {
  static const std::map<std::string, std::map<std::string, std::vector<Shell>>> tables = {
      {"sto3g",
       {
           {"H",
            {{{3.425250914, 0.6239137298, 0.1688554040},
              {0.1543289673, 0.5353281423, 0.4446345422}}}},
           {"He",
            {{{6.362421394, 1.158922999, 0.3136497915},
              {0.1543289673, 0.5353281423, 0.4446345422}}}},
       }},
      {"631g",
       {
           {"H",
            {{{18.73113696, 2.825394365, 0.6401216923},
              {0.03349460434, 0.2347269535, 0.8137573261}},
             {{0.1612777588}, {1.0}}}},
           {"He",
            {{{38.42163400, 5.778030000, 1.241774000},
              {0.04013973935, 0.2612460970, 0.7931846246}},
             {{0.2979640000}, {1.0}}}},
       }},
  };
  return tables;
}

// Normalize a contraction: with normalized primitives, <chi|chi> =
// sum_kl c_k c_l [2 sqrt(a_k a_l) / (a_k + a_l)]^(3/2).
void renormalize(ContractedS& f) {
  double self = 0.0;
  for (std::size_t k = 0; k < f.exponents.size(); ++k)
    for (std::size_t l = 0; l < f.exponents.size(); ++l) {
      const double ak = f.exponents[k], al = f.exponents[l];
      self += f.coefficients[k] * f.coefficients[l] *
              std::pow(2.0 * std::sqrt(ak * al) / (ak + al), 1.5);
    }
  const double scale = 1.0 / std::sqrt(self);
  for (double& c : f.coefficients) c *= scale;
}

}  // namespace

BasisSet build_basis(const io::Geometry& geometry, const std::string& name) {
  const std::string key = normalize_name(name);
  const auto table_it = shell_tables().find(key);
  require(table_it != shell_tables().end(), ErrorKind::unsupported_basis,
          "unsupported basis set '" + name + "'");
  const auto& by_element = table_it->second;

  BasisSet basis;
  basis.name = key == "sto3g" ? "sto-3g" : "6-31g";
  for (std::size_t a = 0; a < geometry.atoms.size(); ++a) {
    const auto& atom = geometry.atoms[a];
    const auto el_it = by_element.find(atom.symbol);
    require(el_it != by_element.end(), ErrorKind::unsupported_basis,
            "basis '" + name + "' has no s-contractions for element '" + atom.symbol + "'");
    for (const auto& shell : el_it->second) {
      ContractedS f;
      f.center = atom.position;
      f.exponents = shell.exponents;
      f.coefficients = shell.coefficients;
      f.atom_index = static_cast<int>(a);
      renormalize(f);
      basis.functions.push_back(std::move(f));
    }
  }
  return basis;
}

}  // namespace qpdft::scf
