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

#include "rdm/rdm_pair.hpp"

#include <cmath>
#include <sstream>

#include "common.hpp"

namespace qpdft::rdm {

double contract_energy(const scf::ActiveHamiltonian& h, const RdmPair& rdms) {
  require(h.norb == rdms.norb, ErrorKind::dimension,
          "RDM dimension does not match the Hamiltonian");
  const int n = h.norb;
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(n) * n * (1 + static_cast<std::size_t>(n) * n));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      terms.push_back(h.h(p, q) * rdms.gamma(p, q));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
          terms.push_back(0.5 * rdms.g2(p, q, r, s) * h.eri(p, q, r, s));
  return h.core_energy + pairwise_sum(terms);
}

void impose_symmetry(RdmPair& rdms) {
  const int n = rdms.norb;
  rdms.gamma = 0.5 * (rdms.gamma + rdms.gamma.transpose()).eval();
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          if (!(std::make_tuple(p, q, r, s) <= std::make_tuple(r, s, p, q) &&
                std::make_tuple(p, q, r, s) <= std::make_tuple(q, p, s, r) &&
                std::make_tuple(p, q, r, s) <= std::make_tuple(s, r, q, p)))
            continue;  // handle each orbit once, from its smallest member
          const double mean = 0.25 * (rdms.g2(p, q, r, s) + rdms.g2(r, s, p, q) +
                                      rdms.g2(q, p, s, r) + rdms.g2(s, r, q, p));
          rdms.g2(p, q, r, s) = mean;
          rdms.g2(r, s, p, q) = mean;
          rdms.g2(q, p, s, r) = mean;
          rdms.g2(s, r, q, p) = mean;
        }
}

double partial_trace_residual(const RdmPair& rdms, int n_electrons) {
  const int n = rdms.norb;
  double worst = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      double sum = 0.0;
      for (int r = 0; r < n; ++r) sum += rdms.g2(p, q, r, r);
      worst = std::max(worst, std::abs(sum - (n_electrons - 1) * rdms.gamma(p, q)));
    }
  return worst;
}

std::string emit_rdms(const RdmPair& rdms) {
  std::ostringstream out;
  out << "rdm v1 " << rdms.norb << '\n';
  const int n = rdms.norb;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) out << (q ? " " : "") << format_full(rdms.gamma(p, q));
    out << '\n';
  }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
          out << (r == 0 && s == 0 ? "" : " ") << format_full(rdms.g2(p, q, r, s));
      out << '\n';
    }
  return out.str();
}

RdmPair parse_rdms(const std::string& text) {
  std::istringstream in(text);
  std::string tag, version;
  int norb = 0;
  if (!(in >> tag >> version >> norb) || tag != "rdm" || version != "v1" || norb < 1)
    fail(ErrorKind::parse, "RDM file must start with 'rdm v1 <norb>'");
  RdmPair rdms(norb);
  for (int p = 0; p < norb; ++p)
    for (int q = 0; q < norb; ++q)
      if (!(in >> rdms.gamma(p, q))) fail(ErrorKind::parse, "RDM file truncated in gamma");
  for (std::size_t i = 0; i < rdms.big_gamma.size(); ++i)
    if (!(in >> rdms.big_gamma[i])) fail(ErrorKind::parse, "RDM file truncated in Gamma");
  return rdms;
}

}  // namespace qpdft::rdm
