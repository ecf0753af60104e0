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

#include "io/fcidump.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "common.hpp"

namespace qpdft::io {

namespace {

constexpr double kDuplicateTolerance = 1e-10;

[[noreturn]] void parse_fail(std::size_t line, const std::string& message) {
  fail(ErrorKind::parse, "fcidump line " + std::to_string(line) + ": " + message);
}

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

// Fortran floating literals may use 'D' exponents.
double parse_value(const std::string& token, std::size_t line) {
  std::string t = token;
  for (char& c : t)
    if (c == 'D' || c == 'd') c = 'e';
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &pos);
  } catch (const std::exception&) {
    parse_fail(line, "bad numeric value '" + token + "'");
  }
  if (pos != t.size()) parse_fail(line, "bad numeric value '" + token + "'");
  return v;
}

int parse_index(const std::string& token, std::size_t line) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(token, &pos);
  } catch (const std::exception&) {
    parse_fail(line, "bad orbital index '" + token + "'");
  }
  if (pos != token.size()) parse_fail(line, "bad orbital index '" + token + "'");
  return v;
}

}  // namespace

std::uint64_t Fcidump::canonical_key(int p, int q, int r, int s) {
  const auto pair_index = [](int a, int b) -> std::uint64_t {
    if (a < b) std::swap(a, b);
    return static_cast<std::uint64_t>(a) * (a + 1) / 2 + b;
  };
  std::uint64_t ij = pair_index(p, q);
  std::uint64_t kl = pair_index(r, s);
  if (ij < kl) std::swap(ij, kl);
  return ij * (ij + 1) / 2 + kl;
}

void Fcidump::set_one_body(int p, int q, double value) {
  h[static_cast<std::size_t>(p) * norb + q] = value;
  h[static_cast<std::size_t>(q) * norb + p] = value;
}

double Fcidump::two_body(int p, int q, int r, int s) const {
  auto it = eri.find(canonical_key(p, q, r, s));
  return it == eri.end() ? 0.0 : it->second;
}

void Fcidump::set_two_body(int p, int q, int r, int s, double value) {
  eri[canonical_key(p, q, r, s)] = value;
}

Fcidump parse_fcidump(const std::string& text) {
  // Split the header (through &END or a '/' terminator) from the records.
  std::size_t header_end = std::string::npos;
  std::size_t records_begin = 0;
  {
    const std::string u = upper(text);
    const std::size_t amp_end = u.find("&END");
    const std::size_t slash_end = u.find("/\n") != std::string::npos
                                      ? u.find("/\n")
                                      : (u.size() && u.back() == '/' ? u.size() - 1
                                                                     : std::string::npos);
    if (amp_end != std::string::npos) {
      header_end = amp_end;
      records_begin = amp_end + 4;
    } else if (slash_end != std::string::npos) {
      header_end = slash_end;
      records_begin = slash_end + 1;
    } else {
      fail(ErrorKind::parse, "fcidump line 1: missing &FCI header terminator");
    }
  }

  std::string header = text.substr(0, header_end);
  const std::size_t header_lines =
      static_cast<std::size_t>(std::count(header.begin(), header.end(), '\n'));
  {
    const std::size_t fci = upper(header).find("&FCI");
    require(fci != std::string::npos, ErrorKind::parse,
            "fcidump line 1: missing &FCI header");
    header = header.substr(fci + 4);
  }

  Fcidump out;
  // Tokenize the namelist body on commas/whitespace around '=' assignments.
  for (char& c : header)
    if (c == ',' || c == '\n' || c == '\t') c = ' ';
  // Re-join "KEY = value" forms, then split on spaces.
  std::vector<std::string> assignments;
  {
    std::string compact;
    compact.reserve(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == '=') {
        while (!compact.empty() && compact.back() == ' ') compact.pop_back();
        compact += '=';
        while (i + 1 < header.size() && header[i + 1] == ' ') ++i;
      } else {
        compact += header[i];
      }
    }
    std::istringstream is(compact);
    std::string tok;
    while (is >> tok) assignments.push_back(tok);
  }

  std::string pending_key;
  std::vector<int> orbsym;
  for (const auto& tok : assignments) {
    std::string key, value;
    const auto eq = tok.find('=');
    if (eq != std::string::npos) {
      key = upper(tok.substr(0, eq));
      value = tok.substr(eq + 1);
      pending_key = key;
    } else {
      // Continuation of a list value (ORBSYM=1 1 1).
      key = pending_key;
      value = tok;
    }
    if (value.empty()) continue;
    if (key == "NORB") {
      out.norb = parse_index(value, 1);
    } else if (key == "NELEC") {
      out.nelec = parse_index(value, 1);
    } else if (key == "MS2") {
      out.ms2 = parse_index(value, 1);
    } else if (key == "ISYM") {
      out.isym = parse_index(value, 1);
    } else if (key == "ORBSYM") {
      orbsym.push_back(parse_index(value, 1));
    } else if (key.empty()) {
      fail(ErrorKind::parse, "fcidump line 1: stray header token '" + tok + "'");
    }
    // Unknown keys are tolerated for interoperability.
  }
  require(out.norb > 0, ErrorKind::parse, "fcidump line 1: NORB missing or not positive");
  require(out.nelec >= 0, ErrorKind::parse, "fcidump line 1: NELEC missing");
  out.orbsym = orbsym.empty() ? std::vector<int>(out.norb, 1) : orbsym;
  require(static_cast<int>(out.orbsym.size()) == out.norb, ErrorKind::parse,
          "fcidump line 1: ORBSYM length does not match NORB");
  out.h.assign(static_cast<std::size_t>(out.norb) * out.norb, 0.0);
  out.orbital_energies.assign(out.norb, 0.0);

  // Record section.
  std::istringstream body(text.substr(records_begin));
  std::string line;
  std::size_t line_no = header_lines + 1;
  std::vector<bool> h_seen(static_cast<std::size_t>(out.norb) * out.norb, false);
  bool core_seen = false;
  while (std::getline(body, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (toks.size() != 5) parse_fail(line_no, "expected 'value i j k l'");
    const double value = parse_value(toks[0], line_no);
    int idx[4];
    for (int k = 0; k < 4; ++k) {
      idx[k] = parse_index(toks[static_cast<std::size_t>(k) + 1], line_no);
      if (idx[k] < 0 || idx[k] > out.norb)
        parse_fail(line_no, "orbital index " + std::to_string(idx[k]) + " out of range");
    }
    const int i = idx[0], j = idx[1], k = idx[2], l = idx[3];
    if (i > 0 && j > 0 && k > 0 && l > 0) {
      const auto key = Fcidump::canonical_key(i - 1, j - 1, k - 1, l - 1);
      auto it = out.eri.find(key);
      if (it != out.eri.end() && std::fabs(it->second - value) > kDuplicateTolerance)
        parse_fail(line_no, "conflicting duplicate two-electron record");
      out.eri[key] = value;
    } else if (i > 0 && j > 0 && k == 0 && l == 0) {
      const std::size_t flat = static_cast<std::size_t>(i - 1) * out.norb + (j - 1);
      const std::size_t flat_t = static_cast<std::size_t>(j - 1) * out.norb + (i - 1);
      if ((h_seen[flat] || h_seen[flat_t]) &&
          std::fabs(out.h[flat] - value) > kDuplicateTolerance)
        parse_fail(line_no, "conflicting duplicate one-electron record");
      out.set_one_body(i - 1, j - 1, value);
      h_seen[flat] = h_seen[flat_t] = true;
    } else if (i > 0 && j == 0 && k == 0 && l == 0) {
      out.orbital_energies[static_cast<std::size_t>(i - 1)] = value;
    } else if (i == 0 && j == 0 && k == 0 && l == 0) {
      if (core_seen && std::fabs(out.core_energy - value) > kDuplicateTolerance)
        parse_fail(line_no, "conflicting duplicate core-energy record");
      out.core_energy = value;
      core_seen = true;
    } else {
      parse_fail(line_no, "unrecognized index pattern");
    }
  }
  return out;
}

std::string emit_fcidump(const Fcidump& data) {
  std::ostringstream os;
  os << "&FCI NORB=" << data.norb << ",NELEC=" << data.nelec << ",MS2=" << data.ms2
     << ",\n  ORBSYM=";
  for (int i = 0; i < data.norb; ++i) {
    os << (i < static_cast<int>(data.orbsym.size()) ? data.orbsym[static_cast<std::size_t>(i)] : 1)
       << ",";
  }
  os << "\n  ISYM=" << data.isym << ",\n&END\n";

  const auto record = [&os](double value, int i, int j, int k, int l) {
    os << " " << format_full(value) << "  " << i << "  " << j << "  " << k << "  " << l
       << "\n";
  };

  // Two-electron block: loop symmetry-unique chemist quadruples in the
  // conventional p>=q, r>=s, (pq)>=(rs) order.
  for (int p = 0; p < data.norb; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= p; ++r)
        for (int s = 0; s <= r; ++s) {
          if (p * (p + 1) / 2 + q < r * (r + 1) / 2 + s) continue;
          auto it = data.eri.find(Fcidump::canonical_key(p, q, r, s));
          if (it == data.eri.end() || it->second == 0.0) continue;
          record(it->second, p + 1, q + 1, r + 1, s + 1);
        }
  // One-electron block.
  for (int p = 0; p < data.norb; ++p)
    for (int q = 0; q <= p; ++q) {
      const double v = data.one_body(p, q);
      if (v != 0.0) record(v, p + 1, q + 1, 0, 0);
    }
  // Core energy terminates the file.
  record(data.core_energy, 0, 0, 0, 0);
  return os.str();
}

}  // namespace qpdft::io
