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

#include "common.hpp"

#include <cmath>
#include <cstdio>
#include <thread>

namespace qpdft {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::usage: return "usage";
    case ErrorKind::unsupported_basis: return "unsupported_basis";
    case ErrorKind::scf_not_converged: return "scf_not_converged";
    case ErrorKind::invalid_window: return "invalid_window";
    case ErrorKind::symmetry_violation: return "symmetry_violation";
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::invalid_observable: return "invalid_observable";
    case ErrorKind::invalid_spec: return "invalid_spec";
    case ErrorKind::size_exceeded: return "size_exceeded";
    case ErrorKind::degenerate_overlap: return "degenerate_overlap";
    case ErrorKind::mitigation_failure: return "mitigation_failure";
    case ErrorKind::empty_table: return "empty_table";
    case ErrorKind::not_converged: return "not_converged";
    case ErrorKind::io: return "io";
    case ErrorKind::internal: return "internal";
  }
  return "internal";
}

double pairwise_sum(const double* data, std::size_t n) {
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += data[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

double pairwise_sum(const std::vector<double>& data) {
  return pairwise_sum(data.data(), data.size());
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  const std::size_t nthreads =
      threads <= 1 ? 1 : std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  if (nthreads == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  const std::size_t block = (n + nthreads - 1) / nthreads;
  for (std::size_t t = 0; t < nthreads; ++t) {
    const std::size_t lo = t * block;
    const std::size_t hi = std::min(n, lo + block);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::string format_full(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string format_sci12(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.11e", value);
  // Compact the exponent: "9.44000000000e+09" -> "9.44000000000e9".
  std::string s(buf);
  const auto epos = s.find('e');
  if (epos == std::string::npos) return s;
  std::string mant = s.substr(0, epos);
  std::string exp = s.substr(epos + 1);
  bool negative = false;
  std::size_t i = 0;
  if (i < exp.size() && (exp[i] == '+' || exp[i] == '-')) {
    negative = exp[i] == '-';
    ++i;
  }
  while (i + 1 < exp.size() && exp[i] == '0') ++i;
  return mant + "e" + (negative ? "-" : "") + exp.substr(i);
}

}  // namespace qpdft
