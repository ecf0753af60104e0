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

#include "sim/readout.hpp"

#include <bit>
#include <cmath>
#include <cstddef>

namespace qpdft::sim {

namespace {

void check_fidelity(double f, const char* name) {
  require(f >= 0.0 && f <= 1.0, ErrorKind::invalid_spec,
          std::string("readout fidelity ") + name + " outside [0, 1]: " + format_full(f));
}

}  // namespace

ReadoutModel ReadoutModel::identity(int n_qubits) {
  return uniform(n_qubits, 1.0, 1.0);
}

ReadoutModel ReadoutModel::per_qubit(const std::vector<std::pair<double, double>>& fidelities) {
  require(!fidelities.empty() && fidelities.size() <= 24, ErrorKind::invalid_spec,
          "per-qubit readout model needs between 1 and 24 qubits");
  for (const auto& [f0, f1] : fidelities) {
    check_fidelity(f0, "f0");
    check_fidelity(f1, "f1");
  }
  ReadoutModel model;
  model.n_qubits_ = static_cast<int>(fidelities.size());
  model.fidelities_ = fidelities;
  return model;
}

ReadoutModel ReadoutModel::uniform(int n_qubits, double f0, double f1) {
  require(n_qubits >= 1, ErrorKind::invalid_spec, "readout model needs at least one qubit");
  return per_qubit(std::vector<std::pair<double, double>>(static_cast<std::size_t>(n_qubits),
                                                          {f0, f1}));
}

ReadoutModel ReadoutModel::from_matrix(Eigen::MatrixXd confusion) {
  const auto dim = static_cast<std::uint64_t>(confusion.rows());
  require(confusion.rows() == confusion.cols() && dim >= 2, ErrorKind::invalid_spec,
          "confusion matrix must be square with dimension >= 2");
  require(std::has_single_bit(dim), ErrorKind::invalid_spec,
          "confusion matrix dimension must be a power of two");
  for (Eigen::Index c = 0; c < confusion.cols(); ++c) {
    double column_sum = 0.0;
    for (Eigen::Index r = 0; r < confusion.rows(); ++r) {
      const double entry = confusion(r, c);
      require(entry >= -1e-12 && entry <= 1.0 + 1e-12, ErrorKind::invalid_spec,
              "confusion matrix entry outside [0, 1]");
      column_sum += entry;
    }
    require(std::abs(column_sum - 1.0) <= 1e-10, ErrorKind::invalid_spec,
            "confusion matrix column does not sum to one");
  }
  ReadoutModel model;
  model.n_qubits_ = std::countr_zero(dim);
  model.matrix_ = std::move(confusion);
  return model;
}

Eigen::MatrixXd ReadoutModel::dense() const {
  if (!is_tensor()) return matrix_;
  require(n_qubits_ <= 12, ErrorKind::size_exceeded,
          "dense confusion matrix limited to 12 qubits");
  const std::uint64_t dim = std::uint64_t{1} << n_qubits_;
  Eigen::MatrixXd out(dim, dim);
  for (std::uint64_t c = 0; c < dim; ++c)
    for (std::uint64_t r = 0; r < dim; ++r) out(static_cast<Eigen::Index>(r),
                                                static_cast<Eigen::Index>(c)) = element(r, c);
  return out;
}

double ReadoutModel::element(std::uint64_t seen, std::uint64_t truth) const {
  const std::uint64_t dim = std::uint64_t{1} << n_qubits_;
  require(seen < dim && truth < dim, ErrorKind::dimension, "bitstring outside register");
  if (!is_tensor())
    return matrix_(static_cast<Eigen::Index>(seen), static_cast<Eigen::Index>(truth));
  double p = 1.0;
  for (int q = 0; q < n_qubits_; ++q) {
    const bool t = (truth >> q) & 1u;
    const bool s = (seen >> q) & 1u;
    const auto& [f0, f1] = fidelities_[static_cast<std::size_t>(q)];
    p *= t ? (s ? f1 : 1.0 - f1) : (s ? 1.0 - f0 : f0);
  }
  return p;
}

std::uint64_t ReadoutModel::corrupt_shot(std::uint64_t truth, CounterRng& rng) const {
  const std::uint64_t dim = std::uint64_t{1} << n_qubits_;
  require(truth < dim, ErrorKind::dimension, "bitstring outside register");
  if (is_tensor()) {
    // Flip each bit independently with its miss probability.
    std::uint64_t seen = truth;
    for (int q = 0; q < n_qubits_; ++q) {
      const bool t = (truth >> q) & 1u;
      const auto& [f0, f1] = fidelities_[static_cast<std::size_t>(q)];
      const double miss = t ? 1.0 - f1 : 1.0 - f0;
      if (rng.next_double() < miss) seen ^= std::uint64_t{1} << q;
    }
    return seen;
  }
  // Sample the observed label from the truth column.
  const double u = rng.next_double();
  double cumulative = 0.0;
  for (std::uint64_t seen = 0; seen < dim; ++seen) {
    cumulative += matrix_(static_cast<Eigen::Index>(seen), static_cast<Eigen::Index>(truth));
    if (u < cumulative) return seen;
  }
  return dim - 1;
}

std::vector<std::int64_t> apply_readout_noise(const std::vector<std::int64_t>& histogram,
                                              const ReadoutModel& model, CounterRng& rng) {
  const std::uint64_t dim = std::uint64_t{1} << model.n_qubits();
  require(histogram.size() == dim, ErrorKind::dimension,
          "histogram length does not match readout model");
  std::vector<std::int64_t> out(histogram.size(), 0);
  for (std::uint64_t truth = 0; truth < dim; ++truth) {
    const std::int64_t count = histogram[truth];
    require(count >= 0, ErrorKind::invalid_spec, "negative histogram count");
    for (std::int64_t shot = 0; shot < count; ++shot)
      ++out[model.corrupt_shot(truth, rng)];
  }
  return out;
}

std::vector<double> corrupt_distribution(const std::vector<double>& probabilities,
                                         const ReadoutModel& model) {
  const std::uint64_t dim = std::uint64_t{1} << model.n_qubits();
  require(probabilities.size() == dim, ErrorKind::dimension,
          "distribution length does not match readout model");
  std::vector<double> out(probabilities.size(), 0.0);
  for (std::uint64_t truth = 0; truth < dim; ++truth) {
    const double p = probabilities[truth];
    if (p == 0.0) continue;
    for (std::uint64_t seen = 0; seen < dim; ++seen) out[seen] += model.element(seen, truth) * p;
  }
  return out;
}

}  // namespace qpdft::sim
