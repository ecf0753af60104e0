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
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "common.hpp"

namespace qpdft::sim {

// ---------------------------------------------------------------------------
// Classical readout-noise channel: a column-stochastic confusion matrix
// mapping the true basis state (column) to a distribution over observed
// bitstrings (rows).  Either an explicit 2^n x 2^n matrix or per-qubit
// fidelities {f0, f1} composed as a tensor product, where f0 = P(read 0 |
// true 0) and f1 = P(read 1 | true 1).
// ---------------------------------------------------------------------------
class ReadoutModel {
 public:
  static ReadoutModel identity(int n_qubits);
  static ReadoutModel per_qubit(const std::vector<std::pair<double, double>>& fidelities);
  /// Same fidelities on every qubit.
  static ReadoutModel uniform(int n_qubits, double f0, double f1);
  static ReadoutModel from_matrix(Eigen::MatrixXd confusion);

  int n_qubits() const { return n_qubits_; }
  bool is_tensor() const { return !fidelities_.empty(); }
  const std::vector<std::pair<double, double>>& fidelities() const { return fidelities_; }

  /// Dense confusion matrix (expands the tensor form on demand).
  Eigen::MatrixXd dense() const;

  /// P(observe `seen` | true state `truth`).
  double element(std::uint64_t seen, std::uint64_t truth) const;

  /// Re-label one shot with the replayable generator.
  std::uint64_t corrupt_shot(std::uint64_t truth, CounterRng& rng) const;

 private:
  int n_qubits_ = 0;
  std::vector<std::pair<double, double>> fidelities_;
  Eigen::MatrixXd matrix_;  // empty when tensor form
};

/// Re-label every recorded shot independently through the confusion channel.
std::vector<std::int64_t> apply_readout_noise(const std::vector<std::int64_t>& histogram,
                                              const ReadoutModel& model, CounterRng& rng);

/// Noise applied to an exact distribution (no shot noise): p_out = M p_in.
std::vector<double> corrupt_distribution(const std::vector<double>& probabilities,
                                         const ReadoutModel& model);

}  // namespace qpdft::sim
