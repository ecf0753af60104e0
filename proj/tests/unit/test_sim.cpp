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

#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "common.hpp"
#include "io/fcidump.hpp"
#include "qubit/mapping.hpp"
#include "qubit/pauli.hpp"
#include "scf/active_space.hpp"
#include "sim/circuit.hpp"
#include "sim/readout.hpp"
#include "sim/statevector.hpp"
#include "test_util.hpp"

namespace {

using qpdft::CounterRng;
using qpdft::Error;
using qpdft::qubit::PauliString;
using qpdft::qubit::PauliSum;
using qpdft::sim::Circuit;
using qpdft::sim::ReadoutModel;
using qpdft::sim::Statevector;

using cd = std::complex<double>;

Eigen::Matrix2cd ry_matrix(double angle) {
  Eigen::Matrix2cd m;
  m << std::cos(0.5 * angle), -std::sin(0.5 * angle),
       std::sin(0.5 * angle), std::cos(0.5 * angle);
  return m;
}

Eigen::Matrix2cd rz_matrix(double angle) {
  Eigen::Matrix2cd m;
  m << std::exp(cd(0.0, -0.5 * angle)), 0.0, 0.0, std::exp(cd(0.0, 0.5 * angle));
  return m;
}

/// Embed a single-qubit matrix on qubit q of an n-qubit register
/// (basis index bit q = value of qubit q).
Eigen::MatrixXcd embed_1q(const Eigen::Matrix2cd& u, int q, int n) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  const std::uint64_t bit = std::uint64_t{1} << q;
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & bit) continue;
    out(i, i) = u(0, 0);
    out(i, i | bit) = u(0, 1);
    out(i | bit, i) = u(1, 0);
    out(i | bit, i | bit) = u(1, 1);
  }
  return out;
}

Eigen::VectorXcd to_eigen(const Statevector& state) {
  Eigen::VectorXcd v(state.size());
  for (std::size_t i = 0; i < state.size(); ++i) v(i) = state[i];
  return v;
}

}  // namespace

TEST_CASE("empty circuit leaves the all-zero state") {
  const Circuit circuit(3, 0);
  const Statevector state = qpdft::sim::run_circuit(circuit, {});
  CHECK(std::abs(state[0] - cd(1.0, 0.0)) < 1e-15);
  for (std::size_t i = 1; i < state.size(); ++i) CHECK(std::abs(state[i]) < 1e-15);
}

TEST_CASE("single-qubit gates match their dense matrices") {
  const int n = 2;
  CounterRng rng(11);
  // A scrambled but normalized 2-qubit state to probe linearity off-axis.
  Statevector base = qpdft::sim::zero_state(n);
  base = {cd(0.5, 0.1), cd(-0.3, 0.2), cd(0.4, -0.4), cd(0.1, 0.55)};
  const double scale = qpdft::sim::norm(base);
  for (auto& amplitude : base) amplitude /= scale;

  for (int q = 0; q < n; ++q) {
    const double angle = rng.uniform(-3.0, 3.0);

    Eigen::Matrix2cd x;
    x << 0, 1, 1, 0;
    Eigen::Matrix2cd h;
    h << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 1 / std::sqrt(2.0), -1 / std::sqrt(2.0);

    struct Probe {
      qpdft::sim::GateKind kind;
      Eigen::Matrix2cd matrix;
    };
    const Probe probes[] = {
        {qpdft::sim::GateKind::x, x},
        {qpdft::sim::GateKind::h, h},
        {qpdft::sim::GateKind::ry, ry_matrix(angle)},
        {qpdft::sim::GateKind::rz, rz_matrix(angle)},
    };
    for (const Probe& probe : probes) {
      Statevector state = base;
      qpdft::sim::Gate gate;
      gate.kind = probe.kind;
      gate.q0 = q;
      qpdft::sim::apply_gate(state, gate, angle);
      const Eigen::VectorXcd expected = embed_1q(probe.matrix, q, n) * to_eigen(base);
      CHECK((to_eigen(state) - expected).cwiseAbs().maxCoeff() < 1e-14);
    }
  }
}

TEST_CASE("two-qubit gates act on the correct control/target pair") {
  // CNOT(0 -> 1) maps |01> (qubit0 = 1) to |11>.
  Statevector state = qpdft::sim::zero_state(2);
  state = {0.0, 1.0, 0.0, 0.0};
  qpdft::sim::Gate cnot;
  cnot.kind = qpdft::sim::GateKind::cnot;
  cnot.q0 = 0;
  cnot.q1 = 1;
  qpdft::sim::apply_gate(state, cnot, 0.0);
  CHECK(std::abs(state[3] - cd(1.0, 0.0)) < 1e-15);

  // CZ flips the sign of |11> only.
  Statevector cz_state = {0.5, 0.5, 0.5, 0.5};
  qpdft::sim::Gate cz;
  cz.kind = qpdft::sim::GateKind::cz;
  cz.q0 = 0;
  cz.q1 = 1;
  qpdft::sim::apply_gate(cz_state, cz, 0.0);
  CHECK(std::abs(cz_state[3] - cd(-0.5, 0.0)) < 1e-15);
  CHECK(std::abs(cz_state[1] - cd(0.5, 0.0)) < 1e-15);

  // CRy rotates the target only in the control = 1 subspace.
  const double angle = 0.83;
  Statevector cry_state = {0.5, 0.5, 0.5, 0.5};
  qpdft::sim::Gate cry;
  cry.kind = qpdft::sim::GateKind::cry;
  cry.q0 = 0;
  cry.q1 = 1;
  qpdft::sim::apply_gate(cry_state, cry, angle);
  const double c = std::cos(0.5 * angle), s = std::sin(0.5 * angle);
  CHECK(std::abs(cry_state[0] - cd(0.5, 0.0)) < 1e-15);   // control 0: untouched
  CHECK(std::abs(cry_state[2] - cd(0.5, 0.0)) < 1e-15);
  CHECK(std::abs(cry_state[1] - cd(0.5 * (c - s), 0.0)) < 1e-14);
  CHECK(std::abs(cry_state[3] - cd(0.5 * (s + c), 0.0)) < 1e-14);
}

TEST_CASE("ry(pi) flips |0> to |1>") {
  Circuit circuit(1, 0);
  circuit.ry_fixed(0, qpdft::constants::pi);
  const Statevector state = qpdft::sim::run_circuit(circuit, {});
  CHECK(std::abs(state[0]) < 1e-15);
  CHECK(std::abs(std::abs(state[1]) - 1.0) < 1e-14);
}

TEST_CASE("angles resolve as offset plus scale times the bound parameter") {
  Circuit circuit(1, 1);
  circuit.ry(0, 0, 2.0, 0.3);  // angle = 0.3 + 2 * theta
  const Statevector bound = qpdft::sim::run_circuit(circuit, {0.25});

  Circuit fixed(1, 0);
  fixed.ry_fixed(0, 0.8);
  const Statevector reference = qpdft::sim::run_circuit(fixed, {});
  CHECK((to_eigen(bound) - to_eigen(reference)).cwiseAbs().maxCoeff() < 1e-15);

  // Slot count mismatch is a dimension error.
  CHECK_THROWS_AS(qpdft::sim::run_circuit(circuit, {}), Error);
}

TEST_CASE("gate shifts add to resolved angles") {
  Circuit circuit(1, 1);
  circuit.ry(0, 0);
  const std::map<std::size_t, double> shifts = {{0, 0.5}};
  const Statevector shifted = qpdft::sim::run_circuit(circuit, {0.2}, &shifts);
  const Statevector direct = qpdft::sim::run_circuit(circuit, {0.7});
  CHECK((to_eigen(shifted) - to_eigen(direct)).cwiseAbs().maxCoeff() < 1e-15);

  // Shifting a non-parameterized gate is rejected.
  Circuit with_x(1, 0);
  with_x.x(0);
  const std::map<std::size_t, double> bad = {{0, 0.5}};
  CHECK_THROWS_AS(qpdft::sim::run_circuit(with_x, {}, &bad), Error);
}

TEST_CASE("random circuits preserve the norm") {
  CounterRng rng(42);
  Circuit circuit(4, 6);
  circuit.h(0);
  circuit.ry(1, 0);
  circuit.cnot(0, 2);
  circuit.cry(2, 3, 1);
  circuit.rz(2, 2);
  circuit.cz(1, 3);
  circuit.ry(0, 3);
  circuit.cry(3, 1, 4);
  circuit.rz(0, 5, -2.0, 0.1);
  circuit.x(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> params(6);
    for (double& p : params) p = rng.uniform(-qpdft::constants::pi, qpdft::constants::pi);
    const Statevector state = qpdft::sim::run_circuit(circuit, params);
    CHECK(std::abs(qpdft::sim::norm(state) - 1.0) < 1e-12);
  }
}

TEST_CASE("expectation values: identity, z, and the hf determinant energy") {
  const Statevector zero = qpdft::sim::zero_state(1);

  PauliSum identity(1);
  identity.add(PauliString{1, 0, 0}, cd(1.0, 0.0));
  CHECK(qpdft::sim::expectation(zero, identity) == doctest::Approx(1.0).epsilon(1e-15));

  PauliSum z(1);
  z.add(PauliString{1, 0, 1}, cd(1.0, 0.0));
  CHECK(qpdft::sim::expectation(zero, z) == doctest::Approx(1.0).epsilon(1e-15));

  // <HF|H|HF> over the Jordan-Wigner image equals the RHF energy (the mapped
  // sum already carries the core constant).
  const auto text = qpdft::test::read_fixture("hamiltonians/h2_sto3g_r1.4.fcidump");
  const auto h = qpdft::scf::from_fcidump(qpdft::io::parse_fcidump(text));
  const auto mapping = qpdft::qubit::make_mapping(qpdft::qubit::Scheme::jordan_wigner, 2, 1, 1, false);
  const PauliSum mapped = qpdft::qubit::map_hamiltonian(h, mapping);
  Statevector hf = qpdft::sim::zero_state(4);
  hf[0] = 0.0;
  hf[0b0101] = 1.0;  // modes 0 (alpha) and 2 (beta) occupied
  CHECK(qpdft::sim::expectation(hf, mapped) ==
        doctest::Approx(-1.116714325176).epsilon(1e-11));
}

TEST_CASE("expectation rejects non-hermitian observables") {
  PauliSum crooked(1);
  crooked.add(PauliString{1, 1, 0}, cd(0.0, 1.0));  // i * X
  const Statevector zero = qpdft::sim::zero_state(1);
  CHECK_THROWS_AS(qpdft::sim::expectation(zero, crooked), Error);

  PauliSum wrong_register(2);
  wrong_register.add(PauliString{2, 0, 1}, cd(1.0, 0.0));
  CHECK_THROWS_AS(qpdft::sim::expectation(zero, wrong_register), Error);
}

TEST_CASE("parameter-shift identity matches finite differences") {
  // d<Z>/dtheta for Ry(theta)|0> via two pi/2-shifted evaluations.
  Circuit circuit(1, 1);
  circuit.ry(0, 0);
  PauliSum z(1);
  z.add(PauliString{1, 0, 1}, cd(1.0, 0.0));

  const double theta = 0.37;
  const auto value = [&](double shift) {
    const std::map<std::size_t, double> shifts = {{0, shift}};
    return qpdft::sim::expectation(qpdft::sim::run_circuit(circuit, {theta}, &shifts), z);
  };
  const double half_pi = 0.5 * qpdft::constants::pi;
  const double shift_gradient = 0.5 * (value(half_pi) - value(-half_pi));
  const double step = 1e-5;
  const double fd_gradient = (value(step) - value(-step)) / (2.0 * step);
  CHECK(shift_gradient == doctest::Approx(fd_gradient).epsilon(1e-7));
  CHECK(shift_gradient == doctest::Approx(-std::sin(theta)).epsilon(1e-12));
}

TEST_CASE("sampling is reproducible and statistically sound") {
  // A deterministic state yields a single bin.
  Statevector basis_state = qpdft::sim::zero_state(2);
  basis_state[0] = 0.0;
  basis_state[1] = 1.0;
  CounterRng rng_a(123);
  const auto pure = qpdft::sim::sample(basis_state, 500, rng_a);
  CHECK(pure[1] == 500);

  // Identical seeds replay identical histograms.
  Circuit circuit(2, 0);
  circuit.h(0);
  circuit.ry_fixed(1, 0.7);
  const Statevector state = qpdft::sim::run_circuit(circuit, {});
  CounterRng rng_b(77), rng_c(77);
  const auto first = qpdft::sim::sample(state, 2048, rng_b);
  const auto second = qpdft::sim::sample(state, 2048, rng_c);
  CHECK(first == second);
  CHECK(std::accumulate(first.begin(), first.end(), std::int64_t{0}) == 2048);

  // |+> at 2048 shots: P(0) within 5 sigma of 1/2.
  Circuit plus(1, 0);
  plus.h(0);
  CounterRng rng_d(5);
  const auto hist = qpdft::sim::sample(qpdft::sim::run_circuit(plus, {}), 2048, rng_d);
  const double p0 = static_cast<double>(hist[0]) / 2048.0;
  CHECK(std::abs(p0 - 0.5) < 5.0 * std::sqrt(0.25 / 2048.0));

  // Estimated <Z> converges to the exact expectation (3 sigma at 2^16 shots).
  Circuit rotated(1, 0);
  rotated.ry_fixed(0, 0.7);
  const Statevector rot_state = qpdft::sim::run_circuit(rotated, {});
  CounterRng rng_e(9);
  const std::int64_t shots = 1 << 16;
  const auto z_hist = qpdft::sim::sample(rot_state, shots, rng_e);
  const double exact = std::cos(0.7);
  const double estimated = qpdft::sim::histogram_z_expectation(z_hist, 1);
  const double sigma = std::sin(0.7) / std::sqrt(static_cast<double>(shots));
  CHECK(std::abs(estimated - exact) < 3.0 * sigma);
}

TEST_CASE("histogram z expectation counts parities") {
  // 2-qubit histogram: 30 shots of |00>, 10 of |11>, zmask over both qubits.
  const std::vector<std::int64_t> histogram = {30, 0, 0, 10};
  CHECK(qpdft::sim::histogram_z_expectation(histogram, 0b11) == doctest::Approx(1.0));
  CHECK(qpdft::sim::histogram_z_expectation(histogram, 0b01) ==
        doctest::Approx((30.0 - 10.0) / 40.0));
  const std::vector<std::int64_t> empty = {0, 0, 0, 0};
  CHECK_THROWS_AS(qpdft::sim::histogram_z_expectation(empty, 1), Error);
}

TEST_CASE("readout model elements compose per qubit") {
  const ReadoutModel model = ReadoutModel::per_qubit({{0.9835, 0.9588}, {0.9, 0.85}});
  CHECK(model.n_qubits() == 2);
  CHECK(model.is_tensor());

  // P(seen | truth) factorizes: qubit 0 fidelity pair (0.9835, 0.9588).
  CHECK(model.element(0b00, 0b00) == doctest::Approx(0.9835 * 0.9).epsilon(1e-12));
  CHECK(model.element(0b01, 0b00) == doctest::Approx((1 - 0.9835) * 0.9).epsilon(1e-12));
  CHECK(model.element(0b11, 0b11) == doctest::Approx(0.9588 * 0.85).epsilon(1e-12));
  CHECK(model.element(0b00, 0b11) ==
        doctest::Approx((1 - 0.9588) * (1 - 0.85)).epsilon(1e-12));

  // The dense expansion is column stochastic and matches element().
  const Eigen::MatrixXd dense = model.dense();
  for (int col = 0; col < 4; ++col) {
    CHECK(dense.col(col).sum() == doctest::Approx(1.0).epsilon(1e-12));
    for (int row = 0; row < 4; ++row)
      CHECK(dense(row, col) ==
            doctest::Approx(model.element(std::uint64_t(row), std::uint64_t(col))).epsilon(1e-12));
  }

  // Tensor models commute with qubit relabeling.
  const ReadoutModel swapped = ReadoutModel::per_qubit({{0.9, 0.85}, {0.9835, 0.9588}});
  const auto swap_bits = [](std::uint64_t b) { return ((b & 1u) << 1) | ((b >> 1) & 1u); };
  for (std::uint64_t seen = 0; seen < 4; ++seen)
    for (std::uint64_t truth = 0; truth < 4; ++truth)
      CHECK(model.element(seen, truth) ==
            doctest::Approx(swapped.element(swap_bits(seen), swap_bits(truth))).epsilon(1e-12));
}

TEST_CASE("explicit confusion matrices are validated") {
  Eigen::MatrixXd stochastic(2, 2);
  stochastic << 0.95, 0.2, 0.05, 0.8;
  const ReadoutModel model = ReadoutModel::from_matrix(stochastic);
  CHECK_FALSE(model.is_tensor());
  CHECK(model.element(1, 0) == doctest::Approx(0.05));

  Eigen::MatrixXd broken(2, 2);
  broken << 0.9, 0.2, 0.05, 0.8;  // first column sums to 0.95
  CHECK_THROWS_AS(ReadoutModel::from_matrix(broken), Error);

  Eigen::MatrixXd negative(2, 2);
  negative << 1.1, 0.2, -0.1, 0.8;
  CHECK_THROWS_AS(ReadoutModel::from_matrix(negative), Error);
}

TEST_CASE("identity readout leaves histograms unchanged") {
  const ReadoutModel identity = ReadoutModel::identity(2);
  const std::vector<std::int64_t> histogram = {100, 50, 25, 25};
  CounterRng rng(3);
  CHECK(qpdft::sim::apply_readout_noise(histogram, identity, rng) == histogram);
}

TEST_CASE("readout corruption conserves shots and replays per seed") {
  const ReadoutModel model = ReadoutModel::uniform(2, 0.9835, 0.9588);
  const std::vector<std::int64_t> histogram = {1000, 200, 300, 548};
  CounterRng rng_a(21), rng_b(21);
  const auto noisy_a = qpdft::sim::apply_readout_noise(histogram, model, rng_a);
  const auto noisy_b = qpdft::sim::apply_readout_noise(histogram, model, rng_b);
  CHECK(noisy_a == noisy_b);
  CHECK(std::accumulate(noisy_a.begin(), noisy_a.end(), std::int64_t{0}) == 2048);

  // Single-qubit all-zero histogram: ~165 of 10000 shots flip (5 sigma band).
  const ReadoutModel one_qubit = ReadoutModel::uniform(1, 0.9835, 0.9588);
  const std::vector<std::int64_t> all_zero = {10000, 0};
  CounterRng rng_c(8);
  const auto flipped = qpdft::sim::apply_readout_noise(all_zero, one_qubit, rng_c);
  const double sigma = std::sqrt(10000.0 * 0.0165 * 0.9835);
  CHECK(std::abs(static_cast<double>(flipped[1]) - 165.0) < 5.0 * sigma);
}

TEST_CASE("corrupting an exact distribution multiplies by the confusion matrix") {
  const ReadoutModel model = ReadoutModel::per_qubit({{0.97, 0.93}, {0.99, 0.91}});
  const std::vector<double> p = {0.4, 0.3, 0.2, 0.1};
  const auto corrupted = qpdft::sim::corrupt_distribution(p, model);
  Eigen::VectorXd pv(4);
  for (int i = 0; i < 4; ++i) pv(i) = p[i];
  const Eigen::VectorXd expected = model.dense() * pv;
  REQUIRE(corrupted.size() == 4);
  for (int i = 0; i < 4; ++i)
    CHECK(corrupted[i] == doctest::Approx(expected(i)).epsilon(1e-12));
  CHECK(std::accumulate(corrupted.begin(), corrupted.end(), 0.0) ==
        doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(qpdft::sim::corrupt_distribution({0.5, 0.5}, model), Error);
}
