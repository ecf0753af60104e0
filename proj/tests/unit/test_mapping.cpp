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

#include <bit>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "common.hpp"
#include "fci/fci.hpp"
#include "io/fcidump.hpp"
#include "qubit/mapping.hpp"
#include "qubit/pauli.hpp"
#include "scf/active_space.hpp"
#include "test_util.hpp"

namespace {

using qpdft::Error;
using qpdft::ErrorKind;
using qpdft::qubit::PauliString;
using qpdft::qubit::PauliSum;
using qpdft::qubit::QubitMapping;
using qpdft::qubit::Scheme;
using qpdft::qubit::SectorLabel;

Eigen::MatrixXcd dense_sum(const PauliSum& sum) {
  const std::uint64_t dim = std::uint64_t{1} << sum.n_qubits();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [key, coefficient] : sum.terms()) {
    const PauliString p = sum.string_for(key);
    for (std::uint64_t ket = 0; ket < dim; ++ket) {
      const std::uint64_t bra = ket ^ p.x;
      out(bra, ket) += coefficient * qpdft::qubit::pauli_matrix_element(p, bra, ket);
    }
  }
  return out;
}

qpdft::scf::ActiveHamiltonian load_hamiltonian(const std::string& name) {
  const std::string text = qpdft::test::read_fixture("hamiltonians/" + name);
  return qpdft::scf::from_fcidump(qpdft::io::parse_fcidump(text));
}

double ground_eigenvalue(const PauliSum& sum) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense_sum(sum));
  return solver.eigenvalues()(0);
}

}  // namespace

TEST_CASE("parity transform inverts exactly") {
  const int n_modes = 6;
  for (std::uint64_t occ = 0; occ < (std::uint64_t{1} << n_modes); ++occ) {
    const std::uint64_t par = qpdft::qubit::occupation_to_parity(occ, n_modes);
    CHECK(qpdft::qubit::parity_to_occupation(par, n_modes) == occ);
    // Bit k of the parity string is the cumulative occupation parity 0..k.
    std::uint64_t running = 0;
    for (int k = 0; k < n_modes; ++k) {
      running ^= (occ >> k) & 1u;
      CHECK(((par >> k) & 1u) == running);
    }
  }
}

TEST_CASE("mapping registry reports sector and register sizes") {
  const QubitMapping jw = qpdft::qubit::make_mapping(Scheme::jordan_wigner, 3, 2, 1, false);
  CHECK(jw.n_modes() == 6);
  CHECK(jw.n_qubits() == 6);

  const QubitMapping tapered = qpdft::qubit::make_mapping(Scheme::parity, 3, 2, 1, true);
  CHECK(tapered.n_qubits() == 4);
  CHECK(tapered.sector().alpha_parity == +1);   // (-1)^2
  CHECK(tapered.sector().total_parity == -1);   // (-1)^3

  const QubitMapping closed = qpdft::qubit::make_mapping(Scheme::parity, 3, 2, 2, true);
  CHECK(closed.sector().alpha_parity == +1);
  CHECK(closed.sector().total_parity == +1);

  // Tapering is a parity-scheme construct.
  CHECK_THROWS_AS(qpdft::qubit::make_mapping(Scheme::jordan_wigner, 3, 2, 1, true), Error);
}

TEST_CASE("jordan-wigner hamiltonian reproduces the determinant spectrum") {
  const auto h = load_hamiltonian("h2_sto3g_r1.4.fcidump");
  const QubitMapping mapping = qpdft::qubit::make_mapping(Scheme::jordan_wigner, 2, 1, 1, false);
  const PauliSum mapped = qpdft::qubit::map_hamiltonian(h, mapping);

  CHECK(mapped.max_imaginary() < 1e-12);

  // The qubit register spans every electron count, so its ground eigenvalue
  // is the minimum over all sectors; for H2 that is the (1,1) FCI energy.
  // The mapped sum carries the core constant, so the comparison is direct.
  const double e_fci = qpdft::fci::fci_ground(h, 1, 1).energy;
  CHECK(ground_eigenvalue(mapped) == doctest::Approx(e_fci).epsilon(1e-12));

  // Block-diagonal in electron number: matrix elements between occupation
  // states of different particle count vanish.
  const Eigen::MatrixXcd dense = dense_sum(mapped);
  for (std::uint64_t bra = 0; bra < 16; ++bra)
    for (std::uint64_t ket = 0; ket < 16; ++ket)
      if (std::popcount(bra) != std::popcount(ket)) CHECK(std::abs(dense(bra, ket)) < 1e-12);
}

TEST_CASE("parity scheme is a relabeling: spectrum matches jordan-wigner") {
  const auto h = load_hamiltonian("h2_sto3g_r1.4.fcidump");
  const QubitMapping jw = qpdft::qubit::make_mapping(Scheme::jordan_wigner, 2, 1, 1, false);
  const QubitMapping parity = qpdft::qubit::make_mapping(Scheme::parity, 2, 1, 1, false);

  const Eigen::MatrixXcd a = dense_sum(qpdft::qubit::map_hamiltonian(h, jw));
  const Eigen::MatrixXcd b = dense_sum(qpdft::qubit::map_hamiltonian(h, parity));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sa(a);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> sb(b);
  CHECK((sa.eigenvalues() - sb.eigenvalues()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("tapered sector ground state matches the untapered energy") {
  // The headline 6->4 qubit reduction: fixing both parity eigenvalues must
  // not move the sector's ground energy.
  const auto h = load_hamiltonian("heh2_linear_3e3o.fcidump");
  const QubitMapping tapered = qpdft::qubit::make_mapping(Scheme::parity, 3, 2, 1, true);
  const PauliSum mapped = qpdft::qubit::map_hamiltonian(h, tapered);
  CHECK(mapped.n_qubits() == 4);

  const double e_fci = qpdft::fci::fci_ground(h, 2, 1).energy;
  CHECK(ground_eigenvalue(mapped) == doctest::Approx(e_fci).epsilon(1e-12));
}

TEST_CASE("taper rejects strings that flip a parity qubit") {
  PauliSum sum(6);
  PauliString x_on_parity(6);
  x_on_parity.x = std::uint64_t{1} << 2;  // qubit m-1 = 2 carries alpha parity
  sum.add(x_on_parity, std::complex<double>(1.0, 0.0));
  CHECK_THROWS_AS(qpdft::qubit::taper(sum, 3, SectorLabel{+1, -1}), Error);

  // Z on a parity qubit is legal: it collapses to the sector eigenvalue.
  PauliSum diagonal(6);
  PauliString z_on_parity(6);
  z_on_parity.z = std::uint64_t{1} << 5;
  diagonal.add(z_on_parity, std::complex<double>(2.0, 0.0));
  const PauliSum reduced = qpdft::qubit::taper(diagonal, 3, SectorLabel{+1, -1});
  CHECK(reduced.n_qubits() == 4);
  CHECK(reduced.constant().real() == doctest::Approx(-2.0));
  CHECK(std::abs(reduced.constant().imag()) < 1e-15);
}

TEST_CASE("determinant encoding round-trips through occupation decoding") {
  for (const bool tapered : {false, true}) {
    const QubitMapping mapping = qpdft::qubit::make_mapping(Scheme::parity, 3, 2, 1, tapered);
    for (std::uint64_t alpha = 0; alpha < 8; ++alpha) {
      if (std::popcount(alpha) != 2) continue;
      for (std::uint64_t beta = 0; beta < 8; ++beta) {
        if (std::popcount(beta) != 1) continue;
        const std::uint64_t index = qpdft::qubit::encode_determinant(alpha, beta, mapping);
        std::vector<std::complex<double>> state(std::uint64_t{1} << mapping.n_qubits());
        state[index] = 1.0;
        const auto occ = qpdft::qubit::decode_to_occupation(state, mapping);
        const std::uint64_t expected = alpha | (beta << 3);
        REQUIRE(occ.size() == 64);
        CHECK(std::abs(occ[expected] - std::complex<double>(1.0, 0.0)) < 1e-14);
      }
    }
  }
}

TEST_CASE("encoding rejects determinants outside the tapered sector") {
  const QubitMapping mapping = qpdft::qubit::make_mapping(Scheme::parity, 3, 2, 1, true);
  CHECK_THROWS_AS(qpdft::qubit::encode_determinant(0b111, 0b001, mapping), Error);
  CHECK_THROWS_AS(qpdft::qubit::encode_determinant(0b011, 0b011, mapping), Error);
}

TEST_CASE("sector basis enumerates the nine-state manifold") {
  for (const auto& counts : {std::pair<int, int>{2, 1}, std::pair<int, int>{2, 2}}) {
    const QubitMapping mapping =
        qpdft::qubit::make_mapping(Scheme::parity, 3, counts.first, counts.second, true);
    const auto states = qpdft::qubit::sector_basis_states(mapping);
    REQUIRE(states.size() == 9);
    for (std::size_t i = 1; i < states.size(); ++i) CHECK(states[i - 1] < states[i]);
    for (const std::uint64_t s : states) {
      std::vector<std::complex<double>> state(16);
      state[s] = 1.0;
      const auto occ = qpdft::qubit::decode_to_occupation(state, mapping);
      for (std::uint64_t full = 0; full < 64; ++full) {
        if (std::abs(occ[full]) < 0.5) continue;
        CHECK(std::popcount(full & 0b111u) == counts.first);
        CHECK(std::popcount((full >> 3) & 0b111u) == counts.second);
      }
    }
  }
}

TEST_CASE("mapped shift operators are hermitian and reproduce the 1-rdm") {
  const auto h = load_hamiltonian("h2_sto3g_r1.4.fcidump");
  const QubitMapping mapping = qpdft::qubit::make_mapping(Scheme::jordan_wigner, 2, 1, 1, false);

  const auto fci = qpdft::fci::fci_ground(h, 1, 1);
  const auto state = qpdft::fci::ci_to_statevector(fci.ground, fci.basis);

  for (int p = 0; p < 2; ++p) {
    for (int q = 0; q < 2; ++q) {
      PauliSum hermitized = qpdft::qubit::map_epq(p, q, mapping);
      hermitized.add(qpdft::qubit::map_epq(q, p, mapping));
      CHECK(hermitized.max_imaginary() < 1e-12);

      // <E_pq> on the Jordan-Wigner image of the CI vector is gamma_pq.
      const Eigen::MatrixXcd dense = dense_sum(qpdft::qubit::map_epq(p, q, mapping));
      Eigen::VectorXcd psi(16);
      for (int i = 0; i < 16; ++i) psi(i) = state[i];
      const std::complex<double> value = psi.dot(dense * psi);
      CHECK(value.real() == doctest::Approx(fci.rdms.gamma(p, q)).epsilon(1e-10));
      CHECK(std::abs(value.imag()) < 1e-12);
    }
  }
}

TEST_CASE("mapped ladder operators satisfy the anticommutation relations") {
  const QubitMapping mapping = qpdft::qubit::make_mapping(Scheme::jordan_wigner, 2, 1, 1, false);
  const int n = mapping.n_modes();
  std::vector<Eigen::MatrixXcd> create, destroy;
  for (int p = 0; p < n; ++p) {
    create.push_back(dense_sum(qpdft::qubit::map_ladder(p, true, mapping)));
    destroy.push_back(dense_sum(qpdft::qubit::map_ladder(p, false, mapping)));
  }
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(16, 16);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const Eigen::MatrixXcd anti = create[p] * destroy[q] + destroy[q] * create[p];
      const Eigen::MatrixXcd expected = p == q ? id : Eigen::MatrixXcd::Zero(16, 16);
      CHECK((anti - expected).cwiseAbs().maxCoeff() < 1e-12);
      const Eigen::MatrixXcd cc = create[p] * create[q] + create[q] * create[p];
      CHECK(cc.cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("two-body operator expectations reproduce the 2-rdm") {
  const auto h = load_hamiltonian("h2_sto3g_r1.4.fcidump");
  const QubitMapping mapping = qpdft::qubit::make_mapping(Scheme::jordan_wigner, 2, 1, 1, false);

  const auto fci = qpdft::fci::fci_ground(h, 1, 1);
  const auto state = qpdft::fci::ci_to_statevector(fci.ground, fci.basis);
  Eigen::VectorXcd psi(16);
  for (int i = 0; i < 16; ++i) psi(i) = state[i];

  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) {
          const Eigen::MatrixXcd dense = dense_sum(qpdft::qubit::map_dpqrs(p, q, r, s, mapping));
          const std::complex<double> value = psi.dot(dense * psi);
          CHECK(value.real() == doctest::Approx(fci.rdms.g2(p, q, r, s)).epsilon(1e-10));
          CHECK(std::abs(value.imag()) < 1e-12);
        }
}

TEST_CASE("excitation generators are hermitian and sector-preserving") {
  const QubitMapping mapping = qpdft::qubit::make_mapping(Scheme::parity, 3, 2, 1, true);
  const PauliSum single = qpdft::qubit::map_single_excitation(2, 0, mapping);
  const PauliSum doubled = qpdft::qubit::map_double_excitation(2, 4, 0, 3, mapping);
  for (const PauliSum* g : {&single, &doubled}) {
    CHECK(g->max_imaginary() < 1e-12);
    const Eigen::MatrixXcd dense = dense_sum(*g);
    CHECK((dense - dense.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  }
}
