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

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ansatz/ansatz.hpp"
#include "common.hpp"
#include "fci/fci.hpp"
#include "io/fcidump.hpp"
#include "qubit/mapping.hpp"
#include "scf/active_space.hpp"
#include "sim/statevector.hpp"
#include "test_util.hpp"

namespace {

using qpdft::CounterRng;
using qpdft::Error;
using qpdft::ansatz::Ansatz;
using qpdft::ansatz::Family;
using qpdft::qubit::QubitMapping;
using qpdft::qubit::Scheme;
using qpdft::sim::Statevector;

qpdft::scf::ActiveHamiltonian load_hamiltonian(const std::string& name) {
  const std::string text = qpdft::test::read_fixture("hamiltonians/" + name);
  return qpdft::scf::from_fcidump(qpdft::io::parse_fcidump(text));
}

std::vector<double> random_params(int n, CounterRng& rng) {
  std::vector<double> params(static_cast<std::size_t>(n));
  for (double& p : params) p = rng.uniform(-qpdft::constants::pi, qpdft::constants::pi);
  return params;
}

/// Probability-weighted alpha/beta counts and the out-of-sector probability
/// of a register state, via the occupation decoding.
struct SectorProbe {
  double mean_alpha = 0.0;
  double mean_beta = 0.0;
  double leaked = 0.0;
};

SectorProbe probe_sector(const Statevector& state, const QubitMapping& mapping) {
  const auto occ = qpdft::qubit::decode_to_occupation(state, mapping);
  const int m = mapping.n_spatial;
  const std::uint64_t low = (std::uint64_t{1} << m) - 1;
  SectorProbe probe;
  for (std::uint64_t full = 0; full < occ.size(); ++full) {
    const double weight = std::norm(occ[full]);
    if (weight == 0.0) continue;
    const int na = std::popcount(full & low);
    const int nb = std::popcount((full >> m) & low);
    probe.mean_alpha += weight * na;
    probe.mean_beta += weight * nb;
    if (na != mapping.n_alpha || nb != mapping.n_beta) probe.leaked += weight;
  }
  return probe;
}

}  // namespace

TEST_CASE("family names parse and print consistently") {
  for (const Family family : {Family::uccsd, Family::rouccsd, Family::chea, Family::ohea})
    CHECK(qpdft::ansatz::parse_family(qpdft::ansatz::family_name(family)) == family);
  CHECK_THROWS_AS(qpdft::ansatz::parse_family("adapt"), Error);
}

TEST_CASE("reference state prepares the aufbau determinant") {
  // (2e,2o) closed shell under Jordan-Wigner: modes 0 and 2 -> |0101> pattern.
  const QubitMapping jw = qpdft::qubit::make_mapping(Scheme::jordan_wigner, 2, 1, 1, false);
  const Statevector state = qpdft::sim::run_circuit(qpdft::ansatz::reference_state(jw), {});
  CHECK(std::abs(state[0b0101] - std::complex<double>(1.0, 0.0)) < 1e-15);

  // Its energy is the RHF determinant energy.
  const auto h2 = load_hamiltonian("h2_sto3g_r1.4.fcidump");
  const auto mapped = qpdft::qubit::map_hamiltonian(h2, jw);
  CHECK(qpdft::sim::expectation(state, mapped) ==
        doctest::Approx(-1.116714325176).epsilon(1e-11));

  // Open-shell (3e,3o) on the tapered register preserves both counts.
  const QubitMapping tapered = qpdft::qubit::make_mapping(Scheme::parity, 3, 2, 1, true);
  const Statevector open_state =
      qpdft::sim::run_circuit(qpdft::ansatz::reference_state(tapered), {});
  const SectorProbe probe = probe_sector(open_state, tapered);
  CHECK(probe.mean_alpha == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(probe.mean_beta == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(probe.leaked < 1e-15);
}

TEST_CASE("uccsd enumerates spin-conserving excitations") {
  const QubitMapping jw = qpdft::qubit::make_mapping(Scheme::jordan_wigner, 2, 1, 1, false);
  const auto list = qpdft::ansatz::enumerate_excitations(Family::uccsd, jw);
  REQUIRE(list.size() == 3);  // alpha single, beta single, one double
  int singles = 0, doubles = 0;
  for (const auto& exc : list) (exc.is_single() ? singles : doubles) += 1;
  CHECK(singles == 2);
  CHECK(doubles == 1);
  // Singles precede doubles.
  CHECK(list[0].is_single());
  CHECK(list[1].is_single());
  CHECK_FALSE(list[2].is_single());

  // Family/sector mismatches are rejected.
  const QubitMapping open_shell = qpdft::qubit::make_mapping(Scheme::parity, 3, 2, 1, true);
  CHECK_THROWS_AS(qpdft::ansatz::enumerate_excitations(Family::uccsd, open_shell), Error);
  CHECK_THROWS_AS(qpdft::ansatz::enumerate_excitations(Family::chea, jw), Error);
  const QubitMapping closed4 = qpdft::qubit::make_mapping(Scheme::parity, 3, 2, 2, true);
  CHECK_THROWS_AS(qpdft::ansatz::enumerate_excitations(Family::rouccsd, closed4), Error);
}

TEST_CASE("rouccsd covers the open-shell excitation set") {
  const QubitMapping tapered = qpdft::qubit::make_mapping(Scheme::parity, 3, 2, 1, true);
  const auto list = qpdft::ansatz::enumerate_excitations(Family::rouccsd, tapered);
  REQUIRE(list.size() == 8);
  int singles = 0, doubles = 0;
  for (const auto& exc : list) (exc.is_single() ? singles : doubles) += 1;
  CHECK(singles == 4);  // two alpha, two beta (through the singly occupied shell)
  CHECK(doubles == 4);  // alpha-beta pairs into the mixed virtuals
}

TEST_CASE("zero parameters reproduce the reference energy") {
  // UCCSD on H2: identity at theta = 0, so the energy is the RHF value.
  const QubitMapping jw = qpdft::qubit::make_mapping(Scheme::jordan_wigner, 2, 1, 1, false);
  const Ansatz uccsd = qpdft::ansatz::build_ansatz(Family::uccsd, jw);
  CHECK(uccsd.circuit.n_params == 3);
  const auto h2 = load_hamiltonian("h2_sto3g_r1.4.fcidump");
  const auto mapped2 = qpdft::qubit::map_hamiltonian(h2, jw);
  const Statevector at_zero =
      qpdft::sim::run_circuit(uccsd.circuit, std::vector<double>(3, 0.0));
  CHECK(qpdft::sim::expectation(at_zero, mapped2) ==
        doctest::Approx(-1.116714325176).epsilon(1e-11));

  // ROUCCSD on the tapered open-shell register: the Aufbau diagonal element.
  const auto heh2 = load_hamiltonian("heh2_linear_3e3o.fcidump");
  const QubitMapping tapered = qpdft::qubit::make_mapping(Scheme::parity, 3, 2, 1, true);
  const Ansatz rouccsd = qpdft::ansatz::build_ansatz(Family::rouccsd, tapered);
  CHECK(rouccsd.circuit.n_params == 8);
  const auto mapped3 = qpdft::qubit::map_hamiltonian(heh2, tapered);
  const Statevector open_zero =
      qpdft::sim::run_circuit(rouccsd.circuit, std::vector<double>(8, 0.0));

  const auto basis = qpdft::fci::make_basis(3, 2, 1);
  const Eigen::MatrixXd dense = qpdft::fci::dense_hamiltonian(heh2, basis);
  const auto aufbau = static_cast<Eigen::Index>(
      basis.index(basis.alpha_rank.at(0b011), basis.beta_rank.at(0b001)));
  CHECK(qpdft::sim::expectation(open_zero, mapped3) ==
        doctest::Approx(dense(aufbau, aufbau) + heh2.core_energy).epsilon(1e-11));
}

TEST_CASE("gadget and sector compilations agree on the reachable states") {
  const QubitMapping tapered = qpdft::qubit::make_mapping(Scheme::parity, 3, 2, 1, true);
  const auto excitations = qpdft::ansatz::enumerate_excitations(Family::rouccsd, tapered);
  const auto gadget = qpdft::sim::concatenate(
      qpdft::ansatz::reference_state(tapered),
      qpdft::ansatz::compile_excitations_gadget(excitations, tapered));
  const auto sector = qpdft::sim::concatenate(
      qpdft::ansatz::reference_state(tapered),
      qpdft::ansatz::compile_excitations_sector(excitations, tapered));
  CHECK(gadget.n_params == sector.n_params);
  CHECK(sector.depth() < gadget.depth());

  CounterRng rng(314);
  for (int trial = 0; trial < 5; ++trial) {
    const auto params = random_params(gadget.n_params, rng);
    const Statevector a = qpdft::sim::run_circuit(gadget, params);
    const Statevector b = qpdft::sim::run_circuit(sector, params);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("all families conserve the electron-count sector") {
  const auto families = {Family::uccsd, Family::rouccsd, Family::chea, Family::ohea};
  CounterRng rng(2718);
  for (const Family family : families) {
    CAPTURE(qpdft::ansatz::family_name(family));
    const QubitMapping mapping =
        family == Family::uccsd
            ? qpdft::qubit::make_mapping(Scheme::jordan_wigner, 2, 1, 1, false)
            : (family == Family::chea
                   ? qpdft::qubit::make_mapping(Scheme::parity, 3, 2, 2, true)
                   : qpdft::qubit::make_mapping(Scheme::parity, 3, 2, 1, true));
    const Ansatz ansatz = qpdft::ansatz::build_ansatz(family, mapping);
    for (int trial = 0; trial < 3; ++trial) {
      const auto params = random_params(ansatz.circuit.n_params, rng);
      const Statevector state = qpdft::sim::run_circuit(ansatz.circuit, params);
      const SectorProbe probe = probe_sector(state, mapping);
      CHECK(probe.mean_alpha == doctest::Approx(double(mapping.n_alpha)).epsilon(1e-10));
      CHECK(probe.mean_beta == doctest::Approx(double(mapping.n_beta)).epsilon(1e-10));
      CHECK(probe.leaked < 1e-12);
    }
  }
}

TEST_CASE("hea layouts have the published depth and gate budget") {
  const QubitMapping closed = qpdft::qubit::make_mapping(Scheme::parity, 3, 2, 2, true);
  const Ansatz chea = qpdft::ansatz::build_ansatz(Family::chea, closed);
  CHECK(chea.circuit.depth() == 4);
  CHECK(chea.circuit.n_params == 7);
  CHECK(chea.excitations.empty());

  const QubitMapping open = qpdft::qubit::make_mapping(Scheme::parity, 3, 2, 1, true);
  const Ansatz ohea = qpdft::ansatz::build_ansatz(Family::ohea, open);
  CHECK(ohea.circuit.depth() == 6);
  CHECK(ohea.circuit.n_params == 9);

  // Gate alphabet: X prefix plus Ry/CRy only.
  for (const Ansatz* ansatz : {&chea, &ohea})
    for (const auto& gate : ansatz->circuit.gates)
      CHECK((gate.kind == qpdft::sim::GateKind::x || gate.kind == qpdft::sim::GateKind::ry ||
             gate.kind == qpdft::sim::GateKind::cry));
}

TEST_CASE("hea states stay inside the nine-state manifold") {
  struct Layout {
    Family family;
    int n_beta;
  };
  for (const Layout layout : {Layout{Family::chea, 2}, Layout{Family::ohea, 1}}) {
    CAPTURE(qpdft::ansatz::family_name(layout.family));
    const QubitMapping mapping =
        qpdft::qubit::make_mapping(Scheme::parity, 3, 2, layout.n_beta, true);
    const Ansatz ansatz = qpdft::ansatz::build_ansatz(layout.family, mapping);
    REQUIRE(ansatz.manifold.size() == 9);

    // The manifold factorizes into three allowed patterns per qubit pair.
    std::set<std::uint64_t> low_patterns, high_patterns;
    for (const std::uint64_t s : ansatz.manifold) {
      low_patterns.insert(s & 0b11u);
      high_patterns.insert((s >> 2) & 0b11u);
    }
    CHECK(low_patterns.size() == 3);
    CHECK(high_patterns.size() == 3);
    CHECK(low_patterns.count(0b00) == 0);  // first pair never |00>
    if (layout.family == Family::chea)
      CHECK(high_patterns.count(0b00) == 0);
    else
      CHECK(high_patterns.count(0b01) == 0);  // open pair never (q2,q3) = (1,0)

    CounterRng rng(999 + layout.n_beta);
    double worst_leak = 0.0;
    for (int draw = 0; draw < 1000; ++draw) {
      const auto params = random_params(ansatz.circuit.n_params, rng);
      const Statevector state = qpdft::sim::run_circuit(ansatz.circuit, params);
      double outside = 0.0;
      for (std::uint64_t index = 0; index < state.size(); ++index) {
        if (std::find(ansatz.manifold.begin(), ansatz.manifold.end(), index) ==
            ansatz.manifold.end())
          outside += std::norm(state[index]);
      }
      worst_leak = std::max(worst_leak, outside);
    }
    CHECK(worst_leak < 1e-12);
  }
}

TEST_CASE("hea construction rejects incompatible registers") {
  const QubitMapping open = qpdft::qubit::make_mapping(Scheme::parity, 3, 2, 1, true);
  const QubitMapping closed = qpdft::qubit::make_mapping(Scheme::parity, 3, 2, 2, true);
  CHECK_THROWS_AS(qpdft::ansatz::build_ansatz(Family::chea, open), Error);
  CHECK_THROWS_AS(qpdft::ansatz::build_ansatz(Family::ohea, closed), Error);

  const QubitMapping untapered = qpdft::qubit::make_mapping(Scheme::parity, 3, 2, 1, false);
  CHECK_THROWS_AS(qpdft::ansatz::build_ansatz(Family::ohea, untapered), Error);
  const QubitMapping jw = qpdft::qubit::make_mapping(Scheme::jordan_wigner, 2, 1, 1, false);
  CHECK_THROWS_AS(qpdft::ansatz::build_ansatz(Family::chea, jw), Error);
}

TEST_CASE("rouccsd compiled depth sits in the published band") {
  const QubitMapping tapered = qpdft::qubit::make_mapping(Scheme::parity, 3, 2, 1, true);
  const Ansatz rouccsd = qpdft::ansatz::build_ansatz(Family::rouccsd, tapered);
  // Logical depth (longest gate dependency chain past the X prefix); the
  // published figure is 45 with a +-20% compilation-freedom band.
  CHECK(rouccsd.circuit.depth() >= 36);
  CHECK(rouccsd.circuit.depth() <= 54);
}
