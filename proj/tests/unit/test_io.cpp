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
#include <string>

#include "io/fcidump.hpp"
#include "io/frame_table.hpp"
#include "io/geometry.hpp"
#include "io/results.hpp"
#include "test_util.hpp"

using namespace qpdft;
using namespace qpdft::io;

TEST_SUITE("io_formats") {

TEST_CASE("fcidump header fields echo back") {
  const std::string text =
      "&FCI NORB=3,NELEC=4,MS2=0,\n"
      "  ORBSYM=1,1,1,\n"
      "  ISYM=1,\n"
      "&END\n"
      "  0.5  1 1 1 1\n"
      "  1.25 1 1 0 0\n"
      "  7.5  0 0 0 0\n";
  const Fcidump dump = parse_fcidump(text);
  CHECK(dump.norb == 3);
  CHECK(dump.nelec == 4);
  CHECK(dump.ms2 == 0);
  CHECK(dump.orbsym.size() == 3);
  CHECK(dump.core_energy == 7.5);
  CHECK(dump.one_body(0, 0) == 1.25);
}

TEST_CASE("fcidump two-body entries close under 8-fold permutation") {
  const std::string text =
      "&FCI NORB=3,NELEC=3,MS2=1,\n&END\n"
      "  0.5   1 2 3 1\n";
  const Fcidump dump = parse_fcidump(text);
  // (pq|rs) = (qp|rs) = (pq|sr) = (qp|sr) = (rs|pq) = (sr|pq) = (rs|qp) = (sr|qp)
  CHECK(dump.two_body(0, 1, 2, 0) == 0.5);
  CHECK(dump.two_body(1, 0, 2, 0) == 0.5);
  CHECK(dump.two_body(0, 1, 0, 2) == 0.5);
  CHECK(dump.two_body(1, 0, 0, 2) == 0.5);
  CHECK(dump.two_body(2, 0, 0, 1) == 0.5);
  CHECK(dump.two_body(0, 2, 0, 1) == 0.5);
  CHECK(dump.two_body(2, 0, 1, 0) == 0.5);
  CHECK(dump.two_body(0, 2, 1, 0) == 0.5);
  CHECK(dump.two_body(0, 0, 0, 0) == 0.0);
}

TEST_CASE("fcidump parse-emit round-trip is bit-identical") {
  const std::string original = test::read_fixture("hamiltonians/h2_sto3g_r1.4.fcidump");
  const Fcidump first = parse_fcidump(original);
  const std::string emitted = emit_fcidump(first);
  const Fcidump second = parse_fcidump(emitted);
  CHECK(first.norb == second.norb);
  CHECK(first.nelec == second.nelec);
  CHECK(first.ms2 == second.ms2);
  CHECK(first.core_energy == second.core_energy);
  CHECK(first.h == second.h);
  CHECK(first.eri == second.eri);
  // Emission is deterministic, so a second emit matches byte-for-byte.
  CHECK(emit_fcidump(second) == emitted);
}

TEST_CASE("fcidump rejects malformed input with line context") {
  CHECK_THROWS_WITH_AS(parse_fcidump("NORB=2\n"), doctest::Contains("header"), Error);
  CHECK_THROWS_AS(parse_fcidump("&FCI NORB=2,NELEC=2,MS2=0,\n&END\n 0.5 3 1 1 1\n"), Error);
  CHECK_THROWS_AS(parse_fcidump("&FCI NORB=2,NELEC=2,MS2=0,\n&END\n 0.5 x 1 1 1\n"), Error);
  // Duplicate entries that disagree by more than 1e-10 are rejected ...
  CHECK_THROWS_AS(parse_fcidump("&FCI NORB=2,NELEC=2,MS2=0,\n&END\n"
                                " 0.5 1 1 1 1\n 0.6 1 1 1 1\n"),
                  Error);
  // ... while agreeing duplicates are tolerated.
  CHECK_NOTHROW(parse_fcidump("&FCI NORB=2,NELEC=2,MS2=0,\n&END\n"
                              " 0.5 1 1 1 1\n 0.5 1 1 1 1\n"));
}

TEST_CASE("frame table parses the published row values") {
  const FrameTable table = parse_frame_table(test::read_fixture("marcus/hea_frames.csv"));
  CHECK(table.rows.size() == 20);
  CHECK(table.has_delta_g);
  CHECK(table.has_lambda);
  CHECK(table.has_h_da);
  CHECK(table.has_h_da_sq);
  const auto& last = table.rows.back();
  CHECK(last.frame == 2180);
  CHECK(*last.delta_g_ev == doctest::Approx(0.020222078).epsilon(1e-12));
  CHECK(*last.lambda_ev == doctest::Approx(0.57379004).epsilon(1e-12));
  bool found2071 = false;
  for (const auto& row : table.rows) {
    if (row.frame != 2071) continue;
    found2071 = true;
    CHECK(*row.delta_g_ev == doctest::Approx(0.13571487).epsilon(1e-12));
    CHECK(*row.lambda_ev == doctest::Approx(0.340026962).epsilon(1e-12));
    CHECK(*row.h_da_sq_ev2 == doctest::Approx(4.11059e-6).epsilon(1e-12));
  }
  CHECK(found2071);
}

TEST_CASE("frame table enforces the h_da consistency invariant") {
  // h_da_sq must track h_da^2 when both columns are present; the gate is 1e-5
  // relative so that independently rounded 6-digit table pairs still pass.
  CHECK_NOTHROW(parse_frame_table(
      "frame,delta_g_ev,lambda_ev,h_da_ev,h_da_sq_ev2\n"
      "1,0.1,0.2,-2.02746E-03,4.11059E-06\n"));
  CHECK_THROWS_AS(parse_frame_table(
                      "frame,delta_g_ev,lambda_ev,h_da_ev,h_da_sq_ev2\n"
                      "1,0.1,0.2,-2.02746E-03,4.2E-06\n"),
                  Error);
}

TEST_CASE("frame table rejects bad cells and duplicate frames") {
  CHECK_THROWS_AS(parse_frame_table("frame,delta_g_ev\n1,abc\n"), Error);
  CHECK_THROWS_AS(parse_frame_table("frame,delta_g_ev\n1,0.1\n1,0.2\n"), Error);
  CHECK_THROWS_AS(parse_frame_table("frame,delta_g_ev\n1\n"), Error);
  CHECK_THROWS_AS(parse_frame_table("delta_g_ev\n0.1\n"), Error);
  // Negative lambda violates the row invariant.
  CHECK_THROWS_AS(parse_frame_table("frame,lambda_ev\n1,-0.5\n"), Error);
}

TEST_CASE("frame table supports absent optional columns") {
  const FrameTable table = parse_frame_table("frame,delta_g_ev,lambda_ev\n2071,0.13571487,0.340026962\n");
  CHECK(table.rows.size() == 1);
  CHECK(table.has_delta_g);
  CHECK_FALSE(table.has_h_da);
  CHECK_FALSE(table.rows[0].h_da_ev.has_value());
  // Header-only input parses to an empty table.
  CHECK(parse_frame_table("frame,delta_g_ev\n").rows.empty());
}

TEST_CASE("frame table round-trips through emit") {
  const FrameTable table = parse_frame_table(test::read_fixture("marcus/rouccsd_frames.csv"));
  const FrameTable back = parse_frame_table(emit_frame_table(table));
  REQUIRE(back.rows.size() == table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    CHECK(back.rows[i].frame == table.rows[i].frame);
    CHECK(*back.rows[i].delta_g_ev == *table.rows[i].delta_g_ev);
    CHECK(*back.rows[i].lambda_ev == *table.rows[i].lambda_ev);
    CHECK(*back.rows[i].h_da_ev == *table.rows[i].h_da_ev);
  }
}

TEST_CASE("geometry parses units, comments and element symbols") {
  const Geometry bohr = parse_geometry("# comment\nunits bohr\nH 0 0 0\nHe 0 0 1.5\n");
  REQUIRE(bohr.atoms.size() == 2);
  CHECK(bohr.atoms[0].charge == 1.0);
  CHECK(bohr.atoms[1].charge == 2.0);
  CHECK(bohr.atoms[1].position[2] == 1.5);
  CHECK(bohr.total_nuclear_charge() == 3.0);

  const Geometry ang = parse_geometry("units angstrom\nH 0 0 0\nH 0 0 0.74\n");
  CHECK(ang.atoms[1].position[2] == doctest::Approx(0.74 * constants::angstrom_to_bohr));

  CHECK_THROWS_AS(parse_geometry("H 0 0 0\n"), Error);              // missing units
  CHECK_THROWS_AS(parse_geometry("units parsec\nH 0 0 0\n"), Error);
  CHECK_THROWS_AS(parse_geometry("units bohr\nXx 0 0 0\n"), Error);
  CHECK_THROWS_AS(parse_geometry("units bohr\nH 0 0\n"), Error);
  CHECK_THROWS_AS(parse_geometry("units bohr\n"), Error);           // no atoms
}

TEST_CASE("nuclear repulsion matches hand values") {
  const Geometry h2 = parse_geometry("units bohr\nH 0 0 0\nH 0 0 1.4\n");
  CHECK(nuclear_repulsion(h2) == doctest::Approx(1.0 / 1.4).epsilon(1e-14));
  const Geometry heh2 = parse_geometry(test::read_fixture("geometries/heh2_linear.geom"));
  CHECK(nuclear_repulsion(heh2) == doctest::Approx(2.546568627450980).epsilon(1e-12));
  const Geometry clash = parse_geometry("units bohr\nH 0 0 0\nH 0 0 1e-12\n");
  CHECK_THROWS_AS(nuclear_repulsion(clash), Error);
}

TEST_CASE("results emit deterministic key order and 12 significant digits") {
  ResultNode root;
  root["k_et"] = ResultNode(9.44e9);
  root["beta"] = ResultNode(true);
  root["alpha"] = ResultNode("text");
  ResultNode arr{ResultNode::Array{}};
  arr.push_back(ResultNode(1));
  arr.push_back(ResultNode(2.5));
  root["list"] = arr;

  const std::string text = emit_results(root);
  CHECK(text.find("9.44000000000e9") != std::string::npos);
  // Lexicographic key order: alpha < beta < k_et < list.
  CHECK(text.find("alpha") < text.find("beta"));
  CHECK(text.find("beta") < text.find("k_et"));
  CHECK(text.find("k_et") < text.find("list"));
  CHECK(emit_results(root) == text);
}

TEST_CASE("results emit-then-parse identity on a marcus-shaped record") {
  ResultNode root;
  root["lambda_ev"] = ResultNode(0.4356);
  root["delta_g_ev"] = ResultNode(0.0724);
  root["rate_per_s"] = ResultNode(9.43653e9);
  root["frames"] = ResultNode(static_cast<std::int64_t>(20));
  root["ansatz"] = ResultNode("chea");
  const ResultNode back = parse_results(emit_results(root));
  CHECK(back.at("lambda_ev").as_double() == 0.4356);
  CHECK(back.at("delta_g_ev").as_double() == 0.0724);
  CHECK(back.at("rate_per_s").as_double() == 9.43653e9);
  CHECK(back.at("frames").as_int() == 20);
  CHECK(back.at("ansatz").as_string() == "chea");
  CHECK(emit_results(back) == emit_results(root));
}

}  // TEST_SUITE
