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

#include "ansatz/ansatz.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "common.hpp"

namespace qpdft::ansatz {

using qubit::PauliString;
using qubit::PauliSum;
using qubit::QubitMapping;
using sim::Circuit;

namespace {

constexpr double coeff_floor = 1e-12;

int popcount(std::uint64_t v) { return std::popcount(v); }

// --- Pauli-gadget compilation ----------------------------------------------

/// Append gates realizing exp(-i angle P) with angle = scale * params[slot].
/// Basis changes take X to Z via H and Y to Z via Rz(-pi/2), H; the parity of
/// the support is chained onto its last qubit where a bound Rz acts.
void append_pauli_gadget(Circuit& circuit, const PauliString& p, int slot, double scale) {
  std::vector<int> support;
  for (int q = 0; q < p.n_qubits; ++q)
    if (((p.x | p.z) >> q) & 1u) support.push_back(q);
  require(!support.empty(), ErrorKind::internal, "identity term reached the gadget compiler");

  for (int q : support) {
    const bool has_x = (p.x >> q) & 1u;
    const bool has_z = (p.z >> q) & 1u;
    if (has_x && has_z) {  // Y
      circuit.rz_fixed(q, -0.5 * constants::pi);
      circuit.h(q);
    } else if (has_x) {
      circuit.h(q);
    }
  }
  for (std::size_t k = 0; k + 1 < support.size(); ++k) circuit.cnot(support[k], support[k + 1]);
  // exp(-i phi Z) = Rz(2 phi).
  circuit.rz(support.back(), slot, 2.0 * scale);
  for (std::size_t k = support.size() - 1; k-- > 0;) circuit.cnot(support[k], support[k + 1]);
  for (int q : support) {
    const bool has_x = (p.x >> q) & 1u;
    const bool has_z = (p.z >> q) & 1u;
    if (has_x && has_z) {
      circuit.h(q);
      circuit.rz_fixed(q, 0.5 * constants::pi);
    } else if (has_x) {
      circuit.h(q);
    }
  }
}

PauliSum excitation_generator(const Excitation& exc, const QubitMapping& mapping) {
  if (exc.is_single())
    return qubit::map_single_excitation(exc.create[0], exc.destroy[0], mapping);
  return qubit::map_double_excitation(exc.create[0], exc.create[1], exc.destroy[0],
                                      exc.destroy[1], mapping);
}

// --- Two-level (sector-exact) compilation -----------------------------------
//
// Restricted to the symmetry sector, each excitation exponential
// exp(theta (T - T^dag)) is a direct sum of plane rotations over the
// determinant pairs T connects.  The compiler realizes exactly that action:
// a CNOT change of basis (the "frame") shared by the whole excitation block,
// a CNOT fan-out collapsing each pair onto one pivot qubit, and a single
// controlled Ry whose controls separate the rotated doublets from every
// spectator determinant.  Because the commuting strings of one generator make
// the per-excitation factorization exact, the compiled block agrees with the
// Pauli-gadget form on every sector state while staying near the depth the
// paper reports for the open-shell ansatz.

/// Determinant pair connected by T: T |from> = sign |to>.
struct DetPair {
  std::uint64_t from = 0;  // register basis state
  std::uint64_t to = 0;
  int sign = 1;
};

/// Apply one ladder operator to a mode-occupation mask with the Jordan-Wigner
/// sign (-1)^(occupied modes below), or report annihilation.
bool apply_ladder(std::uint64_t& occ, int mode, bool dagger, int& sign) {
  const std::uint64_t bit = std::uint64_t{1} << mode;
  if (dagger ? (occ & bit) != 0 : (occ & bit) == 0) return false;
  if (popcount(occ & (bit - 1)) % 2 == 1) sign = -sign;
  occ ^= bit;
  return true;
}

/// All sector determinants connected by the excitation, as register states.
std::vector<DetPair> connected_pairs(const Excitation& exc, const QubitMapping& mapping) {
  const int m = mapping.n_spatial;
  std::vector<DetPair> pairs;
  for (std::uint64_t alpha = 0; alpha < (std::uint64_t{1} << m); ++alpha) {
    if (popcount(alpha) != mapping.n_alpha) continue;
    for (std::uint64_t beta = 0; beta < (std::uint64_t{1} << m); ++beta) {
      if (popcount(beta) != mapping.n_beta) continue;
      std::uint64_t occ = alpha | (beta << m);
      int sign = 1;
      bool alive = true;
      // T = a^dag_{c0} [a^dag_{c1}] [a_{d1}] a_{d0}, applied right to left:
      // a_{d0} acts first, then a_{d1}, then the creations innermost-first.
      for (std::size_t k = 0; alive && k < exc.destroy.size(); ++k)
        alive = apply_ladder(occ, exc.destroy[k], false, sign);
      for (std::size_t k = exc.create.size(); alive && k-- > 0;)
        alive = apply_ladder(occ, exc.create[k], true, sign);
      if (!alive) continue;
      DetPair pair;
      pair.from = qubit::encode_determinant(alpha, beta, mapping);
      const std::uint64_t low = (std::uint64_t{1} << m) - 1;
      pair.to = qubit::encode_determinant(occ & low, occ >> m, mapping);
      pair.sign = sign;
      pairs.push_back(pair);
    }
  }
  return pairs;
}

/// Ry on `target` bound to `slot`, restricted by 0..2 positive controls.
void append_controlled_ry(Circuit& circuit, const std::vector<int>& controls, int target,
                          int slot, double scale) {
  switch (controls.size()) {
    case 0:
      circuit.ry(target, slot, scale);
      return;
    case 1:
      circuit.cry(controls[0], target, slot, scale);
      return;
    case 2:
      // Standard two-control network from C-V factors with V = Ry(scale/2).
      circuit.cry(controls[1], target, slot, 0.5 * scale);
      circuit.cnot(controls[0], controls[1]);
      circuit.cry(controls[1], target, slot, -0.5 * scale);
      circuit.cnot(controls[0], controls[1]);
      circuit.cry(controls[0], target, slot, 0.5 * scale);
      return;
    default:
      fail(ErrorKind::internal, "controlled-Ry supports at most two controls");
  }
}

/// Linear change of computational basis over GF(2).  Output bit i of apply()
/// is the parity of the input bits selected by rows[i]; the identity frame has
/// rows[i] = 1 << i.
struct BitFrame {
  std::vector<std::uint64_t> rows;

  explicit BitFrame(int n) : rows(static_cast<std::size_t>(n)) {
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = std::uint64_t{1} << i;
  }

  std::uint64_t apply(std::uint64_t x) const {
    std::uint64_t y = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
      y |= static_cast<std::uint64_t>(std::popcount(rows[i] & x) & 1) << i;
    return y;
  }
};

/// CNOT sequence realizing the frame on basis states: applying the returned
/// (control, target) gates in order maps |x> to |frame.apply(x)>.
std::vector<std::pair<int, int>> frame_cnots(const BitFrame& frame) {
  const int n = static_cast<int>(frame.rows.size());
  std::vector<std::uint64_t> m = frame.rows;
  std::vector<std::pair<int, int>> ops;  // row[t] ^= row[c]  <=>  CNOT(c, t)
  for (int col = 0; col < n; ++col) {
    if (!((m[static_cast<std::size_t>(col)] >> col) & 1u)) {
      // Invertibility guarantees an unprocessed row still holding this column.
      for (int r = col + 1; r < n; ++r)
        if ((m[static_cast<std::size_t>(r)] >> col) & 1u) {
          m[static_cast<std::size_t>(col)] ^= m[static_cast<std::size_t>(r)];
          ops.emplace_back(r, col);
          break;
        }
    }
    for (int r = 0; r < n; ++r)
      if (r != col && ((m[static_cast<std::size_t>(r)] >> col) & 1u)) {
        m[static_cast<std::size_t>(r)] ^= m[static_cast<std::size_t>(col)];
        ops.emplace_back(col, r);
      }
  }
  // The recorded reduction is frame^-1 left to right; reversed, it is frame.
  std::reverse(ops.begin(), ops.end());
  return ops;
}

/// One excitation compiled to a single controlled two-level rotation.  Each
/// control reads a parity of register bits: the parity is folded onto one
/// representative wire with CNOTs, used there as an ordinary control, and
/// unfolded afterwards.  Weight-one masks degenerate to plain controls.
struct TwoLevelPlan {
  bool trivial = false;   // excitation annihilates the sector: no gates
  int pivot = 0;          // rotated qubit (frame coordinates)
  double scale = 0.0;     // Ry angle per unit of the bound parameter
  std::vector<int> fanout;                   // CNOT targets conjugating delta onto the pivot
  std::vector<std::uint64_t> control_masks;  // parity functionals guarding the rotation
  std::vector<int> control_reps;             // wire carrying each folded parity
  std::vector<bool> control_zero;            // parity is 0 on the doublets: X-wrapped
  int cost = 0;           // emitted gate count
};

/// Cheapest single-rotation realization of exp(theta (T - T^dag)) inside
/// `frame`, or nullopt when no rotation guarded by at most two parity
/// controls reproduces the excitation's sector action exactly.
std::optional<TwoLevelPlan> plan_two_level(const std::vector<DetPair>& pairs,
                                           const std::vector<std::uint64_t>& sector_states,
                                           const BitFrame& frame, int n_qubits) {
  if (pairs.empty()) {
    TwoLevelPlan plan;
    plan.trivial = true;
    return plan;
  }
  const std::uint64_t delta = frame.apply(pairs.front().from ^ pairs.front().to);
  for (const DetPair& p : pairs)
    if (frame.apply(p.from ^ p.to) != delta) return std::nullopt;
  const auto odd = [](std::uint64_t a, std::uint64_t b) {
    return (std::popcount(a & b) & 1) != 0;
  };

  std::optional<TwoLevelPlan> best;
  for (int pivot = 0; pivot < n_qubits; ++pivot) {
    if (!((delta >> pivot) & 1u)) continue;
    const std::uint64_t pivot_bit = std::uint64_t{1} << pivot;
    const std::uint64_t conjugated = delta ^ pivot_bit;
    const auto image = [&](std::uint64_t s) {
      s = frame.apply(s);
      if ((s >> pivot) & 1u) s ^= conjugated;  // CNOT fan-out from the pivot
      return s;
    };

    // Every pair becomes a pivot doublet (construction); all doublets must
    // rotate with one orientation, and a usable control parity has to be
    // constant across them.  `base` holds the doublet bit values.
    const std::uint64_t base = image(pairs.front().from);
    std::vector<std::uint64_t> pair_diffs;
    double scale = 0.0;
    bool uniform = true;
    for (const DetPair& p : pairs) {
      const std::uint64_t gf = image(p.from);
      pair_diffs.push_back((gf ^ base) & ~pivot_bit);
      const double wanted = 2.0 * p.sign * ((gf & pivot_bit) ? -1.0 : 1.0);
      if (scale == 0.0) scale = wanted;
      uniform = uniform && scale == wanted;
    }
    if (!uniform) continue;

    std::vector<std::uint64_t> spectator_diffs;
    for (std::uint64_t s : sector_states) {
      bool member = false;
      for (const DetPair& p : pairs) member = member || s == p.from || s == p.to;
      if (!member) spectator_diffs.push_back(image(s) ^ base);
    }

    std::vector<std::uint64_t> candidates;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n_qubits); ++mask) {
      if (mask & pivot_bit) continue;
      bool constant = true;
      for (std::uint64_t d : pair_diffs) constant = constant && !odd(mask, d);
      if (constant) candidates.push_back(mask);
    }

    const auto consider = [&](const std::vector<std::uint64_t>& masks) {
      TwoLevelPlan plan;
      plan.pivot = pivot;
      plan.scale = scale;
      for (int q = 0; q < n_qubits; ++q)
        if ((conjugated >> q) & 1u) plan.fanout.push_back(q);
      // Each parity needs a private representative wire outside the other
      // masks, so the folds never read a wire another fold has rewritten.
      std::uint64_t used = pivot_bit;
      for (std::size_t k = 0; k < masks.size(); ++k) {
        std::uint64_t others = 0;
        for (std::size_t j = 0; j < masks.size(); ++j)
          if (j != k) others |= masks[j];
        const std::uint64_t avail = masks[k] & ~used & ~others;
        if (avail == 0) return;
        const int rep = std::countr_zero(avail);
        used |= std::uint64_t{1} << rep;
        plan.control_masks.push_back(masks[k]);
        plan.control_reps.push_back(rep);
        plan.control_zero.push_back(!odd(masks[k], base));
      }
      plan.cost = 2 * static_cast<int>(plan.fanout.size()) + (masks.size() == 2 ? 5 : 1);
      for (std::size_t k = 0; k < masks.size(); ++k)
        plan.cost += 2 * (std::popcount(masks[k]) - 1) + (plan.control_zero[k] ? 2 : 0);
      if (!best || plan.cost < best->cost) best = plan;
    };

    if (spectator_diffs.empty()) consider({});
    for (std::uint64_t mask : candidates) {
      bool separates = true;
      for (std::uint64_t d : spectator_diffs) separates = separates && odd(mask, d);
      if (separates) consider({mask});
    }
    for (std::size_t i = 0; i < candidates.size(); ++i)
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        const std::uint64_t a = candidates[i], b = candidates[j];
        if ((a & ~b) == 0 || (b & ~a) == 0) continue;  // no private representatives
        bool separates = true;
        for (std::uint64_t d : spectator_diffs)
          separates = separates && (odd(a, d) || odd(b, d));
        if (separates) consider({a, b});
      }
  }
  return best;
}

void emit_two_level(Circuit& circuit, const TwoLevelPlan& plan, int slot) {
  if (plan.trivial) return;
  const auto fold = [&](std::size_t k) {
    for (int q = 0; q < 64; ++q)
      if (((plan.control_masks[k] >> q) & 1u) && q != plan.control_reps[k])
        circuit.cnot(q, plan.control_reps[k]);
  };
  const auto unfold = [&](std::size_t k) {
    for (int q = 63; q >= 0; --q)
      if (((plan.control_masks[k] >> q) & 1u) && q != plan.control_reps[k])
        circuit.cnot(q, plan.control_reps[k]);
  };
  for (int q : plan.fanout) circuit.cnot(plan.pivot, q);
  for (std::size_t k = 0; k < plan.control_masks.size(); ++k) fold(k);
  for (std::size_t k = 0; k < plan.control_masks.size(); ++k)
    if (plan.control_zero[k]) circuit.x(plan.control_reps[k]);
  append_controlled_ry(circuit, plan.control_reps, plan.pivot, slot, plan.scale);
  for (std::size_t k = plan.control_masks.size(); k-- > 0;)
    if (plan.control_zero[k]) circuit.x(plan.control_reps[k]);
  for (std::size_t k = plan.control_masks.size(); k-- > 0;) unfold(k);
  for (std::size_t i = plan.fanout.size(); i-- > 0;) circuit.cnot(plan.pivot, plan.fanout[i]);
}

/// Frame plus per-excitation rotation plans covering the whole excitation
/// list; `depth` is the dependency depth of the emitted circuit including
/// the frame change and its undo.
struct SectorCompilation {
  BitFrame frame;
  std::vector<TwoLevelPlan> plans;
  int depth = 0;
};

/// Emit the full compiled block: frame change, one rotation per excitation
/// (parameter slot = excitation index), frame undo.
void emit_compilation(Circuit& circuit, const SectorCompilation& comp) {
  const auto frame_gates = frame_cnots(comp.frame);
  for (const auto& [c, t] : frame_gates) circuit.cnot(c, t);
  for (std::size_t k = 0; k < comp.plans.size(); ++k)
    emit_two_level(circuit, comp.plans[k], static_cast<int>(k));
  for (std::size_t i = frame_gates.size(); i-- > 0;)
    circuit.cnot(frame_gates[i].first, frame_gates[i].second);
}

std::optional<SectorCompilation> plan_with_frame(
    const std::vector<std::vector<DetPair>>& pair_lists,
    const std::vector<std::uint64_t>& sector_states, const BitFrame& frame, int n_qubits) {
  SectorCompilation comp{frame, {}, 0};
  for (const auto& pairs : pair_lists) {
    auto plan = plan_two_level(pairs, sector_states, frame, n_qubits);
    if (!plan) return std::nullopt;
    comp.plans.push_back(std::move(*plan));
  }
  Circuit scratch(n_qubits, static_cast<int>(pair_lists.size()));
  emit_compilation(scratch, comp);
  comp.depth = scratch.depth();
  return comp;
}

/// Pick the change of basis minimizing the compiled circuit depth.  On the
/// paper's 4-qubit tapered registers the whole GL(4, F2) group (20160 frames)
/// is searched exhaustively; larger registers only try the identity frame.
std::optional<SectorCompilation> search_frames(
    const std::vector<std::vector<DetPair>>& pair_lists,
    const std::vector<std::uint64_t>& sector_states, int n_qubits) {
  std::optional<SectorCompilation> best =
      plan_with_frame(pair_lists, sector_states, BitFrame(n_qubits), n_qubits);
  if (n_qubits != 4) return best;

  for (std::uint64_t r0 = 1; r0 < 16; ++r0) {
    for (std::uint64_t r1 = 1; r1 < 16; ++r1) {
      if (r1 == r0) continue;
      for (std::uint64_t r2 = 1; r2 < 16; ++r2) {
        if (r2 == r0 || r2 == r1 || r2 == (r0 ^ r1)) continue;
        const std::uint64_t span[7] = {r0,      r1,      r0 ^ r1,      r2,
                                       r2 ^ r0, r2 ^ r1, r2 ^ r0 ^ r1};
        for (std::uint64_t r3 = 1; r3 < 16; ++r3) {
          bool dependent = false;
          for (std::uint64_t v : span) dependent = dependent || r3 == v;
          if (dependent) continue;
          BitFrame frame(4);
          frame.rows = {r0, r1, r2, r3};
          const auto comp = plan_with_frame(pair_lists, sector_states, frame, 4);
          if (comp && (!best || comp->depth < best->depth)) best = comp;
        }
      }
    }
  }
  return best;
}

// --- HEA layouts --------------------------------------------------------------

/// X-gate prefix preparing `state` on the register.
void append_basis_prefix(Circuit& circuit, std::uint64_t state, int n_qubits) {
  for (int q = 0; q < n_qubits; ++q)
    if ((state >> q) & 1u) circuit.x(q);
  circuit.prefix_size = circuit.gates.size();
}

/// Closed-shell HEA, depth 4: one Ry per tapered pair, one cross-pair CRy
/// injected before either pair opens its full three-state manifold, then two
/// intra-pair CRy layers.  Every gate preserves the sector manifold for all
/// angles (the rotated qubit never steers an allowed state onto a forbidden
/// bit pattern).
Circuit build_chea_circuit() {
  Circuit circuit(4, 7);
  append_basis_prefix(circuit, 0b1111, 4);
  circuit.ry(0, 0);
  circuit.ry(2, 1);
  circuit.cry(0, 2, 2);
  circuit.cry(0, 1, 3);
  circuit.cry(2, 3, 4);
  circuit.cry(1, 0, 5);
  circuit.cry(3, 2, 6);
  return circuit;
}

/// Open-shell HEA, depth 6: cross-pair CRy exchanges in both directions while
/// the pairs are still confined to safe two-state supports, then intra-pair
/// mixing layers.  The open pair (q2,q3) loses its unconditional q3 rotation
/// once q2 acquires amplitude, so the final q3 rotation is emitted as an
/// Ry(+θ) / CRy(q2→q3, −θ) pair sharing one parameter slot: the two gates
/// cancel exactly on the q2=1 subspace, realizing a q2=0-conditioned rotation
/// that keeps the forbidden |10⟩ component at zero for every angle.
Circuit build_ohea_circuit() {
  Circuit circuit(4, 9);
  append_basis_prefix(circuit, 0b1011, 4);
  circuit.ry(0, 0);
  circuit.ry(3, 1);
  circuit.cry(0, 3, 2);
  circuit.cry(3, 0, 3);
  circuit.cry(0, 1, 4);
  circuit.cry(3, 2, 5);
  circuit.cry(1, 0, 6);
  circuit.ry(3, 7, 1.0);
  circuit.cry(0, 1, 8);
  circuit.cry(2, 3, 7, -1.0);
  return circuit;
}

void require_hea_register(Family family, const QubitMapping& mapping) {
  require(mapping.scheme == qubit::Scheme::parity && mapping.tapered,
          ErrorKind::invalid_spec, "HEA families require the tapered parity register");
  require(mapping.n_qubits() == 4, ErrorKind::invalid_spec,
          "HEA layouts are defined for the tapered 4-qubit register");
  if (family == Family::chea)
    require(mapping.n_alpha == mapping.n_beta, ErrorKind::invalid_spec,
            "chea requires a closed-shell sector (n_alpha = n_beta)");
  else
    require(mapping.n_alpha == mapping.n_beta + 1, ErrorKind::invalid_spec,
            "ohea requires an open-shell sector (n_alpha = n_beta + 1)");
}

}  // namespace

Family parse_family(const std::string& name) {
  if (name == "uccsd") return Family::uccsd;
  if (name == "rouccsd") return Family::rouccsd;
  if (name == "chea") return Family::chea;
  if (name == "ohea") return Family::ohea;
  fail(ErrorKind::usage, "unknown ansatz family: " + name);
}

const char* family_name(Family family) {
  switch (family) {
    case Family::uccsd: return "uccsd";
    case Family::rouccsd: return "rouccsd";
    case Family::chea: return "chea";
    case Family::ohea: return "ohea";
  }
  fail(ErrorKind::internal, "unreachable ansatz family");
}

Circuit reference_state(const QubitMapping& mapping) {
  const std::uint64_t alpha = (std::uint64_t{1} << mapping.n_alpha) - 1;
  const std::uint64_t beta = (std::uint64_t{1} << mapping.n_beta) - 1;
  const std::uint64_t state = qubit::encode_determinant(alpha, beta, mapping);
  Circuit circuit(mapping.n_qubits(), 0);
  append_basis_prefix(circuit, state, mapping.n_qubits());
  return circuit;
}

std::vector<Excitation> enumerate_excitations(Family family, const QubitMapping& mapping) {
  require(family == Family::uccsd || family == Family::rouccsd, ErrorKind::invalid_spec,
          "excitation lists exist only for the UCC families");
  if (family == Family::uccsd)
    require(mapping.n_alpha == mapping.n_beta, ErrorKind::invalid_spec,
            "uccsd requires a closed-shell sector (n_alpha = n_beta)");
  else
    require(mapping.n_alpha == mapping.n_beta + 1, ErrorKind::invalid_spec,
            "rouccsd requires an open-shell sector (n_alpha = n_beta + 1)");

  const int m = mapping.n_spatial;
  const auto occupied = [&](int mode) {
    return mode < m ? mode < mapping.n_alpha : mode - m < mapping.n_beta;
  };
  const auto spin = [&](int mode) { return mode < m ? 0 : 1; };
  const int n = mapping.n_modes();

  std::vector<Excitation> list;
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a)
      if (occupied(i) && !occupied(a) && spin(i) == spin(a))
        list.push_back(Excitation{{a}, {i}});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (occupied(i) && occupied(j) && !occupied(a) && !occupied(b) &&
              spin(i) + spin(j) == spin(a) + spin(b))
            list.push_back(Excitation{{a, b}, {i, j}});
  return list;
}

Circuit compile_excitations_gadget(const std::vector<Excitation>& excitations,
                                   const QubitMapping& mapping) {
  Circuit circuit(mapping.n_qubits(), static_cast<int>(excitations.size()));
  for (std::size_t k = 0; k < excitations.size(); ++k) {
    const PauliSum generator = excitation_generator(excitations[k], mapping);
    require(generator.max_imaginary() <= 1e-10, ErrorKind::internal,
            "excitation generator must have real coefficients");
    // The strings of one generator commute pairwise, so the factorization of
    // its exponential into per-term gadgets is exact.
    for (const auto& [key, coefficient] : generator.terms()) {
      if (std::abs(coefficient) <= coeff_floor) continue;
      append_pauli_gadget(circuit, generator.string_for(key), static_cast<int>(k),
                          coefficient.real());
    }
  }
  return circuit;
}

Circuit compile_excitations_sector(const std::vector<Excitation>& excitations,
                                   const QubitMapping& mapping) {
  require(mapping.n_spatial <= 12, ErrorKind::size_exceeded,
          "sector compilation enumerates determinants; limited to 12 orbitals");
  const std::vector<std::uint64_t> sector_states = qubit::sector_basis_states(mapping);
  const int n = mapping.n_qubits();

  std::vector<std::vector<DetPair>> pair_lists;
  pair_lists.reserve(excitations.size());
  for (const Excitation& exc : excitations) pair_lists.push_back(connected_pairs(exc, mapping));

  // The frame search is deterministic but not free; compiled bodies are cached
  // keyed on the sector geometry, which fixes the result completely.
  std::string key = std::to_string(n);
  for (std::uint64_t s : sector_states) key += "," + std::to_string(s);
  for (const auto& pairs : pair_lists) {
    key += ";";
    for (const DetPair& p : pairs)
      key += std::to_string(p.from) + ":" + std::to_string(p.to) + ":" +
             std::to_string(p.sign) + ",";
  }
  static std::mutex cache_mutex;
  static auto& cache = *new std::map<std::string, Circuit>();
  {
    const std::lock_guard<std::mutex> lock(cache_mutex);
    const auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  Circuit circuit(n, static_cast<int>(excitations.size()));
  if (const auto comp = search_frames(pair_lists, sector_states, n)) {
    emit_compilation(circuit, *comp);
  } else {
    // No frame covers every excitation: rotations where possible, gadgets else.
    const BitFrame identity(n);
    for (std::size_t k = 0; k < excitations.size(); ++k) {
      if (const auto plan = plan_two_level(pair_lists[k], sector_states, identity, n)) {
        emit_two_level(circuit, *plan, static_cast<int>(k));
        continue;
      }
      const PauliSum generator = excitation_generator(excitations[k], mapping);
      for (const auto& [term, coefficient] : generator.terms()) {
        if (std::abs(coefficient) <= coeff_floor) continue;
        append_pauli_gadget(circuit, generator.string_for(term), static_cast<int>(k),
                            coefficient.real());
      }
    }
  }
  {
    const std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, circuit);
  }
  return circuit;
}

Ansatz build_ansatz(Family family, const QubitMapping& mapping) {
  Ansatz ansatz;
  ansatz.family = family;
  ansatz.mapping = mapping;
  ansatz.manifold = qubit::sector_basis_states(mapping);

  switch (family) {
    case Family::uccsd:
    case Family::rouccsd: {
      ansatz.excitations = enumerate_excitations(family, mapping);
      const Circuit body = family == Family::uccsd
                               ? compile_excitations_gadget(ansatz.excitations, mapping)
                               : compile_excitations_sector(ansatz.excitations, mapping);
      ansatz.circuit = concatenate(reference_state(mapping), body);
      break;
    }
    case Family::chea:
      require_hea_register(family, mapping);
      ansatz.circuit = build_chea_circuit();
      break;
    case Family::ohea:
      require_hea_register(family, mapping);
      ansatz.circuit = build_ohea_circuit();
      break;
  }
  return ansatz;
}

}  // namespace qpdft::ansatz
