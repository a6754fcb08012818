// Copyright 2026 The revnet authors
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
#include <string>
#include <unordered_set>
#include <vector>

#include "revnet/circuit.hpp"
#include "revnet/errors.hpp"
#include "revnet/gate.hpp"

namespace revnet {

/// How borrowed (dirty) work wires are chosen for the Toffoli ladder.
struct BorrowPolicy {
  enum class Strategy { LowestFreeIndex };

  Strategy strategy = Strategy::LowestFreeIndex;
};

/// Rewrites negative controls as NOT conjugation: NOT each negative-control
/// wire, apply the gate with all controls made positive, NOT them back.
/// A gate without negative controls passes through unchanged.
[[nodiscard]] inline std::vector<Gate> conjugate_negative_controls(const Gate& gate) {
  if (!gate.has_negative_control()) return {gate};
  std::vector<Gate> nots;
  std::vector<Control> positive;
  positive.reserve(gate.num_controls());
  for (const Control& c : gate.controls()) {
    if (c.polarity == Polarity::Negative) nots.push_back(Gate::x(c.wire));
    positive.push_back({c.wire, Polarity::Positive});
  }
  std::vector<Gate> out = nots;
  out.emplace_back(std::move(positive), gate.target());
  out.insert(out.end(), nots.begin(), nots.end());
  return out;
}

namespace detail {

/// Lowest-index wires outside controls+target, in ascending order.
inline std::vector<WireId> pick_borrows(const Gate& gate, std::uint32_t width,
                                        std::size_t needed,
                                        const BorrowPolicy& /*policy*/) {
  std::unordered_set<WireId> used;
  used.insert(gate.target());
  for (const Control& c : gate.controls()) used.insert(c.wire);
  std::vector<WireId> borrows;
  for (WireId w = 0; w < width && borrows.size() < needed; ++w) {
    if (!used.contains(w)) borrows.push_back(w);
  }
  if (borrows.size() < needed) {
    throw NotEnoughBorrows("need " + std::to_string(needed) +
                           " borrowed wires but only " +
                           std::to_string(borrows.size()) + " are free");
  }
  return borrows;
}

}  // namespace detail

/// Simulates a k-control all-positive NOT (k >= 3) by exactly 4(k-2) Toffoli
/// gates using k-2 borrowed wires that may hold arbitrary values and are
/// restored at the end.
///
/// The network is two V-shaped sweeps. With controls c_1..c_k, borrows
/// w_1..w_{k-2} and target t, the first sweep descends
///   T(c_k, w_{k-2} -> t), T(c_{k-1}, w_{k-3} -> w_{k-2}), ...,
///   T(c_3, w_1 -> w_2), apex T(c_1, c_2 -> w_1)
/// and ascends back up; the second sweep repeats the inner ladder without
/// the two outermost target-touching gates, undoing every borrow.
///
/// Requires k <= ceil(N/2): the circuit must be at least twice as wide as
/// the control set (which also forces N >= 5 for k >= 3).
[[nodiscard]] inline std::vector<Gate> barenco_lower(const Gate& gate,
                                                     std::uint32_t width,
                                                     const BorrowPolicy& policy = {}) {
  const std::size_t k = gate.num_controls();
  if (k < 3) throw SpecError("the ladder construction needs at least 3 controls");
  if (gate.has_negative_control()) {
    throw PolarityError("negative controls must be conjugated away first");
  }
  if (k > (width + 1) / 2) {
    throw TooManyControls(std::to_string(k) + " controls exceed ceil(" +
                          std::to_string(width) + "/2)");
  }
  const std::size_t m = k - 2;
  const std::vector<WireId> borrows = detail::pick_borrows(gate, width, m, policy);
  const std::vector<Control>& cs = gate.controls();

  std::vector<Gate> out;
  out.reserve(4 * m);
  // Chain gate at level j (1-based): pairs control c_{j+2} with borrow w_j,
  // targeting w_{j+1}, or the real target at the top level.
  auto chain = [&](std::size_t level) {
    const WireId control = cs[level + 1].wire;
    const WireId borrow = borrows[level - 1];
    const WireId tgt = level == m ? gate.target() : borrows[level];
    return Gate::ccx(control, borrow, tgt);
  };
  const Gate apex = Gate::ccx(cs[0].wire, cs[1].wire, borrows[0]);

  auto emit_sweep = [&](bool include_target_gate) {
    const std::size_t top = include_target_gate ? m : m - 1;
    for (std::size_t level = top; level >= 1; --level) out.push_back(chain(level));
    out.push_back(apex);
    for (std::size_t level = 1; level <= top; ++level) out.push_back(chain(level));
  };
  emit_sweep(true);
  emit_sweep(false);
  return out;
}

/// Lowers one gate to the elementary set {NOT, CNOT, Toffoli}: conjugate
/// negative controls, ladder-expand anything with 3+ controls, pass the
/// rest through.
[[nodiscard]] inline std::vector<Gate> lower_gate(const Gate& gate,
                                                  std::uint32_t width,
                                                  const BorrowPolicy& policy = {}) {
  std::vector<Gate> out;
  for (const Gate& g : conjugate_negative_controls(gate)) {
    if (g.num_controls() >= 3) {
      for (Gate& t : barenco_lower(g, width, policy)) out.push_back(std::move(t));
    } else {
      out.push_back(g);
    }
  }
  return out;
}

/// Lowers every gate of a circuit. Width and layout are preserved; errors
/// carry the index of the gate that failed.
[[nodiscard]] inline Circuit lower_circuit(const Circuit& circuit,
                                           const BorrowPolicy& policy = {}) {
  Circuit out(circuit.width(), circuit.layout());
  for (std::size_t i = 0; i < circuit.gates().size(); ++i) {
    try {
      for (Gate& g : lower_gate(circuit.gates()[i], circuit.width(), policy)) {
        out.append(std::move(g));
      }
    } catch (Error& e) {
      e.gate_index = i;
      throw;
    }
  }
  return out;
}

}  // namespace revnet
