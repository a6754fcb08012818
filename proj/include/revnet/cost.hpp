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
#include <optional>
#include <string>
#include <vector>

#include "revnet/circuit.hpp"
#include "revnet/decompose.hpp"
#include "revnet/errors.hpp"
#include "revnet/gate.hpp"

namespace revnet {

/// Per-gate depth convention, as a function of the control count k and
/// whether any control is negative:
///
///   k = 0            -> 1
///   k = 1, 2         -> 1, or 3 with a negative control
///   k >= 3           -> 4k-8, or 4k-6 with negative controls
///
/// The 4k-8 entry is the Toffoli count of the borrowed-bit ladder; negative
/// controls charge a flat +2 for the NOT conjugation, independent of how
/// many controls are negative. The literal elementary gate count after
/// lowering (2 NOTs per negative control) is tracked separately by
/// CostReport.
struct DepthModel {
  [[nodiscard]] std::uint64_t depth(std::size_t control_count,
                                    bool has_negative) const {
    if (control_count >= 3) {
      return 4 * static_cast<std::uint64_t>(control_count) - (has_negative ? 6 : 8);
    }
    if (control_count == 0) return 1;
    return has_negative ? 3 : 1;
  }
};

/// Depth of a single gate under the model's table.
[[nodiscard]] inline std::uint64_t gate_depth(const Gate& gate,
                                              const DepthModel& model = {}) {
  return model.depth(gate.num_controls(), gate.has_negative_control());
}

/// Sequential depth of a circuit: the sum of its per-gate depths.
[[nodiscard]] inline std::uint64_t circuit_depth(const Circuit& circuit,
                                                 const DepthModel& model = {}) {
  std::uint64_t total = 0;
  for (const Gate& g : circuit.gates()) total += gate_depth(g, model);
  return total;
}

/// Reference depth of the controlled incrementer of size k:
/// 1 for k=1, 10 for k=2, 2k^2+k-5 for k>=3.
[[nodiscard]] inline std::int64_t formula_cinc_depth(std::uint32_t k) {
  if (k < 1) throw SpecError("controlled incrementer size must be at least 1");
  if (k == 1) return 1;
  if (k == 2) return 10;
  const auto kk = static_cast<std::int64_t>(k);
  return 2 * kk * kk + kk - 5;
}

/// Reference total depth of the size-n adder for n >= 3:
/// (2/3)n^3 + (3/2)n^2 - (25/6)n + 8, always an integer. For n < 3 the
/// closed form does not apply; sum formula_cinc_depth instead.
[[nodiscard]] inline std::int64_t formula_adder_depth(std::uint32_t n) {
  if (n < 3) {
    throw DomainError("closed form needs n >= 3; sum the per-k table instead");
  }
  const auto nn = static_cast<std::int64_t>(n);
  const std::int64_t numerator = 4 * nn * nn * nn + 9 * nn * nn - 25 * nn + 48;
  return numerator / 6;  // divisible for every integer n
}

/// Measured-vs-reference accounting for one circuit.
struct CostReport {
  std::vector<std::uint64_t> per_gate;        // depth of each gate in order
  std::uint64_t measured = 0;                 // sum of per_gate
  std::optional<std::int64_t> formula;        // reference value, when known
  std::optional<std::int64_t> delta;          // measured - formula
  std::uint64_t elementary = 0;               // literal gate count after lowering
  std::uint32_t lowering_width = 0;           // width the lowering ran at
};

/// Assembles a CostReport: per-gate depths, the total, the delta against a
/// reference value when one is supplied, and the literal elementary gate
/// count obtained by actually lowering the circuit.
///
/// A standalone incrementer is narrower than the ladder construction
/// allows for its own widest gates, so the literal count is taken in a
/// width-padded copy (wires added, no gates) — the depth table assumes
/// the same surrounding-circuit headroom.
[[nodiscard]] inline CostReport compare(const Circuit& circuit,
                                        std::optional<std::int64_t> formula_value,
                                        const DepthModel& model = {}) {
  CostReport report;
  report.per_gate.reserve(circuit.size());
  for (const Gate& g : circuit.gates()) {
    const std::uint64_t d = gate_depth(g, model);
    report.per_gate.push_back(d);
    report.measured += d;
  }
  report.formula = formula_value;
  if (formula_value) {
    report.delta = static_cast<std::int64_t>(report.measured) - *formula_value;
  }

  std::uint32_t width = circuit.width();
  for (const Gate& g : circuit.gates()) {
    const auto k = static_cast<std::uint32_t>(g.num_controls());
    if (k >= 3 && 2 * k - 1 > width) width = 2 * k - 1;
  }
  Circuit padded(width, circuit.layout());
  for (const Gate& g : circuit.gates()) padded.append(g);
  report.elementary = lower_circuit(padded).size();
  report.lowering_width = width;
  return report;
}

}  // namespace revnet
