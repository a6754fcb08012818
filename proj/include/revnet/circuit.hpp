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
#include <unordered_set>
#include <utility>
#include <vector>

#include "revnet/errors.hpp"
#include "revnet/gate.hpp"

namespace revnet {

/// Names the wires of the arithmetic registers. All wire lists are
/// least-significant-bit first: a_wires[0] carries weight 2^0. `a_wires`
/// is empty for a bare incrementer; `flag` is the single ancilla.
struct RegisterLayout {
  std::vector<WireId> a_wires;
  std::vector<WireId> b_wires;
  std::optional<WireId> flag;

  friend bool operator==(const RegisterLayout&, const RegisterLayout&) = default;
};

/// An ordered gate list over a fixed number of wires. Gates apply left to
/// right; the empty circuit is the identity. Circuits are plain values:
/// copy freely, share across threads once built.
class Circuit {
 public:
  explicit Circuit(std::uint32_t width, RegisterLayout layout = {})
      : width_(width), layout_(std::move(layout)) {
    if (width_ == 0) throw SpecError("circuit width must be positive");
    std::unordered_set<WireId> seen;
    auto claim = [&](WireId w, const char* reg) {
      if (w >= width_) {
        throw LayoutError(std::string("layout wire ") + std::to_string(w) +
                          " in register '" + reg + "' exceeds width " +
                          std::to_string(width_));
      }
      if (!seen.insert(w).second) {
        throw LayoutError("layout wire " + std::to_string(w) +
                          " assigned to more than one register");
      }
    };
    for (WireId w : layout_.a_wires) claim(w, "a");
    for (WireId w : layout_.b_wires) claim(w, "b");
    if (layout_.flag) claim(*layout_.flag, "flag");
  }

  /// Appends a gate; throws LayoutError if it references a wire >= width().
  void append(Gate gate) {
    if (gate.max_wire() >= width_) {
      throw LayoutError("gate wire " + std::to_string(gate.max_wire()) +
                        " exceeds circuit width " + std::to_string(width_));
    }
    gates_.push_back(std::move(gate));
  }

  [[nodiscard]] std::uint32_t width() const { return width_; }
  [[nodiscard]] const RegisterLayout& layout() const { return layout_; }
  [[nodiscard]] const std::vector<Gate>& gates() const { return gates_; }
  [[nodiscard]] std::size_t size() const { return gates_.size(); }
  [[nodiscard]] bool empty() const { return gates_.empty(); }

 private:
  std::uint32_t width_;
  RegisterLayout layout_;
  std::vector<Gate> gates_;
};

/// The inverse circuit. Every mixed-polarity controlled NOT is self-inverse,
/// so reversing the gate order suffices.
[[nodiscard]] inline Circuit invert(const Circuit& circuit) {
  Circuit out(circuit.width(), circuit.layout());
  for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
    out.append(*it);
  }
  return out;
}

/// Concatenation: `first` then `second`. Layout is taken from `first`.
[[nodiscard]] inline Circuit compose(const Circuit& first, const Circuit& second) {
  if (first.width() != second.width()) {
    throw CompositionError("cannot compose circuits of widths " +
                           std::to_string(first.width()) + " and " +
                           std::to_string(second.width()));
  }
  Circuit out(first.width(), first.layout());
  for (const Gate& g : first.gates()) out.append(g);
  for (const Gate& g : second.gates()) out.append(g);
  return out;
}

}  // namespace revnet
