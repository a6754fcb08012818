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

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "revnet/errors.hpp"

namespace revnet {

/// Index of a wire within a circuit, 0-based.
using WireId = std::uint32_t;

/// A positive control fires on 1 (solid dot), a negative control fires on 0
/// (hollow circle).
enum class Polarity : std::uint8_t { Positive, Negative };

struct Control {
  WireId wire{};
  Polarity polarity{Polarity::Positive};

  friend bool operator==(const Control&, const Control&) = default;
};

/// A mixed-polarity multi-controlled NOT: flips `target` exactly when every
/// control wire matches its polarity. NOT, CNOT and Toffoli are the
/// 0/1/2-positive-control special cases. Every gate is its own inverse.
///
/// The control list is kept in construction order (it shows up verbatim in
/// netlists), but equality is defined up to control reordering.
class Gate {
 public:
  Gate(std::vector<Control> controls, WireId target)
      : controls_(std::move(controls)), target_(target) {
    for (std::size_t i = 0; i < controls_.size(); ++i) {
      if (controls_[i].wire == target_) {
        throw GateShapeError("gate target " + std::to_string(target_) +
                             " also appears as a control");
      }
      for (std::size_t j = i + 1; j < controls_.size(); ++j) {
        if (controls_[i].wire == controls_[j].wire) {
          throw GateShapeError("duplicate control wire " +
                               std::to_string(controls_[i].wire));
        }
      }
    }
  }

  static Gate x(WireId target) { return Gate({}, target); }

  static Gate cx(WireId control, WireId target) {
    return Gate({{control, Polarity::Positive}}, target);
  }

  static Gate ccx(WireId control0, WireId control1, WireId target) {
    return Gate({{control0, Polarity::Positive}, {control1, Polarity::Positive}},
                target);
  }

  [[nodiscard]] const std::vector<Control>& controls() const { return controls_; }
  [[nodiscard]] WireId target() const { return target_; }
  [[nodiscard]] std::size_t num_controls() const { return controls_.size(); }

  [[nodiscard]] bool has_negative_control() const {
    return std::any_of(controls_.begin(), controls_.end(), [](const Control& c) {
      return c.polarity == Polarity::Negative;
    });
  }

  /// Largest wire index referenced by this gate.
  [[nodiscard]] WireId max_wire() const {
    WireId m = target_;
    for (const Control& c : controls_) m = std::max(m, c.wire);
    return m;
  }

  /// Equal up to reordering of the control list.
  friend bool operator==(const Gate& lhs, const Gate& rhs) {
    if (lhs.target_ != rhs.target_ ||
        lhs.controls_.size() != rhs.controls_.size()) {
      return false;
    }
    return sorted_controls(lhs) == sorted_controls(rhs);
  }

 private:
  static std::vector<Control> sorted_controls(const Gate& g) {
    std::vector<Control> cs = g.controls_;
    std::sort(cs.begin(), cs.end(),
              [](const Control& a, const Control& b) { return a.wire < b.wire; });
    return cs;
  }

  std::vector<Control> controls_;
  WireId target_;
};

/// True iff the gate belongs to the elementary set {NOT, CNOT, Toffoli}:
/// at most two controls, all of them positive.
[[nodiscard]] inline bool is_elementary(const Gate& gate) {
  return gate.num_controls() <= 2 && !gate.has_negative_control();
}

}  // namespace revnet
