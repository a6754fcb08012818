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
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "revnet/circuit.hpp"
#include "revnet/errors.hpp"
#include "revnet/gate.hpp"

namespace revnet {

/// Bit width of each operand register of the in-place adder. The circuit
/// spans 2n+1 wires: both registers plus the single flag ancilla.
struct AdderSpec {
  std::uint32_t n = 1;
};

namespace detail {

/// Gate list of the one-ancilla incrementer b -> b+1 mod 2^k over the given
/// b wires (LSB first) and flag wire, which must enter as 1 and leaves as 1.
///
/// Walking from the least significant bit, each step flips bit i while the
/// flag is still raised, then drops the flag the first time a bit went
/// 0 -> 1 (bit i now reads 1 with every lower bit wrapped to 0; that 1
/// also blocks all later flag updates). The tail uncomputes the flag: a
/// plain NOT, corrected by the all-zero test on the lower k-1 bits, which
/// distinguishes the one input (all ones) whose flag never dropped.
inline std::vector<Gate> increment_gates(std::span<const WireId> b, WireId flag) {
  const std::size_t k = b.size();
  if (k == 0) throw SpecError("incrementer needs at least one target bit");
  if (k == 1) return {Gate::x(b[0])};  // flag gates cancel; plain bit flip

  std::vector<Gate> out;
  out.reserve(2 * k + 1);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    out.push_back(Gate::cx(flag, b[i]));
    std::vector<Control> controls;
    controls.reserve(i + 1);
    controls.push_back({b[i], Polarity::Positive});
    for (std::size_t j = i; j-- > 0;) controls.push_back({b[j], Polarity::Negative});
    out.emplace_back(std::move(controls), flag);
  }
  out.push_back(Gate::cx(flag, b[k - 1]));
  out.push_back(Gate::x(flag));
  std::vector<Control> all_zero;
  all_zero.reserve(k - 1);
  for (std::size_t j = 0; j + 1 < k; ++j) all_zero.push_back({b[j], Polarity::Negative});
  out.emplace_back(std::move(all_zero), flag);
  return out;
}

inline Gate prepend_control(const Gate& gate, WireId control) {
  std::vector<Control> controls;
  controls.reserve(gate.num_controls() + 1);
  controls.push_back({control, Polarity::Positive});
  controls.insert(controls.end(), gate.controls().begin(), gate.controls().end());
  return Gate(std::move(controls), gate.target());
}

}  // namespace detail

/// The one-ancilla incrementer: k+1 wires, b_0..b_{k-1} then the flag.
/// For any input with flag=1 it maps (b, 1) -> (b+1 mod 2^k, 1).
[[nodiscard]] inline Circuit synth_increment(std::uint32_t k) {
  if (k < 1) throw SpecError("incrementer size must be at least 1");
  RegisterLayout layout;
  layout.b_wires.resize(k);
  std::iota(layout.b_wires.begin(), layout.b_wires.end(), WireId{0});
  layout.flag = k;
  Circuit circuit(k + 1, std::move(layout));
  for (Gate& g : detail::increment_gates(circuit.layout().b_wires, k)) {
    circuit.append(std::move(g));
  }
  return circuit;
}

/// Adds one positive control to every gate, so the result acts as the
/// original circuit when the control wire is 1 and as the identity when it
/// is 0. The control wire may equal width(), in which case the circuit is
/// widened by one wire; otherwise it must be untouched by every gate.
[[nodiscard]] inline Circuit with_control(const Circuit& circuit, WireId control) {
  const std::uint32_t width =
      control == circuit.width() ? circuit.width() + 1 : circuit.width();
  if (control > circuit.width()) {
    throw LayoutError("control wire " + std::to_string(control) +
                      " is beyond the circuit");
  }
  Circuit out(width, circuit.layout());
  for (const Gate& g : circuit.gates()) {
    if (g.target() == control ||
        std::any_of(g.controls().begin(), g.controls().end(),
                    [&](const Control& c) { return c.wire == control; })) {
      throw GateShapeError("control wire " + std::to_string(control) +
                           " is already used by a gate");
    }
    out.append(detail::prepend_control(g, control));
  }
  return out;
}

/// The controlled incrementer: k+2 wires laid out as the control a-wire,
/// b_0..b_{k-1}, then the flag. Equivalent to controlling every gate of
/// synth_increment(k); for k=1 this collapses to a single CNOT(a -> b_0).
[[nodiscard]] inline Circuit synth_controlled_increment(std::uint32_t k) {
  if (k < 1) throw SpecError("incrementer size must be at least 1");
  RegisterLayout layout;
  layout.a_wires = {0};
  layout.b_wires.resize(k);
  std::iota(layout.b_wires.begin(), layout.b_wires.end(), WireId{1});
  layout.flag = k + 1;
  Circuit body(k + 2, std::move(layout));
  for (Gate& g : detail::increment_gates(body.layout().b_wires, k + 1)) {
    body.append(std::move(g));
  }
  return with_control(body, 0);
}

/// The in-place modular adder (a, b, 1) -> (a, a+b mod 2^n, 1) on 2n+1
/// wires: a_0..a_{n-1}, b_0..b_{n-1}, flag. It chains n controlled
/// incrementers, k = n down to 1: the a-bit of weight 2^{n-k} drives an
/// increment of the k most significant b-bits, adding 2^{n-k} to b.
[[nodiscard]] inline Circuit synth_adder(const AdderSpec& spec) {
  const std::uint32_t n = spec.n;
  if (n < 1) throw SpecError("adder size must be at least 1");
  RegisterLayout layout;
  layout.a_wires.resize(n);
  layout.b_wires.resize(n);
  std::iota(layout.a_wires.begin(), layout.a_wires.end(), WireId{0});
  std::iota(layout.b_wires.begin(), layout.b_wires.end(), WireId{n});
  layout.flag = 2 * n;
  Circuit circuit(2 * n + 1, std::move(layout));
  const WireId flag = 2 * n;
  for (std::uint32_t k = n; k >= 1; --k) {
    const WireId control = circuit.layout().a_wires[n - k];
    const std::span<const WireId> slice(circuit.layout().b_wires.data() + (n - k), k);
    for (const Gate& g : detail::increment_gates(slice, flag)) {
      circuit.append(detail::prepend_control(g, control));
    }
  }
  return circuit;
}

}  // namespace revnet
