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

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "revnet/circuit.hpp"
#include "revnet/errors.hpp"
#include "revnet/gate.hpp"

namespace revnet {

/// Widest state space an exhaustive scan will enumerate by default
/// (2^22 = ~4M states).
inline constexpr std::uint32_t kDefaultExhaustiveLimit = 22;

/// A classical assignment of every wire in an N-wire circuit. Bit i is the
/// value of wire i. Widths above 64 are fully supported; `to_uint64` is
/// only available up to 64 wires.
class BasisState {
 public:
  explicit BasisState(std::uint32_t width, std::uint64_t value = 0)
      : width_(width), bits_(width, value) {
    if (width < 64 && (value >> width) != 0) {
      throw RangeError("state value does not fit in " + std::to_string(width) +
                       " wires");
    }
  }

  [[nodiscard]] std::uint32_t width() const { return width_; }

  [[nodiscard]] bool test(WireId wire) const { return bits_.test(wire); }
  void set(WireId wire, bool value) { bits_.set(wire, value); }
  void flip(WireId wire) { bits_.flip(wire); }

  [[nodiscard]] std::uint64_t to_uint64() const {
    if (width_ > 64) {
      throw TooWideError("state of width " + std::to_string(width_) +
                         " does not fit in 64 bits");
    }
    return bits_.empty() ? 0 : bits_.to_ulong();
  }

  friend bool operator==(const BasisState&, const BasisState&) = default;

 private:
  std::uint32_t width_;
  boost::dynamic_bitset<std::uint64_t> bits_;
};

namespace detail {

inline void apply_gate_in_place(const Gate& gate, BasisState& state) {
  for (const Control& c : gate.controls()) {
    if (state.test(c.wire) != (c.polarity == Polarity::Positive)) return;
  }
  state.flip(gate.target());
}

}  // namespace detail

/// Applies one gate: the target bit is flipped iff every control wire
/// matches its polarity; all other bits are untouched.
[[nodiscard]] inline BasisState apply_gate(const Gate& gate, BasisState state) {
  detail::apply_gate_in_place(gate, state);
  return state;
}

/// Left-to-right fold of apply_gate over the circuit's gate list.
[[nodiscard]] inline BasisState run(const Circuit& circuit, BasisState state) {
  if (state.width() != circuit.width()) {
    throw SimError("state width " + std::to_string(state.width()) +
                   " does not match circuit width " +
                   std::to_string(circuit.width()));
  }
  for (const Gate& g : circuit.gates()) detail::apply_gate_in_place(g, state);
  return state;
}

/// Independent semantic oracle for a mixed-polarity controlled NOT. Kept
/// deliberately separate from apply_gate so lowered gate sequences can be
/// checked against a second evaluation route.
[[nodiscard]] inline BasisState oracle_mcx(const Gate& gate, BasisState state) {
  bool fires = true;
  for (const Control& c : gate.controls()) {
    const bool bit = state.test(c.wire);
    fires = fires && (c.polarity == Polarity::Negative ? !bit : bit);
  }
  if (fires) state.flip(gate.target());
  return state;
}

/// Plain integer reference for in-place addition: (a + b) mod 2^n.
[[nodiscard]] inline std::uint64_t oracle_add(std::uint32_t n, std::uint64_t a,
                                              std::uint64_t b) {
  if (n == 0 || n > 64) throw RangeError("register size must be in 1..64");
  if (n < 64 && ((a >> n) != 0 || (b >> n) != 0)) {
    throw RangeError("operand does not fit in " + std::to_string(n) + " bits");
  }
  std::uint64_t sum = a + b;
  if (n < 64) sum &= (std::uint64_t{1} << n) - 1;
  return sum;
}

/// Packs register values into a basis state of the given width. Values are
/// LSB-first along each register's wire list.
[[nodiscard]] inline BasisState pack_registers(const RegisterLayout& layout,
                                               std::uint32_t width,
                                               std::uint64_t a, std::uint64_t b,
                                               bool flag) {
  auto place = [&](BasisState& s, const std::vector<WireId>& wires,
                   std::uint64_t value, const char* reg) {
    if (wires.size() > 64) {
      throw TooWideError(std::string("register '") + reg + "' wider than 64 bits");
    }
    if (wires.size() < 64 && (value >> wires.size()) != 0) {
      throw RangeError(std::string("value ") + std::to_string(value) +
                       " does not fit register '" + reg + "' of " +
                       std::to_string(wires.size()) + " bits");
    }
    for (std::size_t i = 0; i < wires.size(); ++i) {
      s.set(wires[i], (value >> i) & 1);
    }
  };
  BasisState state(width);
  place(state, layout.a_wires, a, "a");
  place(state, layout.b_wires, b, "b");
  if (layout.flag) {
    state.set(*layout.flag, flag);
  } else if (flag) {
    throw LayoutError("layout has no flag wire");
  }
  return state;
}

struct RegisterValues {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  bool flag = false;
};

/// Inverse of pack_registers.
[[nodiscard]] inline RegisterValues unpack_registers(const RegisterLayout& layout,
                                                     const BasisState& state) {
  auto gather = [&](const std::vector<WireId>& wires) {
    if (wires.size() > 64) throw TooWideError("register wider than 64 bits");
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < wires.size(); ++i) {
      if (state.test(wires[i])) value |= std::uint64_t{1} << i;
    }
    return value;
  };
  RegisterValues out;
  out.a = gather(layout.a_wires);
  out.b = gather(layout.b_wires);
  out.flag = layout.flag ? state.test(*layout.flag) : false;
  return out;
}

/// The full input->output map of a circuit, indexed by input state.
struct TruthTable {
  std::uint32_t width = 0;
  std::vector<std::uint64_t> map;
  bool bijection = false;
};

/// Enumerates all 2^N inputs. Reversible circuits always yield a bijection;
/// the `bijection` field reports the scan result rather than assuming it.
[[nodiscard]] inline TruthTable truth_table(
    const Circuit& circuit, std::uint32_t width_limit = kDefaultExhaustiveLimit) {
  if (circuit.width() > width_limit || circuit.width() >= 64) {
    throw TooWideError("truth table over " + std::to_string(circuit.width()) +
                       " wires exceeds the " + std::to_string(width_limit) +
                       "-wire limit");
  }
  const std::uint64_t size = std::uint64_t{1} << circuit.width();
  TruthTable table;
  table.width = circuit.width();
  table.map.resize(size);
  boost::dynamic_bitset<std::uint64_t> seen(size);
  bool bijection = true;
  for (std::uint64_t input = 0; input < size; ++input) {
    const std::uint64_t output =
        run(circuit, BasisState(circuit.width(), input)).to_uint64();
    table.map[input] = output;
    if (seen.test(output)) bijection = false;
    seen.set(output);
  }
  table.bijection = bijection;
  return table;
}

// --- Equivalence checking ---------------------------------------------------

struct Exhaustive {
  std::uint32_t width_limit = kDefaultExhaustiveLimit;
};

struct Random {
  std::uint64_t count = 10000;
  std::uint64_t seed = 0;
};

using VerifyMode = std::variant<Exhaustive, Random>;

struct Counterexample {
  BasisState input;
  BasisState expected;
  BasisState actual;
};

struct VerificationReport {
  bool passed = false;
  std::uint64_t states_checked = 0;
  std::optional<Counterexample> counterexample;
  std::optional<std::uint64_t> seed;
};

using StateMap = std::function<BasisState(const BasisState&)>;

namespace detail {

/// Sequential scan; the reported counterexample is the lowest-index failure.
template <typename InputAt>
VerificationReport scan_equivalence(const Circuit& circuit,
                                    const StateMap& reference,
                                    std::uint64_t count, InputAt&& input_at,
                                    std::optional<std::uint64_t> seed) {
  VerificationReport report;
  report.seed = seed;
  for (std::uint64_t i = 0; i < count; ++i) {
    BasisState input = input_at(i);
    BasisState expected = reference(input);
    BasisState actual = run(circuit, input);
    ++report.states_checked;
    if (!(actual == expected)) {
      report.counterexample = Counterexample{std::move(input),
                                             std::move(expected),
                                             std::move(actual)};
      return report;
    }
  }
  report.passed = true;
  return report;
}

inline BasisState random_state(std::uint32_t width, std::mt19937_64& rng) {
  BasisState state(width);
  for (std::uint32_t w = 0; w < width; w += 64) {
    std::uint64_t word = rng();
    for (std::uint32_t i = 0; i < 64 && w + i < width; ++i) {
      state.set(w + i, (word >> i) & 1);
    }
  }
  return state;
}

}  // namespace detail

/// Checks the circuit against a reference map over its full state space:
/// every 2^N input when exhaustive, seeded uniform states when random.
[[nodiscard]] inline VerificationReport verify_equivalence(
    const Circuit& circuit, const StateMap& reference, const VerifyMode& mode) {
  if (const auto* ex = std::get_if<Exhaustive>(&mode)) {
    if (circuit.width() > ex->width_limit || circuit.width() >= 64) {
      throw TooWideError("exhaustive scan over " +
                         std::to_string(circuit.width()) +
                         " wires exceeds the " +
                         std::to_string(ex->width_limit) + "-wire limit");
    }
    const std::uint64_t count = std::uint64_t{1} << circuit.width();
    return detail::scan_equivalence(
        circuit, reference, count,
        [&](std::uint64_t i) { return BasisState(circuit.width(), i); },
        std::nullopt);
  }
  const auto& rnd = std::get<Random>(mode);
  auto rng = std::make_shared<std::mt19937_64>(rnd.seed);
  return detail::scan_equivalence(
      circuit, reference, rnd.count,
      [&, rng](std::uint64_t) { return detail::random_state(circuit.width(), *rng); },
      rnd.seed);
}

// --- Register-level verification against the integer oracle ------------------

/// What arithmetic contract a register layout announces.
enum class ArithKind { Increment, ControlledIncrement, Add };

/// Infers the arithmetic contract from a layout: no a-register means an
/// incrementer, equal a/b sizes an adder, a 1-wire a-register a controlled
/// incrementer. Anything else is unusable.
[[nodiscard]] inline ArithKind infer_arith_kind(const RegisterLayout& layout) {
  if (layout.b_wires.empty() || !layout.flag) {
    throw LayoutError("layout lacks a b register or a flag wire");
  }
  if (layout.a_wires.empty()) return ArithKind::Increment;
  if (layout.a_wires.size() == layout.b_wires.size()) return ArithKind::Add;
  if (layout.a_wires.size() == 1) return ArithKind::ControlledIncrement;
  throw LayoutError("register sizes match no arithmetic contract");
}

/// Verifies a circuit against the integer oracle its layout implies, over
/// the flag=1 slice of the state space (the ancilla's contractual domain).
/// Exhaustive mode enumerates every register value; random mode draws
/// seeded pairs. The check compares whole output states, so it also
/// asserts that the a register is preserved and the flag ends in 1.
[[nodiscard]] inline VerificationReport verify_arith(const Circuit& circuit,
                                                     const VerifyMode& mode) {
  const RegisterLayout& layout = circuit.layout();
  const ArithKind kind = infer_arith_kind(layout);
  const auto nb = static_cast<std::uint32_t>(layout.b_wires.size());
  const std::uint32_t na = kind == ArithKind::Increment
                               ? 0
                               : static_cast<std::uint32_t>(layout.a_wires.size());
  if (nb > 64) throw TooWideError("b register wider than 64 bits");

  // The amount added to b is 1 for an incrementer, the control bit for a
  // controlled incrementer, and the full a register for an adder.
  auto expected_state = [&](std::uint64_t a, std::uint64_t b) {
    std::uint64_t addend = kind == ArithKind::Increment ? 1 : a;
    if (nb < 64) addend &= (std::uint64_t{1} << nb) - 1;
    return pack_registers(layout, circuit.width(), a, oracle_add(nb, b, addend),
                          true);
  };

  const std::uint32_t domain_bits = na + nb;
  auto decode = [&](std::uint64_t index) {
    const std::uint64_t b = nb < 64 ? index & ((std::uint64_t{1} << nb) - 1) : index;
    const std::uint64_t a = nb < 64 ? index >> nb : 0;
    return std::pair<std::uint64_t, std::uint64_t>{a, b};
  };

  StateMap ref = [&](const BasisState& input) {
    const RegisterValues v = unpack_registers(layout, input);
    return expected_state(v.a, v.b);
  };

  if (const auto* ex = std::get_if<Exhaustive>(&mode)) {
    if (domain_bits > ex->width_limit || domain_bits >= 64) {
      throw TooWideError("exhaustive register scan over " +
                         std::to_string(domain_bits) + " bits exceeds the " +
                         std::to_string(ex->width_limit) + "-bit limit");
    }
    const std::uint64_t count = std::uint64_t{1} << domain_bits;
    return detail::scan_equivalence(
        circuit, ref, count,
        [&](std::uint64_t i) {
          auto [a, b] = decode(i);
          return pack_registers(layout, circuit.width(), a, b, true);
        },
        std::nullopt);
  }

  const auto& rnd = std::get<Random>(mode);
  auto rng = std::make_shared<std::mt19937_64>(rnd.seed);
  const std::uint64_t a_mask =
      na == 0 ? 0 : (na >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << na) - 1);
  const std::uint64_t b_mask =
      nb >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nb) - 1;
  return detail::scan_equivalence(
      circuit, ref, rnd.count,
      [&, rng](std::uint64_t) {
        const std::uint64_t a = na == 0 ? 0 : (*rng)() & a_mask;
        const std::uint64_t b = (*rng)() & b_mask;
        return pack_registers(layout, circuit.width(), a, b, true);
      },
      rnd.seed);
}

}  // namespace revnet
