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

#include <gtest/gtest.h>

#include <random>

#include "revnet/circuit.hpp"
#include "revnet/gate.hpp"
#include "revnet/simulate.hpp"
#include "test_util.hpp"

namespace {

using namespace revnet;

TEST(Gate, FactoriesAndAccessors) {
  const Gate t = Gate::ccx(0, 1, 2);
  EXPECT_EQ(t.num_controls(), 2u);
  EXPECT_EQ(t.target(), 2u);
  EXPECT_FALSE(t.has_negative_control());
  EXPECT_EQ(t.max_wire(), 2u);

  const Gate n = Gate({{3, Polarity::Negative}}, 1);
  EXPECT_TRUE(n.has_negative_control());
  EXPECT_EQ(n.max_wire(), 3u);
}

TEST(Gate, SelfControlRejected) {
  EXPECT_THROW(Gate({{2, Polarity::Positive}}, 2), GateShapeError);
}

TEST(Gate, DuplicateControlRejected) {
  EXPECT_THROW(Gate({{0, Polarity::Positive}, {0, Polarity::Negative}}, 1),
               GateShapeError);
}

TEST(Gate, EqualityIgnoresControlOrder) {
  const Gate a({{0, Polarity::Positive}, {1, Polarity::Negative}}, 2);
  const Gate b({{1, Polarity::Negative}, {0, Polarity::Positive}}, 2);
  EXPECT_EQ(a, b);
  const Gate c({{1, Polarity::Positive}, {0, Polarity::Positive}}, 2);
  EXPECT_FALSE(a == c);
}

// Every gate is an involution: applying it twice restores any basis state.
TEST(Gate, InvolutionOnAllStates) {
  std::mt19937_64 rng(123);
  const std::uint32_t width = 5;
  for (int trial = 0; trial < 50; ++trial) {
    const Gate g = testutil::random_gate(rng, width);
    for (std::uint64_t s = 0; s < (1u << width); ++s) {
      const BasisState in(width, s);
      EXPECT_EQ(apply_gate(g, apply_gate(g, in)), in);
    }
  }
}

TEST(IsElementary, Examples) {
  EXPECT_TRUE(is_elementary(Gate::x(0)));
  EXPECT_TRUE(is_elementary(Gate::cx(0, 1)));
  EXPECT_TRUE(is_elementary(Gate::ccx(0, 1, 2)));
  // zero-controlled NOT is not elementary: it needs NOT conjugation
  EXPECT_FALSE(is_elementary(Gate({{0, Polarity::Negative}}, 1)));
  EXPECT_FALSE(is_elementary(Gate(
      {{0, Polarity::Positive}, {1, Polarity::Positive}, {2, Polarity::Positive}},
      3)));
}

TEST(Circuit, MakeEmpty) {
  const Circuit c(3, RegisterLayout{{}, {0, 1}, 2});
  EXPECT_EQ(c.width(), 3u);
  EXPECT_TRUE(c.empty());

  RegisterLayout adder_shaped;
  adder_shaped.a_wires = {0, 1, 2, 3};
  adder_shaped.b_wires = {4, 5, 6, 7};
  adder_shaped.flag = 8;
  const Circuit wide(9, adder_shaped);
  EXPECT_EQ(wide.width(), 9u);
  EXPECT_EQ(wide.size(), 0u);
}

TEST(Circuit, LayoutOutOfRangeRejected) {
  EXPECT_THROW(Circuit(2, RegisterLayout{{}, {0, 1}, 5}), LayoutError);
}

TEST(Circuit, LayoutOverlapRejected) {
  EXPECT_THROW(Circuit(3, RegisterLayout{{0}, {0, 1}, 2}), LayoutError);
}

TEST(Circuit, WidthZeroRejected) { EXPECT_THROW(Circuit(0), SpecError); }

TEST(Circuit, AppendChecksRange) {
  Circuit c(3);
  c.append(Gate::ccx(0, 1, 2));
  EXPECT_EQ(c.size(), 1u);
  EXPECT_THROW(c.append(Gate::x(7)), LayoutError);
  EXPECT_THROW(c.append(Gate::cx(5, 0)), LayoutError);
}

TEST(Invert, EmptyAndOrder) {
  EXPECT_TRUE(invert(Circuit(2)).empty());

  Circuit c(3);
  c.append(Gate::x(0));
  c.append(Gate::cx(0, 1));
  c.append(Gate::ccx(0, 1, 2));
  const Circuit inv = invert(c);
  ASSERT_EQ(inv.size(), 3u);
  EXPECT_EQ(inv.gates()[0], Gate::ccx(0, 1, 2));
  EXPECT_EQ(inv.gates()[1], Gate::cx(0, 1));
  EXPECT_EQ(inv.gates()[2], Gate::x(0));
}

TEST(Invert, Involution) {
  std::mt19937_64 rng(5);
  const Circuit c = testutil::random_circuit(rng, 4, 12);
  EXPECT_EQ(invert(invert(c)).gates(), c.gates());
}

// Running a circuit followed by its inverse restores every basis state.
TEST(Invert, ComposeWithInverseIsIdentity) {
  std::mt19937_64 rng(42);
  const Circuit c = testutil::random_circuit(rng, 4, 20);
  const Circuit round_trip = compose(c, invert(c));
  for (std::uint64_t s = 0; s < 16; ++s) {
    const BasisState in(4, s);
    EXPECT_EQ(run(round_trip, in), in);
  }
}

TEST(Compose, IdentityCases) {
  std::mt19937_64 rng(9);
  const Circuit c = testutil::random_circuit(rng, 3, 8);
  EXPECT_EQ(compose(c, Circuit(3)).gates(), c.gates());
  EXPECT_EQ(compose(Circuit(3), c).gates(), c.gates());
}

TEST(Compose, WidthMismatchRejected) {
  EXPECT_THROW(compose(Circuit(3), Circuit(4)), CompositionError);
}

TEST(Compose, LayoutComesFromFirst) {
  const Circuit first(3, RegisterLayout{{}, {0, 1}, 2});
  const Circuit second(3, RegisterLayout{{}, {1, 2}, 0});
  EXPECT_EQ(compose(first, second).layout(), first.layout());
}

}  // namespace
