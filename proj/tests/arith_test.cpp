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

#include <algorithm>
#include <vector>

#include "revnet/arith.hpp"
#include "revnet/decompose.hpp"
#include "revnet/simulate.hpp"

namespace {

using namespace revnet;

// Independent reference for the incrementer family, by plain integer
// arithmetic on the unpacked registers.
std::uint64_t plus_mod(std::uint64_t b, std::uint64_t addend, std::uint32_t bits) {
  const std::uint64_t mask =
      bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  return (b + addend) & mask;
}

TEST(Increment, SpecExamples) {
  const Circuit inc3 = synth_increment(3);
  auto out = [&](std::uint64_t b) {
    const BasisState result =
        run(inc3, pack_registers(inc3.layout(), inc3.width(), 0, b, true));
    return unpack_registers(inc3.layout(), result);
  };
  EXPECT_EQ(out(3).b, 4u);
  EXPECT_TRUE(out(3).flag);
  EXPECT_EQ(out(7).b, 0u);  // wraparound mod 8
  EXPECT_TRUE(out(7).flag);

  const Circuit inc1 = synth_increment(1);
  EXPECT_EQ(inc1.size(), 1u);
  const RegisterValues v = unpack_registers(
      inc1.layout(),
      run(inc1, pack_registers(inc1.layout(), inc1.width(), 0, 0, true)));
  EXPECT_EQ(v.b, 1u);
  EXPECT_TRUE(v.flag);
}

TEST(Increment, ExhaustiveUpToEight) {
  for (std::uint32_t k = 1; k <= 8; ++k) {
    const Circuit inc = synth_increment(k);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << k); ++b) {
      const BasisState result =
          run(inc, pack_registers(inc.layout(), inc.width(), 0, b, true));
      const RegisterValues v = unpack_registers(inc.layout(), result);
      ASSERT_EQ(v.b, plus_mod(b, 1, k)) << "k=" << k << " b=" << b;
      ASSERT_TRUE(v.flag) << "flag not restored at k=" << k << " b=" << b;
    }
  }
}

TEST(Increment, LayoutShape) {
  const Circuit inc = synth_increment(4);
  EXPECT_EQ(inc.width(), 5u);
  EXPECT_EQ(inc.layout().b_wires, (std::vector<WireId>{0, 1, 2, 3}));
  EXPECT_EQ(inc.layout().flag, 4u);
  EXPECT_TRUE(inc.layout().a_wires.empty());
}

TEST(Increment, SizeZeroRejected) { EXPECT_THROW(synth_increment(0), SpecError); }

TEST(WithControl, EmptyStaysEmpty) {
  EXPECT_TRUE(with_control(Circuit(3), 1).empty());
}

TEST(WithControl, GrowsWidthForFreshWire) {
  // synth_increment(2) uses all three of its wires, so control on a new one
  const Circuit controlled = with_control(synth_increment(2), 3);
  EXPECT_EQ(controlled.width(), 4u);
  for (const Gate& g : controlled.gates()) {
    EXPECT_EQ(g.controls().front().wire, 3u);
    EXPECT_EQ(g.controls().front().polarity, Polarity::Positive);
  }
}

TEST(WithControl, ControlOffIsIdentity) {
  const Circuit controlled = with_control(synth_increment(2), 3);
  for (std::uint64_t s = 0; s < 8; ++s) {  // wire 3 clear in all of these
    EXPECT_EQ(run(controlled, BasisState(4, s)).to_uint64(), s);
  }
}

TEST(WithControl, ControlOnActsAsOriginal) {
  const Circuit inc = synth_increment(2);
  const Circuit controlled = with_control(inc, 3);
  for (std::uint64_t s = 0; s < 8; ++s) {
    const std::uint64_t expected = run(inc, BasisState(3, s)).to_uint64();
    EXPECT_EQ(run(controlled, BasisState(4, s | 8)).to_uint64(), expected | 8);
  }
  // the worked case: control on, b=1, flag=1 -> b=2, flag=1
  BasisState in = pack_registers(inc.layout(), 4, 0, 1, true);
  in.set(3, true);
  const BasisState out = run(controlled, in);
  EXPECT_EQ(unpack_registers(inc.layout(), out).b, 2u);
  EXPECT_TRUE(unpack_registers(inc.layout(), out).flag);
}

TEST(WithControl, CollisionRejected) {
  Circuit c(3);
  c.append(Gate::cx(0, 1));
  EXPECT_THROW(with_control(c, 0), GateShapeError);
  EXPECT_THROW(with_control(c, 1), GateShapeError);
  EXPECT_NO_THROW(with_control(c, 2));
}

TEST(WithControl, BeyondWidthRejected) {
  EXPECT_THROW(with_control(Circuit(3), 5), LayoutError);
}

TEST(ControlledIncrement, SpecExamples) {
  const Circuit cinc2 = synth_controlled_increment(2);
  auto out = [&](std::uint64_t a, std::uint64_t b) {
    return unpack_registers(
        cinc2.layout(),
        run(cinc2, pack_registers(cinc2.layout(), cinc2.width(), a, b, true)));
  };
  EXPECT_EQ(out(1, 3).b, 0u);  // 3+1 mod 4
  EXPECT_TRUE(out(1, 3).flag);
  EXPECT_EQ(out(0, 2).b, 2u);  // control off
  EXPECT_TRUE(out(0, 2).flag);

  const Circuit cinc1 = synth_controlled_increment(1);
  ASSERT_EQ(cinc1.size(), 1u);
  EXPECT_EQ(cinc1.gates()[0], Gate::cx(0, 1));
}

// The public constructor routes through with_control; rebuilding by hand
// (shift the bare incrementer's wires up by one, prepend the control) must
// give the identical gate list.
TEST(ControlledIncrement, MatchesManualConstruction) {
  for (std::uint32_t k = 1; k <= 6; ++k) {
    const Circuit cinc = synth_controlled_increment(k);
    const Circuit inc = synth_increment(k);
    ASSERT_EQ(cinc.size(), inc.size());
    for (std::size_t i = 0; i < inc.size(); ++i) {
      const Gate& g = inc.gates()[i];
      std::vector<Control> controls = {{0, Polarity::Positive}};
      for (const Control& c : g.controls()) {
        controls.push_back({c.wire + 1, c.polarity});
      }
      EXPECT_EQ(cinc.gates()[i], Gate(controls, g.target() + 1));
    }
  }
}

TEST(ControlledIncrement, ExhaustiveUpToSeven) {
  for (std::uint32_t k = 1; k <= 7; ++k) {
    const Circuit cinc = synth_controlled_increment(k);
    for (std::uint64_t a = 0; a <= 1; ++a) {
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << k); ++b) {
        const RegisterValues v = unpack_registers(
            cinc.layout(),
            run(cinc, pack_registers(cinc.layout(), cinc.width(), a, b, true)));
        ASSERT_EQ(v.a, a);
        ASSERT_EQ(v.b, plus_mod(b, a, k)) << "k=" << k << " a=" << a << " b=" << b;
        ASSERT_TRUE(v.flag);
      }
    }
  }
}

TEST(Adder, SpecExamples) {
  auto sum = [](std::uint32_t n, std::uint64_t a, std::uint64_t b) {
    const Circuit adder = synth_adder({n});
    return unpack_registers(
        adder.layout(),
        run(adder, pack_registers(adder.layout(), adder.width(), a, b, true)));
  };
  EXPECT_EQ(sum(4, 3, 5).b, 8u);
  EXPECT_EQ(sum(4, 3, 5).a, 3u);
  EXPECT_EQ(sum(3, 7, 7).b, 6u);  // 14 mod 8
  EXPECT_TRUE(sum(3, 7, 7).flag);
}

TEST(Adder, ExhaustiveUpToSix) {
  for (std::uint32_t n = 1; n <= 6; ++n) {
    const Circuit adder = synth_adder({n});
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        const RegisterValues v = unpack_registers(
            adder.layout(),
            run(adder, pack_registers(adder.layout(), adder.width(), a, b, true)));
        ASSERT_EQ(v.a, a) << "a register clobbered";
        ASSERT_EQ(v.b, plus_mod(b, a, n)) << "n=" << n << " a=" << a << " b=" << b;
        ASSERT_TRUE(v.flag);
      }
    }
  }
}

TEST(Adder, RandomLargeWidths) {
  for (std::uint32_t n : {16u, 32u, 64u}) {
    const VerificationReport report =
        verify_arith(synth_adder({n}), Random{2000, 7});
    EXPECT_TRUE(report.passed) << "n=" << n;
  }
}

// Reversibility holds on the whole state space, including flag=0 inputs
// that the arithmetic contract leaves unconstrained.
TEST(Adder, InverseRoundTripOnFullDomain) {
  for (std::uint32_t n = 1; n <= 3; ++n) {
    const Circuit adder = synth_adder({n});
    const Circuit round_trip = compose(adder, invert(adder));
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << adder.width()); ++s) {
      ASSERT_EQ(run(round_trip, BasisState(adder.width(), s)).to_uint64(), s);
    }
  }
}

TEST(Adder, ControlCountBound) {
  for (std::uint32_t n : {1u, 2u, 3u, 8u, 16u, 64u}) {
    const Circuit adder = synth_adder({n});
    std::size_t max_controls = 0;
    for (const Gate& g : adder.gates()) {
      max_controls = std::max(max_controls, g.num_controls());
    }
    EXPECT_LE(max_controls, n);  // never more than half of 2n+1 wires
  }
}

TEST(Adder, LoweringNeverRejects) {
  for (std::uint32_t n = 1; n <= 16; ++n) {
    EXPECT_NO_THROW((void)lower_circuit(synth_adder({n})));
  }
}

TEST(Adder, LayoutShape) {
  const Circuit adder = synth_adder({4});
  EXPECT_EQ(adder.width(), 9u);
  EXPECT_EQ(adder.layout().a_wires, (std::vector<WireId>{0, 1, 2, 3}));
  EXPECT_EQ(adder.layout().b_wires, (std::vector<WireId>{4, 5, 6, 7}));
  EXPECT_EQ(adder.layout().flag, 8u);
}

TEST(Adder, SizeZeroRejected) { EXPECT_THROW(synth_adder({0}), SpecError); }

}  // namespace
