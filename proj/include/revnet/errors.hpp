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

#include <cstddef>
#include <optional>
#include <stdexcept>

namespace revnet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;

  /// Set by whole-circuit passes to point at the offending gate.
  std::optional<std::size_t> gate_index;
};

/// A wire reference lies outside the circuit, or a register layout is
/// malformed / unusable for the requested operation.
struct LayoutError : Error {
  using Error::Error;
};

/// A gate violates its structural invariants (self-control, duplicate
/// control wire).
struct GateShapeError : Error {
  using Error::Error;
};

/// Circuits of different widths cannot be concatenated.
struct CompositionError : Error {
  using Error::Error;
};

/// A multi-controlled gate uses more control wires than the borrowed-bit
/// construction permits (k > ceil(N/2)).
struct TooManyControls : Error {
  using Error::Error;
};

/// Fewer than k-2 wires are free to serve as borrowed bits.
struct NotEnoughBorrows : Error {
  using Error::Error;
};

/// A negative control reached a stage that admits only positive controls.
struct PolarityError : Error {
  using Error::Error;
};

/// Simulation input does not match the circuit (width mismatch).
struct SimError : Error {
  using Error::Error;
};

/// A register value does not fit its register.
struct RangeError : Error {
  using Error::Error;
};

/// An exhaustive scan was requested over a state space beyond the
/// configured width limit.
struct TooWideError : Error {
  using Error::Error;
};

/// A synthesis request is malformed (e.g. non-positive size).
struct SpecError : Error {
  using Error::Error;
};

/// A closed-form formula was evaluated outside its domain.
struct DomainError : Error {
  using Error::Error;
};

/// A textual netlist could not be parsed or written.
struct NetlistError : Error {
  using Error::Error;
};

}  // namespace revnet
