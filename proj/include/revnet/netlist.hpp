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

#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "revnet/circuit.hpp"
#include "revnet/errors.hpp"
#include "revnet/gate.hpp"

namespace revnet {

// Netlist grammar (line-oriented UTF-8, '#' starts a comment):
//
//   revnet 1
//   width <N>
//   label a <lo>..<hi>      (optional; LSB at <lo>)
//   label b <lo>..<hi>      (optional)
//   label flag <w>          (optional)
//   x <t>
//   cx <c> <t>
//   ccx <c1> <c2> <t>
//   mcx <+|-><w> ... : <t>
//
// Integers are decimal. Unknown directives are errors. Serialization is
// canonical (x/cx/ccx whenever a gate is all-positive with <= 2 controls),
// so serialize(parse(serialize(c))) is byte-identical.

namespace detail {

inline bool contiguous(const std::vector<WireId>& wires) {
  for (std::size_t i = 1; i < wires.size(); ++i) {
    if (wires[i] != wires[i - 1] + 1) return false;
  }
  return true;
}

inline std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

inline std::uint64_t parse_number(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw NetlistError("line " + std::to_string(line_no) + ": expected integer, got '" +
                       std::string(token) + "'");
  }
  return value;
}

}  // namespace detail

/// Writes the canonical netlist text for a circuit. Register labels are
/// emitted only for contiguous wire ranges (all synthesized layouts are).
[[nodiscard]] inline std::string serialize_netlist(const Circuit& circuit) {
  const RegisterLayout& layout = circuit.layout();
  if (!detail::contiguous(layout.a_wires) || !detail::contiguous(layout.b_wires)) {
    throw NetlistError("only contiguous register layouts can be serialized");
  }
  std::ostringstream out;
  out << "revnet 1\n";
  out << "width " << circuit.width() << "\n";
  if (!layout.a_wires.empty()) {
    out << "label a " << layout.a_wires.front() << ".." << layout.a_wires.back()
        << "\n";
  }
  if (!layout.b_wires.empty()) {
    out << "label b " << layout.b_wires.front() << ".." << layout.b_wires.back()
        << "\n";
  }
  if (layout.flag) out << "label flag " << *layout.flag << "\n";
  for (const Gate& g : circuit.gates()) {
    if (is_elementary(g)) {
      switch (g.num_controls()) {
        case 0: out << "x " << g.target() << "\n"; break;
        case 1: out << "cx " << g.controls()[0].wire << " " << g.target() << "\n"; break;
        default:
          out << "ccx " << g.controls()[0].wire << " " << g.controls()[1].wire
              << " " << g.target() << "\n";
      }
    } else {
      out << "mcx";
      for (const Control& c : g.controls()) {
        out << " " << (c.polarity == Polarity::Positive ? '+' : '-') << c.wire;
      }
      out << " : " << g.target() << "\n";
    }
  }
  return out.str();
}

struct ParsedNetlist {
  Circuit circuit;
  std::vector<std::size_t> gate_lines;  // 1-based source line of each gate
};

/// Parses netlist text. Errors name the offending 1-based line.
[[nodiscard]] inline ParsedNetlist parse_netlist(std::string_view text) {
  std::uint32_t width = 0;
  bool saw_magic = false, saw_width = false, saw_gate = false;
  RegisterLayout layout;
  struct PendingGate {
    Gate gate;
    std::size_t line;
  };
  std::vector<PendingGate> gates;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, (eol == std::string_view::npos ? text.size() : eol) - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = detail::tokenize(line);
    if (tokens.empty()) continue;

    auto fail = [&](const std::string& msg) -> void {
      throw NetlistError("line " + std::to_string(line_no) + ": " + msg);
    };
    auto wire_at = [&](std::string_view token) {
      const std::uint64_t w = detail::parse_number(token, line_no);
      if (w >= width) fail("wire " + std::to_string(w) + " exceeds width");
      return static_cast<WireId>(w);
    };

    if (!saw_magic) {
      if (tokens.size() != 2 || tokens[0] != "revnet") fail("expected 'revnet 1' header");
      if (tokens[1] != "1") fail("unsupported format version '" + std::string(tokens[1]) + "'");
      saw_magic = true;
      continue;
    }
    if (!saw_width) {
      if (tokens.size() != 2 || tokens[0] != "width") fail("expected 'width <N>'");
      const std::uint64_t w = detail::parse_number(tokens[1], line_no);
      if (w == 0 || w > 0xffffffffull) fail("width out of range");
      width = static_cast<std::uint32_t>(w);
      saw_width = true;
      continue;
    }

    if (tokens[0] == "label") {
      if (saw_gate) fail("label after gate lines");
      if (tokens.size() != 3) fail("malformed label");
      if (tokens[1] == "flag") {
        layout.flag = wire_at(tokens[2]);
      } else if (tokens[1] == "a" || tokens[1] == "b") {
        const std::size_t dots = tokens[2].find("..");
        if (dots == std::string_view::npos) fail("expected '<lo>..<hi>' range");
        const WireId lo = wire_at(tokens[2].substr(0, dots));
        const WireId hi = wire_at(tokens[2].substr(dots + 2));
        if (hi < lo) fail("descending register range");
        std::vector<WireId>& reg = tokens[1] == "a" ? layout.a_wires : layout.b_wires;
        if (!reg.empty()) fail("duplicate label");
        for (WireId w = lo; w <= hi; ++w) reg.push_back(w);
      } else {
        fail("unknown register '" + std::string(tokens[1]) + "'");
      }
      continue;
    }

    try {
      if (tokens[0] == "x") {
        if (tokens.size() != 2) fail("malformed x line");
        gates.push_back({Gate::x(wire_at(tokens[1])), line_no});
      } else if (tokens[0] == "cx") {
        if (tokens.size() != 3) fail("malformed cx line");
        gates.push_back({Gate::cx(wire_at(tokens[1]), wire_at(tokens[2])), line_no});
      } else if (tokens[0] == "ccx") {
        if (tokens.size() != 4) fail("malformed ccx line");
        gates.push_back(
            {Gate::ccx(wire_at(tokens[1]), wire_at(tokens[2]), wire_at(tokens[3])),
             line_no});
      } else if (tokens[0] == "mcx") {
        std::vector<Control> controls;
        std::size_t i = 1;
        for (; i < tokens.size() && tokens[i] != ":"; ++i) {
          const std::string_view t = tokens[i];
          if (t.size() < 2 || (t[0] != '+' && t[0] != '-')) {
            fail("mcx control needs a +/- sign prefix");
          }
          controls.push_back({wire_at(t.substr(1)), t[0] == '+'
                                                        ? Polarity::Positive
                                                        : Polarity::Negative});
        }
        if (controls.empty()) fail("mcx needs at least one control");
        if (i + 2 != tokens.size() || tokens[i] != ":") fail("malformed mcx line");
        gates.push_back({Gate(std::move(controls), wire_at(tokens[i + 1])), line_no});
      } else {
        fail("unknown directive '" + std::string(tokens[0]) + "'");
      }
    } catch (const GateShapeError& e) {
      fail(e.what());
    }
    saw_gate = true;
  }

  if (!saw_magic || !saw_width) {
    throw NetlistError("missing 'revnet 1' / 'width' header");
  }
  try {
    Circuit(width, layout);
  } catch (const Error& e) {
    throw NetlistError(std::string("bad register labels: ") + e.what());
  }
  ParsedNetlist parsed{Circuit(width, std::move(layout)), {}};
  parsed.gate_lines.reserve(gates.size());
  for (PendingGate& pg : gates) {
    parsed.circuit.append(std::move(pg.gate));
    parsed.gate_lines.push_back(pg.line);
  }
  return parsed;
}

}  // namespace revnet
