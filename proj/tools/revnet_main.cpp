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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "revnet/revnet.hpp"

namespace {

using namespace revnet;

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;
constexpr int kLowering = 3;
constexpr int kLayout = 4;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin),
            std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError("cannot open input file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SpecError("cannot open output file '" + path + "'");
  out << text;
}

std::uint32_t checked_size(std::int64_t size) {
  if (size < 1) throw SpecError("size must be at least 1");
  if (size > 100000) throw SpecError("size too large");
  return static_cast<std::uint32_t>(size);
}

Circuit synth_by_kind(const std::string& kind, std::uint32_t size) {
  if (kind == "inc") return synth_increment(size);
  if (kind == "cinc") return synth_controlled_increment(size);
  return synth_adder({size});
}

std::optional<std::int64_t> formula_by_kind(const std::string& kind,
                                            std::uint32_t size) {
  if (kind == "cinc") return formula_cinc_depth(size);
  if (kind == "add") {
    if (size >= 3) return formula_adder_depth(size);
    std::int64_t sum = 0;
    for (std::uint32_t k = 1; k <= size; ++k) sum += formula_cinc_depth(k);
    return sum;
  }
  return std::nullopt;
}

std::string format_registers(const RegisterLayout& layout, const BasisState& state) {
  const RegisterValues v = unpack_registers(layout, state);
  std::ostringstream out;
  if (!layout.a_wires.empty()) out << "a=" << v.a << " ";
  out << "b=" << v.b << " flag=" << (v.flag ? 1 : 0);
  return out.str();
}

int cmd_synth(const std::string& kind, std::int64_t size, const std::string& out) {
  write_output(out, serialize_netlist(synth_by_kind(kind, checked_size(size))));
  return kOk;
}

int cmd_lower(const std::string& in, const std::string& out) {
  const ParsedNetlist parsed = parse_netlist(read_input(in));
  try {
    const Circuit lowered = lower_circuit(parsed.circuit);
    write_output(out, serialize_netlist(lowered));
    std::cerr << "elementary=" << lowered.size() << "\n";
    return kOk;
  } catch (Error& e) {
    if (e.gate_index && *e.gate_index < parsed.gate_lines.size()) {
      std::cerr << "error: line " << parsed.gate_lines[*e.gate_index] << ": "
                << e.what() << "\n";
      return kLowering;
    }
    throw;
  }
}

int cmd_sim(const std::string& in, std::uint64_t a, std::uint64_t b) {
  const Circuit circuit = parse_netlist(read_input(in)).circuit;
  const RegisterLayout& layout = circuit.layout();
  if (infer_arith_kind(layout) != ArithKind::Add) {
    throw LayoutError("sim needs an adder layout (equal a and b registers)");
  }
  const BasisState input = pack_registers(layout, circuit.width(), a, b, true);
  std::cout << format_registers(layout, run(circuit, input)) << "\n";
  return kOk;
}

int cmd_verify(const std::string& in, bool exhaustive, std::int64_t random_count,
               std::uint64_t seed) {
  const Circuit circuit = parse_netlist(read_input(in)).circuit;
  VerifyMode mode;
  if (exhaustive) {
    mode = Exhaustive{};
  } else {
    if (random_count < 1) throw SpecError("--random needs a positive count");
    mode = Random{static_cast<std::uint64_t>(random_count), seed};
  }
  const VerificationReport report = verify_arith(circuit, mode);
  if (report.passed) {
    std::cout << "ok: checked " << report.states_checked << " states (";
    if (report.seed) {
      std::cout << "random, seed=" << *report.seed;
    } else {
      std::cout << "exhaustive";
    }
    std::cout << ")\n";
    return kOk;
  }
  const Counterexample& ce = *report.counterexample;
  const RegisterLayout& layout = circuit.layout();
  std::cout << "counterexample: input " << format_registers(layout, ce.input)
            << " -> got " << format_registers(layout, ce.actual)
            << ", expected " << format_registers(layout, ce.expected) << "\n";
  return kVerifyFail;
}

int cmd_cost(const std::string& kind, std::int64_t size, const std::string& in) {
  Circuit circuit = [&] {
    if (!kind.empty()) return synth_by_kind(kind, checked_size(size));
    return parse_netlist(read_input(in)).circuit;
  }();
  const std::optional<std::int64_t> formula =
      kind.empty() ? std::nullopt : formula_by_kind(kind, checked_size(size));
  const CostReport report = compare(circuit, formula);
  std::cout << "measured=" << report.measured << "\n";
  if (report.formula) std::cout << "formula=" << *report.formula << "\n";
  if (report.delta) std::cout << "delta=" << *report.delta << "\n";
  std::cout << "elementary=" << report.elementary << "\n";
  if (kind == "add" && size >= 3) {
    const double n = static_cast<double>(size);
    const double cubic = 2.0 / 3.0 * n * n * n;
    std::ostringstream ratio;
    ratio.precision(4);
    ratio << std::fixed << static_cast<double>(report.measured) / cubic;
    std::cout << "ratio=" << ratio.str() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reversible one-ancilla adder/incrementer synthesis toolkit"};
  app.require_subcommand(1);

  std::string kind, in = "-", out = "-";
  std::int64_t size = 0;
  std::uint64_t a = 0, b = 0, seed = 0;
  std::int64_t random_count = 0;
  bool exhaustive = false;

  CLI::App* synth = app.add_subcommand("synth", "synthesize a circuit netlist");
  synth->add_option("kind", kind, "inc | cinc | add")
      ->required()
      ->check(CLI::IsMember({"inc", "cinc", "add"}));
  synth->add_option("size", size, "register bit width")->required();
  synth->add_option("-o,--out", out, "output file ('-' for stdout)");

  CLI::App* lower = app.add_subcommand("lower", "lower a netlist to {x, cx, ccx}");
  lower->add_option("-i,--in", in, "input netlist ('-' for stdin)");
  lower->add_option("-o,--out", out, "output file ('-' for stdout)");

  CLI::App* sim = app.add_subcommand("sim", "simulate an adder netlist on (a, b)");
  sim->add_option("-i,--in", in, "input netlist ('-' for stdin)");
  sim->add_option("-a", a, "value of the a register")->required();
  sim->add_option("-b", b, "value of the b register")->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "check a netlist against the integer oracle its layout implies");
  verify->add_option("-i,--in", in, "input netlist ('-' for stdin)");
  CLI::Option* opt_exh = verify->add_flag("--exhaustive", exhaustive,
                                          "enumerate every register value");
  CLI::Option* opt_rnd =
      verify->add_option("--random", random_count, "number of random samples");
  verify->add_option("--seed", seed, "random seed (default 0)");
  opt_rnd->excludes(opt_exh);

  CLI::App* cost = app.add_subcommand("cost", "depth accounting for a circuit");
  cost->add_option("kind", kind, "inc | cinc | add")
      ->check(CLI::IsMember({"inc", "cinc", "add"}));
  cost->add_option("size", size, "register bit width");
  cost->add_option("-i,--in", in, "input netlist ('-' for stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (synth->parsed()) return cmd_synth(kind, size, out);
    if (lower->parsed()) return cmd_lower(in, out);
    if (sim->parsed()) return cmd_sim(in, a, b);
    if (verify->parsed()) {
      if (exhaustive == (random_count > 0)) {
        std::cerr << "error: pass exactly one of --exhaustive / --random N\n";
        return kUsage;
      }
      return cmd_verify(in, exhaustive, random_count, seed);
    }
    if (cost->parsed()) {
      if (kind.empty() && !cost->count("-i")) {
        std::cerr << "error: pass a kind+size or an input netlist\n";
        return kUsage;
      }
      if (!kind.empty() && !cost->count("size")) {
        std::cerr << "error: kind needs a size\n";
        return kUsage;
      }
      return cmd_cost(kind, size, in);
    }
  } catch (const TooManyControls& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kLowering;
  } catch (const NotEnoughBorrows& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kLowering;
  } catch (const PolarityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kLowering;
  } catch (const LayoutError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kLayout;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
