// Copyright 2026 dqcc contributors
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

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dqcc/physfmt.hpp"
#include "dqcc/pipeline.hpp"
#include "dqcc/qasm.hpp"
#include "dqcc/report.hpp"
#include "dqcc/sim/simulator.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInternal = 2;
constexpr int kExitNotEquivalent = 3;

struct InputSpec {
  std::string in_path;
  std::string gen;
  std::uint32_t qubits = 4;
  std::string secret;
  std::string oracle = "balanced";
  std::string pattern = "uniform";
  std::uint32_t gates = 50;
  std::uint64_t seed = 1;
};

void add_input_flags(CLI::App* cmd, InputSpec& in) {
  cmd->add_option("--in", in.in_path, "OpenQASM 2.0 input file");
  cmd->add_option("--gen", in.gen, "built-in generator: bv, dj or random");
  cmd->add_option("--qubits", in.qubits, "data qubits for the generator");
  cmd->add_option("--secret", in.secret,
                  "bit string: BV secret / DJ balanced mask");
  cmd->add_option("--oracle", in.oracle,
                  "dj oracle: constant0, constant1 or balanced");
  cmd->add_option("--pattern", in.pattern,
                  "random pattern: uniform, fanout_heavy or fanin_heavy");
  cmd->add_option("--gates", in.gates, "gate count for --gen random");
  cmd->add_option("--seed", in.seed, "seed for --gen random");
}

dqcc::LogicalCircuit load_input(const InputSpec& in) {
  if (!in.in_path.empty()) {
    std::ifstream f(in.in_path);
    if (!f) throw dqcc::ConfigError("cannot open input file: " + in.in_path);
    std::stringstream ss;
    ss << f.rdbuf();
    std::string name = in.in_path;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos)
      name = name.substr(slash + 1);
    return dqcc::parse_qasm(ss.str(), name);
  }
  if (in.gen == "bv") {
    std::string secret = in.secret.empty() ? std::string(in.qubits, '1') : in.secret;
    return dqcc::gen_bv(in.qubits, secret);
  }
  if (in.gen == "dj") {
    if (in.oracle == "constant0")
      return dqcc::gen_dj(in.qubits, dqcc::DjOracle::constant0);
    if (in.oracle == "constant1")
      return dqcc::gen_dj(in.qubits, dqcc::DjOracle::constant1);
    if (in.oracle == "balanced") {
      std::string mask = in.secret.empty() ? std::string(in.qubits, '1') : in.secret;
      return dqcc::gen_dj(in.qubits, dqcc::DjOracle::balanced, mask);
    }
    throw dqcc::ConfigError("unknown oracle: " + in.oracle);
  }
  if (in.gen == "random") {
    auto p = dqcc::pattern_from_string(in.pattern);
    if (!p) throw dqcc::ConfigError("unknown pattern: " + in.pattern);
    return dqcc::gen_random(in.qubits, in.gates, in.seed, *p);
  }
  throw dqcc::ConfigError(in.gen.empty()
                              ? "no input: pass --in or --gen"
                              : "unknown generator: " + in.gen);
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw dqcc::ConfigError("cannot write output file: " + path);
  f << text;
}

std::string equivalence_json(const dqcc::sim::EquivalenceReport& r) {
  std::ostringstream os;
  os << "{\n  \"equivalent\": " << (r.equivalent ? "true" : "false")
     << ",\n  \"worst_fidelity\": " << std::setprecision(17) << r.worst_fidelity
     << ",\n  \"branch_count\": " << r.branch_count;
  if (!r.equivalent) {
    os << ",\n  \"failing_input\": \"" << r.failing_input << "\""
       << ",\n  \"diagnostic\": \"" << r.diagnostic << "\"";
  }
  os << "\n}\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dqcc - depth-aware compiler for distributed quantum circuits"};
  app.require_subcommand(1);

  // Shared knobs.
  dqcc::RunConfig cfg;
  std::string mode_str;
  std::string topology_file, cost_file;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--mode", mode_str, "naive, conservative or relaxed");
    cmd->add_option("--topology", topology_file,
                    "config file (topology/cost/mode keys)");
    cmd->add_option("--cost-model", cost_file, "config file (same schema)");
    cmd->add_option("--nodes", cfg.node_count,
                    "node count (0 = one node per logical qubit)");
    cmd->add_option("--memory", cfg.memory_per_node, "memory qubits per node");
    cmd->add_flag_callback(
        "--packed", [&] { cfg.placement = dqcc::PlacementPolicy::packed; },
        "pack memory_per_node logical qubits per node");
  };
  auto finalize_cfg = [&]() {
    if (!topology_file.empty()) dqcc::apply_config_file(cfg, topology_file);
    if (!cost_file.empty()) dqcc::apply_config_file(cfg, cost_file);
    if (!mode_str.empty()) {
      auto m = dqcc::mode_from_string(mode_str);
      if (!m) throw dqcc::ConfigError("unknown mode: " + mode_str);
      cfg.mode = *m;
    }
  };

  // compile
  auto* c_compile = app.add_subcommand("compile", "compile to physical gates");
  InputSpec compile_in;
  std::string compile_out, compile_report, compile_format = "json";
  add_input_flags(c_compile, compile_in);
  add_common(c_compile);
  c_compile->add_option("--out", compile_out, "physical circuit text output");
  c_compile->add_option("--report", compile_report, "depth report output");
  c_compile->add_option("--format", compile_format, "report format: json or csv");

  // verify
  auto* c_verify = app.add_subcommand("verify", "compile and check equivalence");
  InputSpec verify_in;
  std::uint32_t verify_states = 20;
  std::uint64_t verify_seed = 1;
  std::int64_t drop_correction = -1;
  add_input_flags(c_verify, verify_in);
  add_common(c_verify);
  c_verify->add_option("--states", verify_states, "random input states");
  c_verify->add_option("--verify-seed", verify_seed, "seed for random states");
  c_verify
      ->add_option("--drop-correction", drop_correction,
                   "test fixture: delete the k-th conditioned correction "
                   "from the compiled circuit")
      ->group("");  // hidden

  // bench
  auto* c_bench = app.add_subcommand("bench", "depth comparison over a suite");
  dqcc::BenchSpec bench;
  std::string bench_suite = "all", bench_qubits = "4..12";
  std::string bench_out, bench_format = "csv";
  std::vector<std::string> bench_modes;
  add_common(c_bench);
  c_bench->add_option("--suite", bench_suite, "bv, dj, random or all");
  c_bench->add_option("--qubits", bench_qubits, "qubit range, e.g. 4..12");
  c_bench->add_option("--count", bench.count, "random circuits to generate");
  c_bench->add_option("--max-gates", bench.max_gates, "random gate budget");
  c_bench->add_option("--seed", bench.seed, "suite seed");
  c_bench->add_option("--bench-mode", bench_modes,
                      "modes to benchmark (repeatable)");
  c_bench->add_option("--out", bench_out, "report file");
  c_bench->add_option("--format", bench_format, "csv or json");

  // gen
  auto* c_gen = app.add_subcommand("gen", "emit a generated circuit as QASM");
  InputSpec gen_in;
  std::string gen_out;
  add_input_flags(c_gen, gen_in);
  c_gen->add_option("--out", gen_out, "QASM output file");

  CLI11_PARSE(app, argc, argv);

  try {
    finalize_cfg();

    if (c_compile->parsed()) {
      dqcc::LogicalCircuit logical = load_input(compile_in);
      dqcc::PipelineResult r = dqcc::run_pipeline(logical, cfg);
      r.report.seed = compile_in.seed;
      if (!compile_out.empty())
        write_or_print(compile_out, dqcc::emit_physical(r.optimized.circuit));
      std::vector<dqcc::DepthReport> rows{r.report};
      std::string text = compile_format == "csv" ? dqcc::reports_to_csv(rows)
                                                 : dqcc::report_to_json(r.report);
      write_or_print(compile_report, text);
      return kExitOk;
    }

    if (c_verify->parsed()) {
      dqcc::LogicalCircuit logical = load_input(verify_in);
      dqcc::PipelineResult r = dqcc::run_pipeline(logical, cfg);
      dqcc::PhysicalCircuit circuit = r.optimized.circuit;
      if (drop_correction >= 0) {
        std::int64_t seen = 0;
        for (std::size_t i = 0; i < circuit.instructions.size(); ++i) {
          if (!circuit.instructions[i].condition) continue;
          if (seen++ == drop_correction) {
            circuit.instructions.erase(circuit.instructions.begin() + i);
            break;
          }
        }
      }
      auto report =
          dqcc::sim::check_equivalence(logical, circuit, verify_states, verify_seed);
      std::cout << equivalence_json(report);
      return report.equivalent ? kExitOk : kExitNotEquivalent;
    }

    if (c_bench->parsed()) {
      if (bench_suite == "all")
        bench.suites = {"bv", "dj", "random"};
      else
        bench.suites = {bench_suite};
      auto sep = bench_qubits.find("..");
      if (sep == std::string::npos) {
        bench.qubits_lo = bench.qubits_hi = std::stoul(bench_qubits);
      } else {
        bench.qubits_lo = std::stoul(bench_qubits.substr(0, sep));
        bench.qubits_hi = std::stoul(bench_qubits.substr(sep + 2));
      }
      if (bench.qubits_lo > bench.qubits_hi)
        throw dqcc::ConfigError("empty qubit range: " + bench_qubits);
      bench.modes.clear();
      if (bench_modes.empty()) bench_modes.push_back(mode_name(cfg.mode));
      for (const std::string& m : bench_modes) {
        auto mode = dqcc::mode_from_string(m);
        if (!mode) throw dqcc::ConfigError("unknown mode: " + m);
        bench.modes.push_back(*mode);
      }
      auto rows = dqcc::run_bench(bench, cfg);
      std::string text = bench_format == "json" ? dqcc::reports_to_json(rows)
                                                : dqcc::reports_to_csv(rows);
      write_or_print(bench_out, text);
      return kExitOk;
    }

    if (c_gen->parsed()) {
      dqcc::LogicalCircuit logical = load_input(gen_in);
      write_or_print(gen_out, dqcc::emit_qasm(logical));
      return kExitOk;
    }
  } catch (const dqcc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const dqcc::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const dqcc::InternalError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
