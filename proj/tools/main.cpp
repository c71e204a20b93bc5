// Copyright 2026 The su11sim Authors
// SPDX-License-Identifier: Apache-2.0
//
// su11sim: photon-number-exact simulation of cascaded two-mode-squeezer
// interferometers. Subcommands: amp, sweep, zeros, validate.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "su11/circuit.hpp"
#include "su11/closed_forms.hpp"
#include "su11/config.hpp"
#include "su11/sweep.hpp"
#include "su11/validate.hpp"

namespace {

using namespace su11;

// Numbers in axis specs accept a "pi" suffix (e.g. 2pi).
double parse_number(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str()) throw CLI::ValidationError("cannot parse number '" + s + "'");
  const std::string rest(end);
  if (rest.empty()) return v;
  if (rest == "pi") return v * M_PI;
  throw CLI::ValidationError("trailing junk in number '" + s + "'");
}

SweepAxis parse_axis(const std::string& spec) {
  const std::size_t eq = spec.find('=');
  if (eq == std::string::npos) {
    throw CLI::ValidationError("--vary expects name=lo:hi:count, got '" + spec + "'");
  }
  SweepAxis ax;
  ax.name = spec.substr(0, eq);
  const std::string rhs = spec.substr(eq + 1);
  const std::size_t c1 = rhs.find(':');
  const std::size_t c2 = (c1 == std::string::npos) ? std::string::npos : rhs.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw CLI::ValidationError("--vary expects name=lo:hi:count, got '" + spec + "'");
  }
  ax.lo = parse_number(rhs.substr(0, c1));
  ax.hi = parse_number(rhs.substr(c1 + 1, c2 - c1 - 1));
  ax.count = static_cast<int>(std::strtol(rhs.substr(c2 + 1).c_str(), nullptr, 10));
  return ax;
}

std::vector<int> parse_pattern(const std::string& s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = s.find(',', pos);
    const std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
    out.push_back(static_cast<int>(std::strtol(item.c_str(), nullptr, 10)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

TruncationPolicy solver_policy(int cap) {
  TruncationPolicy p;
  p.photon_cap = cap;
  p.k_max = 1024;
  return p;
}

int cmd_amp(const std::string& config_path, const std::string& pattern_arg) {
  CircuitConfig cfg = parse_config_file(config_path);
  if (!pattern_arg.empty()) cfg.pattern = parse_pattern(pattern_arg);
  const BuiltCircuit built = build_circuit(cfg, {});
  const AmplitudeResult res = amplitude(built.circuit, built.pattern, built.policy);
  std::printf("re=%.17g im=%.17g abs=%.17g prob=%.17g tail=%.17g\n", res.amp.real(),
              res.amp.imag(), std::abs(res.amp), std::norm(res.amp), res.tail_bound);
  return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& vary,
              const std::string& vary2, const std::string& out_path) {
  const CircuitConfig cfg = parse_config_file(config_path);
  std::vector<SweepAxis> axes{parse_axis(vary)};
  if (!vary2.empty()) axes.push_back(parse_axis(vary2));
  const std::string csv = sweep_csv(cfg, axes);
  if (out_path.empty() || out_path == "-") {
    std::cout << csv;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << csv;
  }
  return 0;
}

int cmd_zeros(const std::string& solve, const std::vector<double>& params) {
  const double asinh1 = std::asinh(1.0);
  if (solve == "three_crystal") {
    if (params.size() != 3) {
      throw CLI::ValidationError("three_crystal takes three parameters: r1 r2 r3");
    }
    const double r1 = params[0], r2 = params[1], r3 = params[2];
    const auto sols = three_crystal_null(r1, r2, r3);
    if (!sols[0].feasible) {
      const double t1 = std::tanh(r1), t2 = std::tanh(r2), t3 = std::tanh(r3);
      const double lo = std::abs(t1 - t2) / (1.0 - t1 * t2);
      const double hi = (t1 + t2) / (1.0 + t1 * t2);
      std::printf("infeasible (t3 = %.6g outside [%.6g, %.6g])\n", t3, lo, hi);
      return 0;
    }
    for (int i = 0; i < 2; ++i) {
      const Circuit c = standard_circuit(StandardKind::ThreeCrystal,
                                         {r1, r2, r3, sols[i].phi1, sols[i].phi2});
      const double resid =
          std::abs(amplitude(c, OccupationVector{1, 1}, solver_policy(96)).amp);
      std::printf("solution %d: phi1=%.17g phi2=%.17g |A|=%.3e\n", i + 1, sols[i].phi1,
                  sols[i].phi2, resid);
    }
    return 0;
  }
  if (solve == "four_crystal_pi") {
    if (params.size() != 1) {
      throw CLI::ValidationError("four_crystal_pi takes one parameter: r1");
    }
    const double r1 = params[0];
    const double r3 = four_crystal_null_r3(r1);
    const Circuit c = standard_circuit(StandardKind::FourCrystal, {r1, r1, r3, r3, M_PI});
    const double resid =
        std::abs(amplitude(c, OccupationVector{1, 1, 1, 1}, solver_policy(56)).amp);
    std::printf("solution: r3=%.17g |A|=%.3e\n", r3, resid);
    return 0;
  }
  if (solve == "four_crystal_phi0") {
    if (params.size() != 2) {
      throw CLI::ValidationError("four_crystal_phi0 takes two parameters: r3 r4");
    }
    const double r3 = params[0], r4 = params[1];
    const auto r1 = four_crystal_phi0_null_r1(r3, r4);
    if (!r1) {
      std::printf("infeasible (|r3 - r4| = %.6g <= arcsinh(1) = %.6g)\n", std::abs(r3 - r4),
                  asinh1);
      return 0;
    }
    const Circuit c = standard_circuit(StandardKind::FourCrystal, {*r1, *r1, r3, r4, 0.0});
    const double resid =
        std::abs(amplitude(c, OccupationVector{1, 1, 1, 1}, solver_policy(56)).amp);
    std::printf("solution: r1=%.17g |A|=%.3e\n", *r1, resid);
    return 0;
  }
  throw CLI::ValidationError("unknown --solve '" + solve +
                             "' (expected three_crystal, four_crystal_pi, four_crystal_phi0)");
}

int cmd_validate(const std::string& suite, double tol) {
  const std::vector<CheckResult> checks = validate_suite(suite, tol);
  bool all_pass = true;
  for (const CheckResult& c : checks) {
    std::printf("%-55s max dev %.3e  (tol %.1e)  %s\n", c.name.c_str(), c.max_dev, c.tol,
                c.pass ? "PASS" : "FAIL");
    all_pass = all_pass && c.pass;
  }
  std::printf("%s\n", all_pass ? "all checks passed" : "validation FAILED");
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fock-basis simulator for cascaded two-mode-squeezer interferometers"};
  app.require_subcommand(1);

  std::string config_path, pattern_arg, vary, vary2, out_path;
  std::string solve, suite = "all";
  std::vector<double> zero_params;
  double tol = 1e-8;

  CLI::App* amp = app.add_subcommand("amp", "print one pattern amplitude");
  amp->add_option("config", config_path, "circuit config file")->required();
  amp->add_option("--pattern", pattern_arg, "detection pattern, e.g. 1,1");

  CLI::App* sweep = app.add_subcommand("sweep", "sweep parameters, emit CSV");
  sweep->add_option("config", config_path, "circuit config file")->required();
  sweep->add_option("--vary", vary, "axis spec name=lo:hi:count")->required();
  sweep->add_option("--vary2", vary2, "second axis spec");
  sweep->add_option("--out", out_path, "output CSV path (default stdout)");

  CLI::App* zeros = app.add_subcommand("zeros", "solve null conditions");
  zeros->add_option("--solve", solve, "three_crystal | four_crystal_pi | four_crystal_phi0")
      ->required();
  zeros->add_option("params", zero_params, "solver parameters");

  CLI::App* validate = app.add_subcommand("validate", "run self-check suites");
  validate->add_option("--suite", suite, "closedform | oracle | series | all");
  validate->add_option("--tol", tol, "pass/fail tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (amp->parsed()) return cmd_amp(config_path, pattern_arg);
    if (sweep->parsed()) return cmd_sweep(config_path, vary, vary2, out_path);
    if (zeros->parsed()) return cmd_zeros(solve, zero_params);
    if (validate->parsed()) return cmd_validate(suite, tol);
  } catch (const su11::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
