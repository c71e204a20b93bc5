// Copyright 2026 The su11sim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Text-format circuit descriptions. A config is a sequence of
// "key = value" lines with "#" comments. Either a named geometry:
//
//   kind = two_crystal
//   r1 = 0.9
//   r2 = r1            # parameters may reference other parameters
//   phi = 0.5pi        # "pi" suffix multiplies by pi
//
// or an explicit element list:
//
//   kind = elements
//   modes = 4
//   input = 0,0,0,0
//   element = squeeze 0 2 0.9 0.0    # squeeze mode_a mode_b r theta
//   element = phase 0 phi            # phase mode angle
//
// Optional keys: pattern = 1,1 (detection pattern) and the policy
// overrides term_floor, k_max, photon_cap, prune_floor. Values of the form
// "2*r3" scale a referenced parameter. Unknown keys are errors; parse
// errors carry the line number.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "su11/circuit.hpp"

namespace su11 {

// A right-hand side: either a literal number or coef * (named parameter).
struct ParamValue {
  bool is_ref = false;
  double number = 0.0;
  double coef = 1.0;
  std::string ref;
};

struct RawElement {
  bool is_squeeze = false;
  int mode_a = 0;
  int mode_b = 0;
  ParamValue r;
  ParamValue theta;  // squeeze only
  ParamValue phi;    // phase only
  int line = 0;
};

struct CircuitConfig {
  std::string kind;
  std::map<std::string, ParamValue> params;
  int modes = 0;                  // elements form
  std::vector<int> input;         // elements form; empty = vacuum
  std::vector<RawElement> elements;
  std::vector<int> pattern;       // empty = per-kind default
  std::optional<double> term_floor;
  std::optional<int> k_max;
  std::optional<int> photon_cap;
  std::optional<double> prune_floor;
};

CircuitConfig parse_config_text(const std::string& text);
CircuitConfig parse_config_file(const std::string& path);

struct BuiltCircuit {
  Circuit circuit;
  TruncationPolicy policy;
  OccupationVector pattern;
  std::map<std::string, double> resolved;  // final numeric parameter values
};

// Resolve parameters (overrides win over config values; references are
// chased after overrides; "pi" resolves to pi) and construct the circuit,
// policy, and detection pattern.
BuiltCircuit build_circuit(const CircuitConfig& config,
                           const std::map<std::string, double>& overrides);

}  // namespace su11
