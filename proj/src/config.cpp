// Copyright 2026 The su11sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "su11/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace su11 {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "config line %d: %s", line, what.c_str());
  throw std::runtime_error(buf);
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool is_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

// number | number"pi" | name | number"*"name
ParamValue parse_value(const std::string& raw, int line) {
  const std::string s = trim(raw);
  if (s.empty()) fail(line, "empty value");
  ParamValue pv;
  if (is_name(s)) {
    pv.is_ref = true;
    pv.ref = s;
    return pv;
  }
  const char* begin = s.c_str();
  char* end = nullptr;
  const double num = std::strtod(begin, &end);
  if (end == begin) fail(line, "cannot parse value '" + s + "'");
  std::string rest = trim(std::string(end));
  if (rest.empty()) {
    pv.number = num;
    return pv;
  }
  if (rest == "pi") {
    pv.number = num * M_PI;
    return pv;
  }
  if (rest.size() > 1 && rest[0] == '*') {
    const std::string name = trim(rest.substr(1));
    if (!is_name(name)) fail(line, "expected a parameter name after '*' in '" + s + "'");
    pv.is_ref = true;
    pv.coef = num;
    pv.ref = name;
    return pv;
  }
  fail(line, "trailing junk in value '" + s + "'");
}

std::vector<int> parse_int_list(const std::string& raw, int line) {
  std::vector<int> out;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string t = trim(item);
    if (t.empty()) fail(line, "empty entry in list '" + raw + "'");
    char* end = nullptr;
    const long v = std::strtol(t.c_str(), &end, 10);
    if (end == t.c_str() || *end != '\0' || v < 0) {
      fail(line, "expected a non-negative integer, got '" + t + "'");
    }
    out.push_back(static_cast<int>(v));
  }
  if (out.empty()) fail(line, "empty list");
  return out;
}

RawElement parse_element(const std::string& raw, int line) {
  std::stringstream ss(raw);
  std::string op;
  ss >> op;
  RawElement el;
  el.line = line;
  std::vector<std::string> args;
  std::string a;
  while (ss >> a) args.push_back(a);
  if (op == "squeeze") {
    if (args.size() != 4) fail(line, "squeeze takes: mode_a mode_b r theta");
    el.is_squeeze = true;
    el.mode_a = static_cast<int>(std::strtol(args[0].c_str(), nullptr, 10));
    el.mode_b = static_cast<int>(std::strtol(args[1].c_str(), nullptr, 10));
    el.r = parse_value(args[2], line);
    el.theta = parse_value(args[3], line);
  } else if (op == "phase") {
    if (args.size() != 2) fail(line, "phase takes: mode phi");
    el.is_squeeze = false;
    el.mode_a = static_cast<int>(std::strtol(args[0].c_str(), nullptr, 10));
    el.phi = parse_value(args[1], line);
  } else {
    fail(line, "unknown element '" + op + "' (expected squeeze or phase)");
  }
  return el;
}

double parse_plain_number(const std::string& raw, int line) {
  const ParamValue pv = parse_value(raw, line);
  if (pv.is_ref) fail(line, "this key takes a literal number");
  return pv.number;
}

}  // namespace

CircuitConfig parse_config_text(const std::string& text) {
  CircuitConfig cfg;
  std::stringstream ss(text);
  std::string raw_line;
  int line = 0;
  while (std::getline(ss, raw_line)) {
    ++line;
    const std::size_t hash = raw_line.find('#');
    if (hash != std::string::npos) raw_line.erase(hash);
    const std::string s = trim(raw_line);
    if (s.empty()) continue;
    const std::size_t eq = s.find('=');
    if (eq == std::string::npos) fail(line, "expected 'key = value'");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (!is_name(key)) fail(line, "bad key '" + key + "'");
    if (value.empty()) fail(line, "empty value for '" + key + "'");

    if (key == "kind") {
      if (!cfg.kind.empty()) fail(line, "duplicate 'kind'");
      if (value != "single_seeded" && value != "two_crystal" && value != "three_crystal" &&
          value != "four_crystal" && value != "elements") {
        fail(line, "unknown kind '" + value + "'");
      }
      cfg.kind = value;
    } else if (key == "modes") {
      cfg.modes = static_cast<int>(parse_plain_number(value, line));
    } else if (key == "input") {
      cfg.input = parse_int_list(value, line);
    } else if (key == "pattern") {
      cfg.pattern = parse_int_list(value, line);
    } else if (key == "element") {
      cfg.elements.push_back(parse_element(value, line));
    } else if (key == "term_floor") {
      cfg.term_floor = parse_plain_number(value, line);
    } else if (key == "k_max") {
      cfg.k_max = static_cast<int>(parse_plain_number(value, line));
    } else if (key == "photon_cap") {
      cfg.photon_cap = static_cast<int>(parse_plain_number(value, line));
    } else if (key == "prune_floor") {
      cfg.prune_floor = parse_plain_number(value, line);
    } else if (key == "pi") {
      fail(line, "'pi' is reserved");
    } else {
      if (cfg.params.count(key)) fail(line, "duplicate parameter '" + key + "'");
      cfg.params[key] = parse_value(value, line);
    }
  }
  if (cfg.kind.empty()) throw std::runtime_error("config: missing 'kind'");
  return cfg;
}

CircuitConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

namespace {

std::map<std::string, double> resolve_params(const CircuitConfig& cfg,
                                             const std::map<std::string, double>& overrides) {
  std::map<std::string, double> resolved = overrides;
  resolved["pi"] = M_PI;
  // Literal (non-reference) parameters not overridden resolve immediately.
  for (const auto& [name, pv] : cfg.params) {
    if (!pv.is_ref && !resolved.count(name)) resolved[name] = pv.number;
  }
  // Chase references until a full pass makes no progress.
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& [name, pv] : cfg.params) {
      if (!pv.is_ref || resolved.count(name)) continue;
      const auto it = resolved.find(pv.ref);
      if (it != resolved.end()) {
        resolved[name] = pv.coef * it->second;
        progress = true;
      }
    }
  }
  for (const auto& [name, pv] : cfg.params) {
    if (!resolved.count(name)) {
      throw std::runtime_error("config: parameter '" + name + "' references '" + pv.ref +
                               "', which is undefined or circular");
    }
  }
  return resolved;
}

double lookup(const std::map<std::string, double>& resolved, const std::string& name,
              const char* kind) {
  const auto it = resolved.find(name);
  if (it == resolved.end()) {
    throw std::runtime_error(std::string("config: kind '") + kind +
                             "' needs parameter '" + name + "'");
  }
  return it->second;
}

double eval_value(const ParamValue& pv, const std::map<std::string, double>& resolved,
                  int line) {
  if (!pv.is_ref) return pv.number;
  const auto it = resolved.find(pv.ref);
  if (it == resolved.end()) fail(line, "reference to undefined parameter '" + pv.ref + "'");
  return pv.coef * it->second;
}

}  // namespace

BuiltCircuit build_circuit(const CircuitConfig& cfg,
                           const std::map<std::string, double>& overrides) {
  BuiltCircuit out;
  out.resolved = resolve_params(cfg, overrides);
  const auto& res = out.resolved;

  if (cfg.kind == "single_seeded") {
    out.circuit = standard_circuit(StandardKind::SingleSeeded,
                                   {lookup(res, "r", "single_seeded")});
  } else if (cfg.kind == "two_crystal") {
    out.circuit = standard_circuit(
        StandardKind::TwoCrystal,
        {lookup(res, "r1", "two_crystal"), lookup(res, "r2", "two_crystal"),
         lookup(res, "phi", "two_crystal")});
  } else if (cfg.kind == "three_crystal") {
    out.circuit = standard_circuit(
        StandardKind::ThreeCrystal,
        {lookup(res, "r1", "three_crystal"), lookup(res, "r2", "three_crystal"),
         lookup(res, "r3", "three_crystal"), lookup(res, "phi1", "three_crystal"),
         lookup(res, "phi2", "three_crystal")});
  } else if (cfg.kind == "four_crystal") {
    out.circuit = standard_circuit(
        StandardKind::FourCrystal,
        {lookup(res, "r1", "four_crystal"), lookup(res, "r2", "four_crystal"),
         lookup(res, "r3", "four_crystal"), lookup(res, "r4", "four_crystal"),
         lookup(res, "phi", "four_crystal")});
  } else if (cfg.kind == "elements") {
    if (cfg.modes < 1 || cfg.modes > max_modes) {
      throw std::runtime_error("config: 'elements' needs modes in 1.." +
                               std::to_string(max_modes));
    }
    out.circuit.mode_count = cfg.modes;
    if (cfg.input.empty()) {
      out.circuit.input = OccupationVector::zeros(cfg.modes);
    } else {
      if (static_cast<int>(cfg.input.size()) != cfg.modes) {
        throw std::runtime_error("config: 'input' length does not match 'modes'");
      }
      OccupationVector occ = OccupationVector::zeros(cfg.modes);
      for (int m = 0; m < cfg.modes; ++m) occ.set(m, cfg.input[static_cast<std::size_t>(m)]);
      out.circuit.input = occ;
    }
    for (const RawElement& el : cfg.elements) {
      if (el.is_squeeze) {
        out.circuit.elements.push_back(
            TwoModeSqueezer{el.mode_a, el.mode_b, eval_value(el.r, res, el.line),
                            eval_value(el.theta, res, el.line)});
      } else {
        out.circuit.elements.push_back(
            PhaseShifter{el.mode_a, eval_value(el.phi, res, el.line)});
      }
    }
    out.circuit.validate();
  } else {
    throw std::runtime_error("config: unknown kind '" + cfg.kind + "'");
  }

  out.policy = default_policy_for(out.circuit);
  if (cfg.term_floor) out.policy.term_floor = *cfg.term_floor;
  if (cfg.k_max) out.policy.k_max = *cfg.k_max;
  if (cfg.photon_cap) out.policy.photon_cap = *cfg.photon_cap;
  if (cfg.prune_floor) out.policy.prune_floor = *cfg.prune_floor;
  out.policy.validate();

  std::vector<int> pat = cfg.pattern;
  if (pat.empty()) pat.assign(static_cast<std::size_t>(out.circuit.mode_count), 1);
  if (static_cast<int>(pat.size()) != out.circuit.mode_count) {
    throw std::runtime_error("config: 'pattern' length does not match the mode count");
  }
  OccupationVector pocc = OccupationVector::zeros(out.circuit.mode_count);
  for (int m = 0; m < out.circuit.mode_count; ++m) {
    pocc.set(m, pat[static_cast<std::size_t>(m)]);
  }
  out.pattern = pocc;
  return out;
}

}  // namespace su11
