// Copyright 2026 The su11sim Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <stdexcept>
#include <string>
#include <variant>

#include "doctest.h"
#include "su11/circuit.hpp"
#include "su11/config.hpp"

namespace su11 {
namespace {

TEST_SUITE_BEGIN("config");

void check_throws_with(const std::string& text, const std::string& needle) {
  try {
    const CircuitConfig cfg = parse_config_text(text);
    build_circuit(cfg, {});
    FAIL("expected a failure mentioning '", needle, "'");
  } catch (const std::exception& e) {
    const std::string msg = e.what();
    CHECK_MESSAGE(msg.find(needle) != std::string::npos, "got: ", msg);
  }
}

TEST_CASE("parse a standard geometry with comments and references") {
  const CircuitConfig cfg = parse_config_text(
      "# two coherently pumped crystals\n"
      "kind = two_crystal\n"
      "r1 = 0.9\n"
      "r2 = r1   # matched gains\n"
      "phi = 0.5pi\n");
  CHECK(cfg.kind == "two_crystal");
  CHECK(cfg.params.at("r1").number == 0.9);
  CHECK(cfg.params.at("r2").is_ref);
  CHECK(cfg.params.at("r2").ref == "r1");
  CHECK(cfg.params.at("phi").number == 0.5 * M_PI);

  const BuiltCircuit built = build_circuit(cfg, {});
  CHECK(built.resolved.at("r2") == 0.9);
  CHECK(built.circuit.mode_count == 2);
  CHECK(built.circuit.elements.size() == 3);
  CHECK(built.pattern.str() == "1,1");
  CHECK(built.policy.photon_cap == 40);
}

TEST_CASE("bare pi and scaled references resolve") {
  const CircuitConfig cfg = parse_config_text(
      "kind = four_crystal\n"
      "r1 = 0.3\n"
      "r2 = r1\n"
      "r3 = 0.2\n"
      "r4 = 2*r3\n"
      "phi = pi\n");
  const BuiltCircuit built = build_circuit(cfg, {});
  CHECK(built.resolved.at("phi") == M_PI);
  CHECK(built.resolved.at("r4") == 0.4);
  CHECK(built.circuit.mode_count == 4);
  CHECK(built.pattern.str() == "1,1,1,1");
  CHECK(built.policy.photon_cap == 24);
}

TEST_CASE("overrides win and references chase the overridden value") {
  const CircuitConfig cfg = parse_config_text(
      "kind = two_crystal\n"
      "r1 = 0.3\n"
      "r2 = r1\n"
      "phi = 0\n");
  const BuiltCircuit built = build_circuit(cfg, {{"r1", 0.9}, {"phi", 1.25}});
  CHECK(built.resolved.at("r1") == 0.9);
  CHECK(built.resolved.at("r2") == 0.9);
  CHECK(built.resolved.at("phi") == 1.25);
}

TEST_CASE("elements form builds an explicit circuit") {
  const CircuitConfig cfg = parse_config_text(
      "kind = elements\n"
      "modes = 4\n"
      "input = 0,1,0,2\n"
      "g = 0.7\n"
      "element = squeeze 0 2 g 0.0\n"
      "element = phase 0 0.25pi\n"
      "element = squeeze 1 3 0.4 pi\n"
      "pattern = 1,1,1,1\n");
  const BuiltCircuit built = build_circuit(cfg, {});
  CHECK(built.circuit.mode_count == 4);
  CHECK(built.circuit.input.str() == "0,1,0,2");
  REQUIRE(built.circuit.elements.size() == 3);
  const auto& sq = std::get<TwoModeSqueezer>(built.circuit.elements[0]);
  CHECK(sq.mode_a == 0);
  CHECK(sq.mode_b == 2);
  CHECK(sq.r == 0.7);
  const auto& ph = std::get<PhaseShifter>(built.circuit.elements[1]);
  CHECK(ph.mode == 0);
  CHECK(ph.phi == 0.25 * M_PI);
  CHECK(std::get<TwoModeSqueezer>(built.circuit.elements[2]).theta == M_PI);
}

TEST_CASE("policy overrides flow through and are validated") {
  const CircuitConfig cfg = parse_config_text(
      "kind = single_seeded\n"
      "r = 0.5\n"
      "term_floor = 1e-16\n"
      "k_max = 512\n"
      "photon_cap = 96\n"
      "prune_floor = 1e-15\n");
  const BuiltCircuit built = build_circuit(cfg, {});
  CHECK(built.policy.term_floor == 1e-16);
  CHECK(built.policy.k_max == 512);
  CHECK(built.policy.photon_cap == 96);
  CHECK(built.policy.prune_floor == 1e-15);

  const CircuitConfig bad = parse_config_text(
      "kind = single_seeded\n"
      "r = 0.5\n"
      "photon_cap = 0\n");
  CHECK_THROWS_AS(build_circuit(bad, {}), std::invalid_argument);
}

TEST_CASE("a built standard circuit reproduces a known null") {
  const CircuitConfig cfg = parse_config_text(
      "kind = two_crystal\n"
      "r1 = 0.8\n"
      "r2 = r1\n"
      "phi = pi\n");
  const BuiltCircuit built = build_circuit(cfg, {});
  const AmplitudeResult res = amplitude(built.circuit, built.pattern, built.policy);
  CHECK(std::abs(res.amp) < 1e-12);
}

TEST_CASE("parse errors carry the line number") {
  check_throws_with("kind = two_crystal\nr1 = 0.2\nthis is not a pair\n",
                    "config line 3");
  check_throws_with("kind = two_crystal\nr1 = 0.2bogus\n", "trailing junk");
  check_throws_with("kind = nope\n", "unknown kind 'nope'");
  check_throws_with("kind = two_crystal\nkind = two_crystal\n", "duplicate 'kind'");
  check_throws_with("kind = two_crystal\nr1 = 0.2\nr1 = 0.3\n",
                    "duplicate parameter 'r1'");
  check_throws_with("kind = two_crystal\npi = 3\n", "'pi' is reserved");
  check_throws_with("r1 = 0.2\n", "missing 'kind'");
  check_throws_with("kind = elements\nmodes = r1\n", "literal number");
  check_throws_with("kind = elements\nmodes = 2\ninput = 1,-1\n",
                    "non-negative integer");
  check_throws_with("kind = elements\nmodes = 2\nelement = squeeze 0 1 0.5\n",
                    "squeeze takes");
  check_throws_with("kind = elements\nmodes = 2\nelement = swap 0 1\n",
                    "unknown element 'swap'");
}

TEST_CASE("build-time errors name the offending piece") {
  check_throws_with("kind = two_crystal\nr1 = 0.2\nphi = 0\n",
                    "needs parameter 'r2'");
  check_throws_with("kind = two_crystal\nr1 = 0.2\nr2 = rX\nphi = 0\n",
                    "undefined or circular");
  check_throws_with("kind = two_crystal\nr1 = a\na = r1\nr2 = 0.2\nphi = 0\n",
                    "undefined or circular");
  check_throws_with("kind = two_crystal\nr1 = 0.2\nr2 = 0.2\nphi = 0\npattern = 1,1,1\n",
                    "'pattern' length");
  check_throws_with("kind = elements\nmodes = 2\ninput = 1,1,1\n",
                    "'input' length");
  check_throws_with("kind = elements\nmodes = 99\n", "modes in 1..");
  check_throws_with(
      "kind = elements\nmodes = 2\nelement = squeeze 0 1 0.5 q\n",
      "undefined parameter 'q'");
}

TEST_CASE("missing config files are reported by path") {
  try {
    parse_config_file("/nonexistent/su11.cfg");
    FAIL("expected an open failure");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("/nonexistent/su11.cfg") != std::string::npos);
  }
}

TEST_SUITE_END();

}  // namespace
}  // namespace su11
