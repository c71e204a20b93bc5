// Copyright 2026 The su11sim Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>
#include <stdexcept>
#include <variant>
#include <vector>

#include "doctest.h"
#include "su11/circuit.hpp"
#include "su11/closed_forms.hpp"
#include "su11/fock.hpp"

namespace su11 {
namespace {

TruncationPolicy wide_policy(int cap) {
  TruncationPolicy p;
  p.photon_cap = cap;
  p.k_max = 1024;
  return p;
}

TEST_SUITE_BEGIN("circuit");

TEST_CASE("single seeded geometry") {
  const Circuit c = standard_circuit(StandardKind::SingleSeeded, {0.7});
  CHECK(c.mode_count == 2);
  CHECK(c.input == OccupationVector{1, 1});
  REQUIRE(c.elements.size() == 1);
  const auto& sq = std::get<TwoModeSqueezer>(c.elements[0]);
  CHECK(sq.mode_a == 0);
  CHECK(sq.mode_b == 1);
  CHECK(sq.r == 0.7);
  CHECK(sq.theta == 0.0);
}

TEST_CASE("two-crystal geometry") {
  const Circuit c = standard_circuit(StandardKind::TwoCrystal, {0.3, 0.4, 1.5});
  CHECK(c.mode_count == 2);
  CHECK(c.input == OccupationVector{0, 0});
  REQUIRE(c.elements.size() == 3);
  CHECK(std::get<TwoModeSqueezer>(c.elements[0]).r == 0.3);
  const auto& ph = std::get<PhaseShifter>(c.elements[1]);
  CHECK(ph.mode == 0);
  CHECK(ph.phi == 1.5);
  CHECK(std::get<TwoModeSqueezer>(c.elements[2]).r == 0.4);
}

TEST_CASE("three-crystal geometry") {
  const Circuit c = standard_circuit(StandardKind::ThreeCrystal, {0.1, 0.2, 0.3, 1.0, 2.0});
  REQUIRE(c.elements.size() == 5);
  CHECK(std::get<TwoModeSqueezer>(c.elements[0]).r == 0.1);
  CHECK(std::get<PhaseShifter>(c.elements[1]).phi == 1.0);
  CHECK(std::get<TwoModeSqueezer>(c.elements[2]).r == 0.2);
  CHECK(std::get<PhaseShifter>(c.elements[3]).phi == 2.0);
  CHECK(std::get<TwoModeSqueezer>(c.elements[4]).r == 0.3);
}

TEST_CASE("four-crystal geometry") {
  const Circuit c =
      standard_circuit(StandardKind::FourCrystal, {0.1, 0.2, 0.3, 0.4, 2.5});
  CHECK(c.mode_count == 4);
  REQUIRE(c.elements.size() == 5);
  const auto& s1 = std::get<TwoModeSqueezer>(c.elements[0]);
  CHECK(s1.mode_a == 0);
  CHECK(s1.mode_b == 2);
  CHECK(s1.r == 0.1);
  const auto& s2 = std::get<TwoModeSqueezer>(c.elements[1]);
  CHECK(s2.mode_a == 1);
  CHECK(s2.mode_b == 3);
  CHECK(s2.r == 0.2);
  const auto& ph = std::get<PhaseShifter>(c.elements[2]);
  CHECK(ph.mode == 0);
  CHECK(ph.phi == 2.5);
  const auto& s3 = std::get<TwoModeSqueezer>(c.elements[3]);
  CHECK(s3.mode_a == 0);
  CHECK(s3.mode_b == 1);
  CHECK(s3.r == 0.3);
  const auto& s4 = std::get<TwoModeSqueezer>(c.elements[4]);
  CHECK(s4.mode_a == 2);
  CHECK(s4.mode_b == 3);
  CHECK(s4.r == 0.4);
}

TEST_CASE("standard circuits reject wrong arity") {
  CHECK_THROWS_AS(standard_circuit(StandardKind::SingleSeeded, {0.7, 0.1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(standard_circuit(StandardKind::TwoCrystal, {0.3}), std::invalid_argument);
  CHECK_THROWS_AS(standard_circuit(StandardKind::ThreeCrystal, {0.1, 0.2, 0.3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(standard_circuit(StandardKind::FourCrystal, {0.1}), std::invalid_argument);
}

TEST_CASE("circuit validation") {
  Circuit c;
  c.mode_count = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);

  c = standard_circuit(StandardKind::TwoCrystal, {0.3, 0.4, 1.5});
  c.elements.push_back(TwoModeSqueezer{0, 5, 0.1, 0.0});
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);

  c = standard_circuit(StandardKind::TwoCrystal, {0.3, 0.4, 1.5});
  c.input = OccupationVector{0, 0, 0};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);

  c = standard_circuit(StandardKind::TwoCrystal, {0.3, 0.4, 1.5});
  c.elements.push_back(PhaseShifter{4, 0.2});
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("default policy widens with mode count") {
  CHECK(default_policy_for(standard_circuit(StandardKind::TwoCrystal, {0.3, 0.4, 0.0}))
            .photon_cap == 40);
  CHECK(default_policy_for(
            standard_circuit(StandardKind::FourCrystal, {0.1, 0.2, 0.3, 0.4, 0.0}))
            .photon_cap == 24);
}

TEST_CASE("running an empty circuit returns the input") {
  Circuit c;
  c.mode_count = 2;
  c.input = OccupationVector{0, 0};
  const SparseFockState out = run(c, wide_policy(40));
  CHECK(out.size() == 1);
  CHECK(amplitude_of(out, OccupationVector{0, 0}) == complex(1.0, 0.0));
}

TEST_CASE("seeded crystal run nulls the pair at gain two") {
  const Circuit c = standard_circuit(StandardKind::SingleSeeded, {std::asinh(1.0)});
  const SparseFockState out = run(c, wide_policy(40));
  CHECK(std::abs(amplitude_of(out, OccupationVector{1, 1})) < 1e-12);
}

TEST_CASE("amplitude of the trivial seeded circuit") {
  const Circuit c = standard_circuit(StandardKind::SingleSeeded, {0.0});
  const AmplitudeResult res = amplitude(c, OccupationVector{1, 1}, wide_policy(40));
  CHECK(res.amp == complex(1.0, 0.0));
  CHECK(res.tail_bound == 0.0);
}

TEST_CASE("amplitude validates the pattern length") {
  const Circuit c = standard_circuit(StandardKind::TwoCrystal, {0.3, 0.4, 1.5});
  CHECK_THROWS_AS(amplitude(c, OccupationVector{1, 1, 1}, wide_policy(40)),
                  std::invalid_argument);
}

TEST_CASE("low-gain two-crystal probability is sinusoidal in the pump phase") {
  const double r = 0.01;
  double worst = 0.0;
  for (int k = 0; k < 24; ++k) {
    if (k == 12) continue;  // both sides vanish at phi = pi
    const double phi = 2.0 * M_PI * k / 24.0;
    const Circuit c = standard_circuit(StandardKind::TwoCrystal, {r, r, phi});
    const AmplitudeResult res = amplitude(c, OccupationVector{1, 1}, wide_policy(40));
    const double want = 4.0 * r * r * std::pow(std::cos(phi / 2.0), 2);
    worst = std::max(worst, std::abs(std::norm(res.amp) - want) / want);
  }
  CHECK(worst < 0.01);
}

TEST_CASE("engine amplitude matches the two-crystal closed form") {
  const AmplitudeResult res =
      amplitude(standard_circuit(StandardKind::TwoCrystal, {0.9, 0.4, 1.1}),
                OccupationVector{1, 1}, wide_policy(96));
  CHECK(std::abs(res.amp - amp_two_crystal_11(0.9, 0.4, 1.1)) < 1e-10);
}

TEST_CASE("engine amplitude matches the three-crystal closed form") {
  const AmplitudeResult res =
      amplitude(standard_circuit(StandardKind::ThreeCrystal, {0.9, 0.4, 0.7, 1.1, 2.2}),
                OccupationVector{1, 1}, wide_policy(96));
  CHECK(std::abs(res.amp - amp_three_crystal_11(0.9, 0.4, 0.7, 1.1, 2.2)) < 1e-10);
}

TEST_CASE("engine amplitude matches the four-crystal closed form") {
  const AmplitudeResult res =
      amplitude(standard_circuit(StandardKind::FourCrystal, {0.3, 0.4, 0.5, 0.6, 1.234}),
                OccupationVector{1, 1, 1, 1}, wide_policy(32));
  CHECK(std::abs(res.amp - amp_four_crystal_1111(0.3, 0.4, 0.5, 0.6, 1.234)) < 1e-9);
}

TEST_CASE("three-crystal equal-gain null through the engine") {
  const double th = three_crystal_equal_null_phase(1.0);
  const AmplitudeResult res =
      amplitude(standard_circuit(StandardKind::ThreeCrystal, {1.0, 1.0, 1.0, th, th}),
                OccupationVector{1, 1}, wide_policy(64));
  CHECK(std::abs(res.amp) < 1e-9);
}

TEST_CASE("four-crystal pi null through the engine") {
  const double r3 = four_crystal_null_r3(0.6);
  const AmplitudeResult res =
      amplitude(standard_circuit(StandardKind::FourCrystal, {0.6, 0.6, r3, r3, M_PI}),
                OccupationVector{1, 1, 1, 1}, wide_policy(56));
  CHECK(std::abs(res.amp) < 1e-9);
}

TEST_CASE("projection fast path agrees with a full run") {
  const Circuit c = standard_circuit(StandardKind::TwoCrystal, {0.5, 0.7, 2.0});
  const AmplitudeResult fast = amplitude(c, OccupationVector{1, 1}, wide_policy(64));
  const SparseFockState full = run(c, wide_policy(64));
  CHECK(std::abs(fast.amp - amplitude_of(full, OccupationVector{1, 1})) < 1e-10);
}

TEST_CASE("convergence failures propagate") {
  const Circuit c = standard_circuit(StandardKind::TwoCrystal, {16.0, 0.5, 0.0});
  CHECK_THROWS_AS(amplitude(c, OccupationVector{1, 1}, wide_policy(40)), ConvergenceError);
}

TEST_SUITE_END();

}  // namespace
}  // namespace su11
