// Copyright 2026 The su11sim Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>
#include <stdexcept>

#include "doctest.h"
#include "su11/circuit.hpp"
#include "su11/closed_forms.hpp"
#include "su11/engine.hpp"
#include "su11/fock.hpp"
#include "su11/series.hpp"

namespace su11 {
namespace {

TruncationPolicy series_policy(int cap) {
  TruncationPolicy p;
  p.photon_cap = cap;
  p.k_max = 4096;
  p.term_floor = 1e-16;
  p.prune_floor = 1e-16;
  return p;
}

double state_deviation(const SparseFockState& a, const SparseFockState& b) {
  double dev = 0.0;
  for (const auto& [occ, amp] : a.terms) {
    dev = std::max(dev, std::abs(amp - amplitude_of(b, occ)));
  }
  for (const auto& [occ, amp] : b.terms) {
    dev = std::max(dev, std::abs(amp - amplitude_of(a, occ)));
  }
  return dev;
}

TEST_SUITE_BEGIN("series");

TEST_CASE("zero squeezing yields vacuum for every setup") {
  const TruncationPolicy p = series_policy(16);
  for (const SparseFockState& s :
       {two_crystal_series_state(0.0, 0.0, 0.7, p),
        three_crystal_series_state(0.0, 0.0, 0.0, 0.7, 1.9, p)}) {
    CHECK(s.size() == 1);
    CHECK(amplitude_of(s, OccupationVector::zeros(2)) == complex(1.0, 0.0));
  }
  const SparseFockState four = four_crystal_series_state(0.0, 0.0, 0.0, 0.0, 0.7, p);
  CHECK(four.size() == 1);
  CHECK(amplitude_of(four, OccupationVector::zeros(4)) == complex(1.0, 0.0));
}

TEST_CASE("two-crystal series cancels the pair term at phi = pi") {
  const TruncationPolicy p = series_policy(64);
  for (double r : {0.3, 1.0}) {
    const SparseFockState s = two_crystal_series_state(r, r, M_PI, p);
    CHECK(std::abs(amplitude_of(s, OccupationVector{1, 1})) < 1e-12);
  }
}

TEST_CASE("two-crystal series matches the sequential engine state") {
  // Full-state comparisons need the second gain weak enough that high-photon
  // roundoff stays damped: the pair (0.5, 0.9) satisfies that; stronger first
  // crystals would let noise grow with the photon cap.
  const TruncationPolicy p = series_policy(128);
  const SparseFockState series = two_crystal_series_state(0.5, 0.9, 1.3, p);
  const Circuit c = standard_circuit(StandardKind::TwoCrystal, {0.5, 0.9, 1.3});
  const SparseFockState engine = run(c, p);
  CHECK(state_deviation(series, engine) < 1e-10);
}

TEST_CASE("three-crystal series reproduces the pi-pi identity") {
  const TruncationPolicy p = series_policy(96);
  const double r = 0.7;
  const SparseFockState s = three_crystal_series_state(r, r, r, M_PI, M_PI, p);
  const complex want(-std::tanh(r) / std::cosh(r), 0.0);
  CHECK(std::abs(amplitude_of(s, OccupationVector{1, 1}) - want) < 1e-10);
}

TEST_CASE("three-crystal series vanishes at the solved null phases") {
  const TruncationPolicy p = series_policy(96);
  const auto sols = three_crystal_null(1.0, 0.5, 0.6);
  REQUIRE(sols[0].feasible);
  const SparseFockState s =
      three_crystal_series_state(1.0, 0.5, 0.6, sols[0].phi1, sols[0].phi2, p);
  CHECK(std::abs(amplitude_of(s, OccupationVector{1, 1})) < 1e-9);
}

TEST_CASE("four-crystal series matches the closed-form catalog entry") {
  const TruncationPolicy p = series_policy(32);
  for (double phi : {0.0, M_PI / 2.0, M_PI}) {
    const SparseFockState s = four_crystal_series_state(0.2, 0.3, 0.25, 0.15, phi, p);
    const complex want = amp_four_crystal_1111(0.2, 0.3, 0.25, 0.15, phi);
    CHECK(std::abs(amplitude_of(s, OccupationVector{1, 1, 1, 1}) - want) < 1e-9);
  }
}

TEST_CASE("four-crystal series hits the pi null of the gain relation") {
  const TruncationPolicy p = series_policy(32);
  const double r1 = 0.4;
  const double r3 = four_crystal_null_r3(r1);
  const SparseFockState s = four_crystal_series_state(r1, r1, r3, r3, M_PI, p);
  CHECK(std::abs(amplitude_of(s, OccupationVector{1, 1, 1, 1})) < 1e-9);
}

TEST_CASE("series states stay normalized from below") {
  const TruncationPolicy p = series_policy(48);
  CHECK(norm(two_crystal_series_state(0.5, 0.8, 2.0, p)) <= 1.0 + 1e-10);
  CHECK(norm(three_crystal_series_state(0.4, 0.5, 0.6, 1.0, 2.0, p)) <= 1.0 + 1e-10);
  CHECK(norm(four_crystal_series_state(0.2, 0.25, 0.3, 0.2, 1.0, series_policy(32))) <=
        1.0 + 1e-10);
}

TEST_CASE("norm deficit shrinks as the cap grows") {
  const double d24 = 1.0 - norm(two_crystal_series_state(0.5, 0.5, 1.0, series_policy(24)));
  const double d64 = 1.0 - norm(two_crystal_series_state(0.5, 0.5, 1.0, series_policy(64)));
  CHECK(d64 < d24);
  CHECK(std::abs(d64) < 1e-10);
}

TEST_CASE("unreachable convergence raises") {
  const TruncationPolicy p = series_policy(32);
  CHECK_THROWS_AS(two_crystal_series_state(32.0, 0.5, 0.0, p), ConvergenceError);
  CHECK_THROWS_AS(three_crystal_series_state(0.5, 32.0, 0.5, 0.0, 0.0, p),
                  ConvergenceError);
}

TEST_CASE("four-crystal series refuses caps beyond its memory budget") {
  const TruncationPolicy p = series_policy(64);
  CHECK_THROWS_AS(four_crystal_series_state(0.2, 0.2, 0.2, 0.2, 0.0, p),
                  std::invalid_argument);
}

TEST_SUITE_END();

}  // namespace
}  // namespace su11
