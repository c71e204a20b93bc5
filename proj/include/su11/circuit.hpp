// Copyright 2026 The su11sim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Circuit composition: ordered squeezer/phase-shifter lists applied through
// the engine, the named crystal geometries, and pattern-amplitude extraction
// with a closed final projection (the last squeezer, when present, is
// projected analytically instead of expanded, which is exact and avoids the
// photon cap on the last step).

#pragma once

#include <variant>
#include <vector>

#include "su11/engine.hpp"
#include "su11/fock.hpp"

namespace su11 {

using CircuitElement = std::variant<TwoModeSqueezer, PhaseShifter>;

struct Circuit {
  int mode_count = 0;
  std::vector<CircuitElement> elements;
  OccupationVector input;  // must have mode_count modes; vacuum by default

  void validate() const;
};

struct AmplitudeResult {
  complex amp;
  double tail_bound = 0.0;
};

// The named geometries:
//   single_seeded: S01(r) on |1,1>
//   two_crystal:   S01(r1), Phi0(phi), S01(r2) on vacuum
//   three_crystal: S01(r1), Phi0(phi1), S01(r2), Phi0(phi2), S01(r3) on vacuum
//   four_crystal:  S02(r1), S13(r2), Phi0(phi), S01(r3), S23(r4) on vacuum
// Crystal phases theta are zero throughout.
enum class StandardKind { SingleSeeded, TwoCrystal, ThreeCrystal, FourCrystal };

Circuit standard_circuit(StandardKind kind, const std::vector<double>& params);

// photon_cap 40 for two-mode circuits, 24 per mode for wider ones; other
// policy fields at their defaults.
TruncationPolicy default_policy_for(const Circuit& circuit);

// Propagate the input through the elements in order.
SparseFockState run(const Circuit& circuit, const TruncationPolicy& policy);

// Amplitude of one detection pattern in the output state, with the
// accumulated truncation bound.
AmplitudeResult amplitude(const Circuit& circuit, const OccupationVector& pattern,
                          const TruncationPolicy& policy);

}  // namespace su11
