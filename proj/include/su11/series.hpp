// Copyright 2026 The su11sim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Independent evaluation path: the output states of the two-, three-, and
// four-crystal cascades written as explicit nested photon-number sums and
// summed directly, rather than by sequential operator application. Used to
// cross-check the engine; the engine remains the production path.
//
// Crystal phases are zero throughout (only pump phases between crystals
// appear), matching the closed-form amplitude catalog.

#pragma once

#include "su11/fock.hpp"

namespace su11 {

// S(r2) Phi(phi) S(r1) |0,0> summed over the emission numbers of both
// crystals. Diagonal in the two modes.
SparseFockState two_crystal_series_state(double r1, double r2, double phi,
                                         const TruncationPolicy& policy);

// S(r3) Phi(phi2) S(r2) Phi(phi1) S(r1) |0,0>.
SparseFockState three_crystal_series_state(double r1, double r2, double r3, double phi1,
                                           double phi2, const TruncationPolicy& policy);

// S_cd(r4) S_ab(r3) Phi_a(phi) S_bd(r2) S_ac(r1) |0,0,0,0> on modes
// (a,b,c,d) = (0,1,2,3). Summed densely over a 4-mode box of side
// photon_cap + 1; photon_cap is limited to 48 here to bound memory.
SparseFockState four_crystal_series_state(double r1, double r2, double r3, double r4,
                                          double phi, const TruncationPolicy& policy);

}  // namespace su11
