// Copyright 2026 The su11sim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Analytic pair-detection amplitudes for cascaded two-mode-squeezer
// interferometers with one, two, three, and four crystals, together with
// the phase and gain conditions that make them vanish. These serve as
// cross-checks for the Fock-space engine and as objectives for the
// zero-finder.
//
// Conventions: t_i = tanh r_i, s_i = sech r_i; phases enter as e^{i phi}.
// All amplitudes refer to the lowest-order coincidence pattern (one photon
// per detected mode).

#pragma once

#include <array>
#include <optional>

#include "su11/fock.hpp"

namespace su11 {

// Joint null phases for a three-crystal cascade. When the transmission
// constraint is violated no phase pair cancels the amplitude and feasible
// stays false.
struct ThreeCrystalNull {
  double phi1 = 0.0;
  double phi2 = 0.0;
  bool feasible = false;
};

// <1,1|S2(r)|1,1> = (1 - sinh^2 r)/cosh^3 r. Real; vanishes at
// r = arcsinh(1), i.e. gain g = cosh^2 r = 2.
complex amp_single_crystal_11(double r);

// Same amplitude parametrized by gain g = cosh^2 r: (2 - g)/g^{3/2}.
double amp_single_crystal_11_gain(double g);

// Two-crystal |1,1> amplitude: -(t2 + e^{i phi} t1) s1 s2 / (1 + e^{i phi} t1 t2)^2.
complex amp_two_crystal_11(double r1, double r2, double phi);

// Equal-strength form: -t (1 + e^{i phi}) s^2 / (1 + e^{i phi} t^2)^2.
// Identically zero at phi = pi.
complex amp_two_crystal_11_equal(double r, double phi);

// Partial sum of the interfering pair-emission series that resums to
// amp_two_crystal_11; term n is
// (-e^{i phi} t1 t2)^n (n - sinh^2 r2) / (cosh r1 cosh^3 r2 tanh r2).
complex two_crystal_series_partial(double r1, double r2, double phi, int n_terms);

// Curvature of the two-crystal coincidence probability at the phi = pi
// null: sinh^2(2r)/2.
double curvature_two_crystal(double r);

// Three-crystal |1,1> amplitude:
// -s1 s2 s3 [t3 (1 + e1 t1 t2) + e2 (t2 + e1 t1)] / (1 + e1 t1 t2 + e2 t2 t3 + e1 e2 t1 t3)^2
// with e_j = e^{i phi_j}.
complex amp_three_crystal_11(double r1, double r2, double r3, double phi1, double phi2);

// Both phase pairs solving amp_three_crystal_11 = 0 for given gains, or
// feasible = false when t3 falls outside
// [|t1 - t2|/(1 - t1 t2), (t1 + t2)/(1 + t1 t2)].
std::array<ThreeCrystalNull, 2> three_crystal_null(double r1, double r2, double r3);

// Equal-gain three-crystal null phase: theta(r) = 2 arccos(sech r / 2).
// Tends to 2 pi/3 as r -> 0 and drifts quadratically with slope 1/sqrt(3).
double three_crystal_equal_null_phase(double r);

// Four-crystal |1,1,1,1> amplitude with pump phase phi between the rows:
// s1 s2 s3 s4 / (2 (e t1 t2 t3 t4 - 1)^3) *
//   [ e (cosh 2r3 cosh 2r4 - 3) t1 t2 s3^2 s4^2 - 2 (1 + e^2 t1^2 t2^2) t3 t4 ]
complex amp_four_crystal_1111(double r1, double r2, double r3, double r4, double phi);

// All-equal specialization:
// -s^8 t^2 [3 + 4 cosh 2r + cosh 4r + 2 e (5 - cosh 4r) + 8 e^2 sinh^4 r]
//   / (8 (e t^4 - 1)^3)
complex amp_four_crystal_1111_equal(double r, double phi);

// Row-equal specialization (r2 = r1, r4 = r3):
// s1^2 s3^2 [e (cosh 4r3 - 5) s3^4 t1^2 - 4 (1 + e^2 t1^4) t3^2]
//   / (4 (e t1^2 t3^2 - 1)^3)
complex amp_four_crystal_1111_rows(double r1, double r3, double phi);

// Gain of the second row nulling the four-crystal amplitude at phi = pi
// with r2 = r1, r4 = r3: r3 = arsinh(tanh 2r1)/2. Saturates at
// arcsinh(1)/2 as r1 -> infinity.
double four_crystal_null_r3(double r1);

// First-row gain nulling the four-crystal amplitude at phi = 0 with
// r2 = r1: r1 = arsinh(sqrt(2 sinh 2r3 sinh 2r4 / (cosh 2(r3 - r4) - 3)))/2.
// Requires |r3 - r4| > arcsinh(1); otherwise no real solution exists and
// nullopt is returned.
std::optional<double> four_crystal_phi0_null_r1(double r3, double r4);

}  // namespace su11
