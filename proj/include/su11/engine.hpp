// Copyright 2026 The su11sim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Exact normal-ordered action of the two-mode squeezing operator
// S2(zeta) = exp(zeta* a b - zeta a'b'), zeta = r e^{i theta}, on sparse
// photon-number states, plus phase shifters and the squeezed vacuum.
//
// The Fock-basis kernel: for input |p,q>,
//   <p-n+k, q-n+k | S2 | p,q> = sum over n of
//     (e^{-i theta} tanh r)^n (-e^{i theta} tanh r)^k / (cosh r)^{p+q-2n+1}
//     * sqrt( C(p,n) C(q,n) C(p-n+k,k) C(q-n+k,k) )
// with n in [0, min(p,q)] and k >= 0. The k-series is infinite; it is cut
// adaptively with a certified geometric tail bound (consecutive-term ratios
// decrease monotonically toward tanh r).

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "su11/fock.hpp"

namespace su11 {

struct TwoModeSqueezer {
  int mode_a = 0;
  int mode_b = 1;
  double r = 0.0;
  double theta = 0.0;
};

struct PhaseShifter {
  int mode = 0;
  double phi = 0.0;
};

struct PairCoefficient {
  int p_out = 0;
  int q_out = 0;
  complex amp;
};

// Coefficient list for one input pair, ordered by ascending output occupation,
// with an upper bound on the l2 mass of everything truncated away.
struct PairExpansion {
  std::vector<PairCoefficient> coeffs;
  double tail_bound = 0.0;
};

// Raised when the k-series cannot be brought under the truncation policy
// (r too close to the tanh r -> 1 singularity, or k_max exhausted).
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double tail)
      : std::runtime_error(what), tail_bound(tail) {}
  double tail_bound;
};

// e^{i angle}; exact axis values when angle is a double-exact multiple of
// pi/2 (so phi = pi yields exactly -1 and nulls cancel cleanly).
complex phase_unit(double angle);

// e^{i phi n} for integer n; exact on the axes, unit-magnitude otherwise.
complex phase_power(double phi, long n);

PairExpansion squeeze_pair_coefficients(int p, int q, double r, double theta,
                                        const TruncationPolicy& policy);

SparseFockState apply_squeezer(const SparseFockState& state, const TwoModeSqueezer& sq,
                               const TruncationPolicy& policy);

SparseFockState apply_phase(const SparseFockState& state, const PhaseShifter& ph);

// Two-mode squeezed vacuum: coefficients (-e^{i theta} tanh r)^m / cosh r.
SparseFockState squeezed_vacuum(double r, double theta, const TruncationPolicy& policy);

}  // namespace su11
