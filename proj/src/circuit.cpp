// Copyright 2026 The su11sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "su11/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace su11 {

namespace {

double log_binom(int a, int b) {
  return std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(a - b + 1.0);
}

// Exact <P,Q| S2(r e^{i theta}) |p,q>: the double sum collapses to one index
// because the output fixes k - n = P - p (and requires Q - q to match).
complex projected_pair_coefficient(int big_p, int big_q, int p, int q, double r,
                                  double theta) {
  if (big_p - p != big_q - q) return complex(0.0, 0.0);
  if (r == 0.0) return (big_p == p) ? complex(1.0, 0.0) : complex(0.0, 0.0);
  const long double lt = std::log(std::tanh(static_cast<long double>(r)));
  const long double lch = std::log(std::cosh(static_cast<long double>(r)));
  const int d = big_p - p;  // k = n + d
  // Alternating in n; accumulate in extended precision to soften the
  // cancellation before rounding back to double.
  std::complex<long double> acc(0.0L, 0.0L);
  const int n_lo = std::max(0, -d);
  const int n_hi = std::min(p, q);
  for (int n = n_lo; n <= n_hi; ++n) {
    const int k = n + d;
    const long double lm =
        (n + k) * lt - (p + q - 2.0L * n + 1.0L) * lch +
        0.5L * (log_binom(p, n) + log_binom(q, n) + log_binom(big_p, k) +
                log_binom(big_q, k));
    if (lm < -11350.0L) continue;
    const complex phd = phase_power(-theta, n) * phase_power(theta, k);
    std::complex<long double> ph(phd.real(), phd.imag());
    if (k % 2 != 0) ph = -ph;
    acc += std::exp(lm) * ph;
  }
  return complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
}

}  // namespace

void Circuit::validate() const {
  if (mode_count < 1 || mode_count > max_modes) {
    throw std::invalid_argument("mode_count out of range");
  }
  if (input.size() != mode_count) {
    throw std::invalid_argument("input pattern length does not match mode_count");
  }
  for (const CircuitElement& el : elements) {
    if (const auto* sq = std::get_if<TwoModeSqueezer>(&el)) {
      if (sq->mode_a < 0 || sq->mode_b < 0 || sq->mode_a >= mode_count ||
          sq->mode_b >= mode_count || sq->mode_a == sq->mode_b) {
        throw std::invalid_argument("squeezer modes invalid for this circuit");
      }
      if (sq->r < 0.0) throw std::invalid_argument("squeezer r must be >= 0");
    } else {
      const auto& ph = std::get<PhaseShifter>(el);
      if (ph.mode < 0 || ph.mode >= mode_count) {
        throw std::invalid_argument("phase shifter mode invalid for this circuit");
      }
    }
  }
}

Circuit standard_circuit(StandardKind kind, const std::vector<double>& params) {
  Circuit c;
  switch (kind) {
    case StandardKind::SingleSeeded: {
      if (params.size() != 1) throw std::invalid_argument("single_seeded takes (r)");
      c.mode_count = 2;
      c.input = OccupationVector{1, 1};
      c.elements = {TwoModeSqueezer{0, 1, params[0], 0.0}};
      break;
    }
    case StandardKind::TwoCrystal: {
      if (params.size() != 3) throw std::invalid_argument("two_crystal takes (r1, r2, phi)");
      c.mode_count = 2;
      c.input = OccupationVector::zeros(2);
      c.elements = {TwoModeSqueezer{0, 1, params[0], 0.0}, PhaseShifter{0, params[2]},
                    TwoModeSqueezer{0, 1, params[1], 0.0}};
      break;
    }
    case StandardKind::ThreeCrystal: {
      if (params.size() != 5) {
        throw std::invalid_argument("three_crystal takes (r1, r2, r3, phi1, phi2)");
      }
      c.mode_count = 2;
      c.input = OccupationVector::zeros(2);
      c.elements = {TwoModeSqueezer{0, 1, params[0], 0.0}, PhaseShifter{0, params[3]},
                    TwoModeSqueezer{0, 1, params[1], 0.0}, PhaseShifter{0, params[4]},
                    TwoModeSqueezer{0, 1, params[2], 0.0}};
      break;
    }
    case StandardKind::FourCrystal: {
      if (params.size() != 5) {
        throw std::invalid_argument("four_crystal takes (r1, r2, r3, r4, phi)");
      }
      c.mode_count = 4;
      c.input = OccupationVector::zeros(4);
      c.elements = {TwoModeSqueezer{0, 2, params[0], 0.0}, TwoModeSqueezer{1, 3, params[1], 0.0},
                    PhaseShifter{0, params[4]}, TwoModeSqueezer{0, 1, params[2], 0.0},
                    TwoModeSqueezer{2, 3, params[3], 0.0}};
      break;
    }
  }
  c.validate();
  return c;
}

TruncationPolicy default_policy_for(const Circuit& circuit) {
  TruncationPolicy policy;
  policy.photon_cap = (circuit.mode_count >= 4) ? 24 : 40;
  return policy;
}

SparseFockState run(const Circuit& circuit, const TruncationPolicy& policy) {
  circuit.validate();
  policy.validate();
  SparseFockState state = SparseFockState::basis(circuit.input);
  for (const CircuitElement& el : circuit.elements) {
    if (const auto* sq = std::get_if<TwoModeSqueezer>(&el)) {
      state = apply_squeezer(state, *sq, policy);
    } else {
      state = apply_phase(state, std::get<PhaseShifter>(el));
    }
  }
  return state;
}

AmplitudeResult amplitude(const Circuit& circuit, const OccupationVector& pattern,
                          const TruncationPolicy& policy) {
  circuit.validate();
  if (pattern.size() != circuit.mode_count) {
    throw std::invalid_argument("pattern length does not match mode_count");
  }
  if (!circuit.elements.empty()) {
    if (const auto* last = std::get_if<TwoModeSqueezer>(&circuit.elements.back())) {
      Circuit head = circuit;
      head.elements.pop_back();
      const SparseFockState state = run(head, policy);
      const int big_p = pattern[last->mode_a];
      const int big_q = pattern[last->mode_b];
      std::complex<long double> acc(0.0L, 0.0L);
      for (const auto& [occ, amp] : state.terms) {
        bool spectators_match = true;
        for (int m = 0; m < state.mode_count; ++m) {
          if (m != last->mode_a && m != last->mode_b && occ[m] != pattern[m]) {
            spectators_match = false;
            break;
          }
        }
        if (!spectators_match) continue;
        const complex term = amp * projected_pair_coefficient(
                                       big_p, big_q, occ[last->mode_a],
                                       occ[last->mode_b], last->r, last->theta);
        acc += std::complex<long double>(term.real(), term.imag());
      }
      // Projection is a contraction, so the upstream bound carries through.
      return AmplitudeResult{complex(static_cast<double>(acc.real()),
                                     static_cast<double>(acc.imag())),
                             state.tail_error};
    }
  }
  const SparseFockState state = run(circuit, policy);
  return AmplitudeResult{amplitude_of(state, pattern), state.tail_error};
}

}  // namespace su11
