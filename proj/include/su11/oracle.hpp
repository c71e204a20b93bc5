// Copyright 2026 The su11sim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Brute-force ground truth for the two-mode squeezer: build the generator
// G = zeta* ab - zeta a'b' as a matrix on the truncated basis
// { |p,q> : p,q <= n_max } and apply exp(G) by scaling and squaring with a
// truncated Taylor series. Validates the closed-form kernel with no shared
// code path.
//
// The truncation edge contaminates coefficients near p or q ~ n_max;
// comparisons should stay well inside the box (see tests for the measured
// contamination profile).

#pragma once

#include <Eigen/Dense>

#include "su11/engine.hpp"
#include "su11/fock.hpp"

namespace su11 {

// Flat indexing of the (n_max+1)^2 pair basis.
struct TruncatedBasis {
  int n_max = 0;

  explicit TruncatedBasis(int n) : n_max(n) {
    if (n < 1) throw std::invalid_argument("n_max must be >= 1");
  }
  int size() const { return (n_max + 1) * (n_max + 1); }
  int index(int p, int q) const {
    if (p < 0 || q < 0 || p > n_max || q > n_max) {
      throw std::invalid_argument("basis index out of range");
    }
    return p * (n_max + 1) + q;
  }
  std::pair<int, int> unindex(int idx) const {
    if (idx < 0 || idx >= size()) throw std::invalid_argument("flat index out of range");
    return {idx / (n_max + 1), idx % (n_max + 1)};
  }
};

// Dense anti-Hermitian generator matrix; element rules a|n> = sqrt(n)|n-1>,
// a'|n> = sqrt(n+1)|n+1>.
Eigen::MatrixXcd build_generator(int n_max, double r, double theta);

// exp(G) v by scaling and squaring; series truncated at term norm
// < 1e-18 * segment norm. Throws on non-convergence with the achieved
// residual in the message.
Eigen::VectorXcd expm_apply(const Eigen::MatrixXcd& g, const Eigen::VectorXcd& v);

// Full coefficient column of S2(r e^{i theta}) |p,q> computed through the
// matrix exponential, as an output-ordered list. Requires p, q <= n_max/2 so
// the spread stays inside the box.
std::vector<PairCoefficient> oracle_squeeze(int p, int q, double r, double theta, int n_max);

}  // namespace su11
