// Copyright 2026 The su11sim Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "su11/engine.hpp"
#include "su11/oracle.hpp"

namespace su11 {
namespace {

std::map<std::pair<int, int>, complex> as_map(const std::vector<PairCoefficient>& col) {
  std::map<std::pair<int, int>, complex> m;
  for (const PairCoefficient& pc : col) m[{pc.p_out, pc.q_out}] = pc.amp;
  return m;
}

TEST_SUITE_BEGIN("oracle");

TEST_CASE("truncated basis indexing is a bijection") {
  const TruncatedBasis basis(5);
  CHECK(basis.size() == 36);
  for (int p = 0; p <= 5; ++p) {
    for (int q = 0; q <= 5; ++q) {
      const auto [pp, qq] = basis.unindex(basis.index(p, q));
      CHECK(pp == p);
      CHECK(qq == q);
    }
  }
  CHECK_THROWS_AS(basis.index(6, 0), std::invalid_argument);
  CHECK_THROWS_AS(basis.unindex(36), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedBasis(0), std::invalid_argument);
}

TEST_CASE("zero squeezing builds the zero generator") {
  const Eigen::MatrixXcd g = build_generator(8, 0.0, 0.0);
  CHECK(g.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("generator creates one pair from vacuum with weight minus zeta") {
  const double r = 0.7, theta = 0.3;
  const Eigen::MatrixXcd g = build_generator(6, r, theta);
  const TruncatedBasis basis(6);
  const complex zeta = std::polar(r, theta);
  CHECK(g(basis.index(1, 1), basis.index(0, 0)) == -zeta);
  CHECK(g(basis.index(0, 0), basis.index(1, 1)) == std::conj(zeta));
}

TEST_CASE("generator is anti-Hermitian") {
  const Eigen::MatrixXcd g = build_generator(12, 0.9, 1.4);
  CHECK((g + g.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("matrix exponential of the zero generator is the identity") {
  const Eigen::MatrixXcd g = build_generator(4, 0.0, 0.0);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(25);
  v(7) = complex(0.3, -0.4);
  const Eigen::VectorXcd w = expm_apply(g, v);
  CHECK((w - v).norm() == 0.0);
}

TEST_CASE("matrix exponential rejects mismatched dimensions") {
  const Eigen::MatrixXcd g = build_generator(4, 0.2, 0.0);
  const Eigen::VectorXcd v = Eigen::VectorXcd::Zero(7);
  CHECK_THROWS_AS(expm_apply(g, v), std::invalid_argument);
}

TEST_CASE("vacuum column reproduces the squeezed-vacuum law") {
  const int n_max = 30;
  const double r = 0.4;
  const Eigen::MatrixXcd g = build_generator(n_max, r, 0.0);
  const TruncatedBasis basis(n_max);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(basis.size());
  v(basis.index(0, 0)) = complex(1.0, 0.0);
  const Eigen::VectorXcd w = expm_apply(g, v);
  const double t = std::tanh(r);
  const double ch = std::cosh(r);
  for (int m = 0; m <= 12; ++m) {
    const complex want = std::pow(complex(-t, 0.0), m) / ch;
    CHECK(std::abs(w(basis.index(m, m)) - want) < 1e-9);
  }
}

TEST_CASE("exponential of the anti-Hermitian generator preserves norm") {
  const int n_max = 30;
  const Eigen::MatrixXcd g = build_generator(n_max, 0.8, 0.6);
  const TruncatedBasis basis(n_max);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(basis.size());
  v(basis.index(2, 3)) = complex(1.0, 0.0);
  CHECK(std::abs(expm_apply(g, v).norm() - 1.0) < 1e-10);
}

TEST_CASE("seeded pair column vanishes at gain two") {
  const int n_max = 30;
  const Eigen::MatrixXcd g = build_generator(n_max, std::asinh(1.0), 0.0);
  const TruncatedBasis basis(n_max);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(basis.size());
  v(basis.index(1, 1)) = complex(1.0, 0.0);
  CHECK(std::abs(expm_apply(g, v)(basis.index(1, 1))) < 1e-8);
}

TEST_CASE("oracle_squeeze at zero squeezing is a delta") {
  const auto col = oracle_squeeze(2, 1, 0.0, 0.0, 10);
  REQUIRE(col.size() == 1);
  CHECK(col[0].p_out == 2);
  CHECK(col[0].q_out == 1);
  CHECK(col[0].amp == complex(1.0, 0.0));
}

TEST_CASE("oracle_squeeze rejects inputs without box headroom") {
  CHECK_THROWS_AS(oracle_squeeze(6, 0, 0.5, 0.0, 10), std::invalid_argument);
}

TEST_CASE("oracle column matches the engine kernel") {
  TruncationPolicy policy;
  policy.photon_cap = 60;
  policy.k_max = 1024;
  policy.term_floor = 1e-18;
  policy.prune_floor = 1e-18;
  const PairExpansion ex = squeeze_pair_coefficients(3, 2, 1.0, 0.5, policy);
  const auto engine = as_map(ex.coeffs);
  const auto oracle = as_map(oracle_squeeze(3, 2, 1.0, 0.5, 40));
  double dev = 0.0;
  for (const auto& [key, amp] : oracle) {
    if (key.first > 10 || key.second > 10) continue;
    auto it = engine.find(key);
    REQUIRE(it != engine.end());
    dev = std::max(dev, std::abs(amp - it->second));
  }
  CHECK(dev <= 1e-8);
}

TEST_CASE("truncation-edge contamination decays as the box doubles") {
  // Measured profile (inputs (1,1), theta 0): at n_max 20 the interior <= 2
  // coefficients carry 3e-7 of edge contamination at r = 1.2 and 1e-9 at
  // r = 1.0; at n_max 40 both drop below 1e-12.
  auto interior_dev = [](double r, int n_max) {
    TruncationPolicy policy;
    policy.photon_cap = 80;
    policy.k_max = 1024;
    policy.term_floor = 1e-18;
    policy.prune_floor = 1e-18;
    const auto engine = as_map(squeeze_pair_coefficients(1, 1, r, 0.0, policy).coeffs);
    double dev = 0.0;
    for (const auto& [key, amp] : as_map(oracle_squeeze(1, 1, r, 0.0, n_max))) {
      if (key.first > 2 || key.second > 2) continue;
      dev = std::max(dev, std::abs(amp - engine.at(key)));
    }
    return dev;
  };
  for (double r : {1.0, 1.2}) {
    const double coarse = interior_dev(r, 20);
    const double fine = interior_dev(r, 40);
    CHECK(fine < 1e-10);
    CHECK(fine < 1e-3 * coarse);
  }

  // At moderate gain the doubling change itself is already sub-1e-10.
  const auto small = as_map(oracle_squeeze(1, 1, 0.6, 0.0, 20));
  const auto big = as_map(oracle_squeeze(1, 1, 0.6, 0.0, 40));
  double change = 0.0;
  for (const auto& [key, amp] : small) {
    if (key.first > 6 || key.second > 6) continue;
    change = std::max(change, std::abs(amp - big.at(key)));
  }
  CHECK(change < 1e-10);
}

TEST_SUITE_END();

}  // namespace
}  // namespace su11
