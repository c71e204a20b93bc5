// Copyright 2026 The su11sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "su11/oracle.hpp"

#include <Eigen/Sparse>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace su11 {

namespace {

using SparseCd = Eigen::SparseMatrix<complex>;

// Generator in sparse form: zeta* ab lowers both modes, -zeta a'b' raises
// both. Exactly anti-Hermitian on the full lattice; the raising part is
// clipped at the box edge.
SparseCd sparse_generator(int n_max, double r, double theta) {
  const TruncatedBasis basis(n_max);
  const complex zeta = r * phase_unit(theta);
  std::vector<Eigen::Triplet<complex>> trip;
  trip.reserve(static_cast<std::size_t>(basis.size()) * 2);
  for (int p = 0; p <= n_max; ++p) {
    for (int q = 0; q <= n_max; ++q) {
      if (p >= 1 && q >= 1) {
        trip.emplace_back(basis.index(p - 1, q - 1), basis.index(p, q),
                          std::conj(zeta) * std::sqrt(static_cast<double>(p) * q));
      }
      if (p + 1 <= n_max && q + 1 <= n_max) {
        trip.emplace_back(basis.index(p + 1, q + 1), basis.index(p, q),
                          -zeta * std::sqrt(static_cast<double>(p + 1) * (q + 1)));
      }
    }
  }
  SparseCd g(basis.size(), basis.size());
  g.setFromTriplets(trip.begin(), trip.end());
  return g;
}

Eigen::VectorXcd expm_apply_sparse(const SparseCd& g, const Eigen::VectorXcd& v) {
  if (g.rows() != g.cols() || g.cols() != v.size()) {
    throw std::invalid_argument("generator/vector dimensions do not match");
  }
  // 1-norm of the sparse matrix: max column absolute sum.
  double norm1 = 0.0;
  for (int c = 0; c < g.outerSize(); ++c) {
    double col = 0.0;
    for (SparseCd::InnerIterator it(g, c); it; ++it) col += std::abs(it.value());
    norm1 = std::max(norm1, col);
  }
  int segments = 1;
  if (norm1 > 0.5) {
    segments = 1 << static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  }
  const double inv = 1.0 / segments;

  Eigen::VectorXcd w = v;
  for (int s = 0; s < segments; ++s) {
    const double ref = std::max(w.norm(), 1e-300);
    Eigen::VectorXcd term = w;
    Eigen::VectorXcd acc = w;
    bool converged = false;
    double achieved = 0.0;
    for (int j = 1; j <= 64; ++j) {
      term = (g * term) * (inv / j);
      acc += term;
      achieved = term.norm();
      if (achieved < 1e-18 * ref) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      char msg[128];
      std::snprintf(msg, sizeof(msg),
                    "matrix exponential series did not converge; residual %.3e", achieved);
      throw std::runtime_error(msg);
    }
    w = acc;
  }
  return w;
}

}  // namespace

Eigen::MatrixXcd build_generator(int n_max, double r, double theta) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (r < 0.0) throw std::invalid_argument("r must be >= 0");
  return Eigen::MatrixXcd(sparse_generator(n_max, r, theta));
}

Eigen::VectorXcd expm_apply(const Eigen::MatrixXcd& g, const Eigen::VectorXcd& v) {
  return expm_apply_sparse(g.sparseView(), v);
}

std::vector<PairCoefficient> oracle_squeeze(int p, int q, double r, double theta, int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (p < 0 || q < 0) throw std::invalid_argument("photon numbers must be non-negative");
  if (2 * p > n_max || 2 * q > n_max) {
    throw std::invalid_argument("need p, q <= n_max/2 for headroom inside the box");
  }
  const TruncatedBasis basis(n_max);
  const SparseCd g = sparse_generator(n_max, r, theta);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(basis.size());
  v(basis.index(p, q)) = complex(1.0, 0.0);
  const Eigen::VectorXcd w = expm_apply_sparse(g, v);

  std::vector<PairCoefficient> out;
  for (int i = 0; i < basis.size(); ++i) {
    if (w(i) != complex(0.0, 0.0)) {
      const auto [po, qo] = basis.unindex(i);
      out.push_back({po, qo, w(i)});
    }
  }
  return out;
}

}  // namespace su11
