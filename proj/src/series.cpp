// Copyright 2026 The su11sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "su11/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "su11/engine.hpp"

namespace su11 {

namespace {

constexpr double kLogTiny = -700.0;

double log_binom(int a, int b) {
  return std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(a - b + 1.0);
}

void require_convergent(double r) {
  if (r < 0.0) throw std::invalid_argument("squeezing magnitudes must be >= 0");
  if (std::tanh(r) >= 1.0 - 1e-12) {
    throw ConvergenceError("squeezing magnitude too large: tanh r within 1e-12 of 1", 1.0);
  }
}

// Emission amplitudes of a single squeezed vacuum: w[k] = (-tanh r)^k / cosh r,
// optionally phased by e^{i phi k}. Cut at the cap or once below the term
// floor; the discarded l2 mass bound is added to tail.
std::vector<complex> pump_chain(double r, double phi, const TruncationPolicy& policy,
                                double& tail) {
  std::vector<complex> w;
  if (r == 0.0) {
    w.push_back(complex(1.0, 0.0));
    return w;
  }
  const double t = std::tanh(r);
  const double ch = std::cosh(r);
  double mag = 1.0 / ch;
  for (int k = 0;; ++k) {
    if (k > policy.photon_cap || mag < policy.term_floor) {
      // Everything downstream of each dropped |k,k> slice is unitary, so the
      // residual l2 error is at most the sum of dropped magnitudes.
      tail += mag / (1.0 - t);
      break;
    }
    const complex sign = (k % 2 != 0) ? complex(-1.0, 0.0) : complex(1.0, 0.0);
    w.push_back(sign * phase_power(phi, k) * mag);
    mag *= t;
  }
  return w;
}

// One squeezer acting on a diagonal state sum_j w[j] |j,j>:
// out[j-n+k] += w[j] t^n (-t)^k C(j,n) C(j-n+k,k) / ch^{2j-2n+1}.
// Returns amplitudes indexed by output occupation; dropped-mass bound added
// to tail.
std::vector<complex> diag_squeeze(const std::vector<complex>& w_in, double r,
                                  const TruncationPolicy& policy, double& tail) {
  const int cap = policy.photon_cap;
  if (r == 0.0) {
    std::vector<complex> o = w_in;
    if (static_cast<int>(o.size()) > cap + 1) o.resize(cap + 1);
    return o;
  }
  const double t = std::tanh(r);
  const double lt = std::log(t);
  const double lch = std::log(std::cosh(r));

  std::vector<complex> out(static_cast<std::size_t>(cap) + 1, complex(0.0, 0.0));
  for (int j = 0; j < static_cast<int>(w_in.size()) && j <= cap; ++j) {
    const complex a = w_in[static_cast<std::size_t>(j)];
    const double am = std::abs(a);
    if (am == 0.0) continue;
    double slice_tail = 0.0;
    bool slice_unbounded = false;
    for (int n = 0; n <= j; ++n) {
      const double log_b = n * lt + log_binom(j, n) - (2.0 * j - 2.0 * n + 1.0) * lch;
      double mag = (log_b > kLogTiny) ? std::exp(log_b) : 0.0;
      double log_mag = log_b;
      const int k_hi = cap - j + n;
      int k = 0;
      while (true) {
        const int jo = j - n + k;
        const double rho = t * (jo + 1) / (k + 1);
        if (k > k_hi) {
          if (rho < 1.0) {
            const double first = (mag > 0.0) ? mag : std::exp(std::max(log_mag, 2.0 * kLogTiny));
            slice_tail += first / (1.0 - rho);
          } else {
            slice_unbounded = true;
          }
          break;
        }
        if (mag > 0.0) {
          const double sign = (k % 2 != 0) ? -1.0 : 1.0;
          out[static_cast<std::size_t>(jo)] += a * (sign * mag);
        }
        const double mag_next = mag * rho;
        const double log_next = log_mag + std::log(rho);
        if (rho < 1.0 && ((mag > 0.0) ? (am * mag_next < policy.term_floor)
                                      : (log_next + std::log(std::max(am, 1e-300)) <
                                         std::log(policy.term_floor)))) {
          const double rho_next = t * (jo + 2) / (k + 2);
          slice_tail += ((mag > 0.0) ? mag_next : 0.0) / (1.0 - rho_next);
          break;
        }
        mag = mag_next;
        log_mag = log_next;
        if (mag == 0.0 && log_mag > kLogTiny) mag = std::exp(log_mag);
        ++k;
      }
    }
    // The image of a|j,j> under the squeezer has norm am, which caps any
    // slice's discarded mass.
    tail += am * (slice_unbounded ? 1.0 : std::min(slice_tail, 1.0));
  }
  return out;
}

SparseFockState diag_state(const std::vector<complex>& w, double tail) {
  SparseFockState s;
  s.mode_count = 2;
  for (int j = 0; j < static_cast<int>(w.size()); ++j) {
    const complex c = w[static_cast<std::size_t>(j)];
    if (c != complex(0.0, 0.0)) {
      OccupationVector occ = OccupationVector::zeros(2);
      occ.set(0, j);
      occ.set(1, j);
      s.terms.emplace_back(occ, c);
    }
  }
  s.tail_error = tail;
  return s;
}

struct PairTerm {
  int p_out;
  int q_out;
  complex amp;
};

// Emission list of one squeezer on |k1,k2>: amplitudes
// t^n (-t)^k sqrt(C(k1,n) C(k2,n) C(k1-n+k,k) C(k2-n+k,k)) / ch^{k1+k2-2n+1}
// for outputs (k1-n+k, k2-n+k). Unit-input relative tail bound added to tail.
std::vector<PairTerm> pair_emissions(int k1, int k2, double r,
                                     const TruncationPolicy& policy, double& tail) {
  std::vector<PairTerm> list;
  if (r == 0.0) {
    list.push_back({k1, k2, complex(1.0, 0.0)});
    return list;
  }
  const double t = std::tanh(r);
  const double lt = std::log(t);
  const double lch = std::log(std::cosh(r));
  const int cap = policy.photon_cap;
  const int n_max = std::min(k1, k2);
  double local = 0.0;
  bool unbounded = false;
  for (int n = 0; n <= n_max; ++n) {
    const double log_b = n * lt + 0.5 * (log_binom(k1, n) + log_binom(k2, n)) -
                         (k1 + k2 - 2.0 * n + 1.0) * lch;
    double mag = (log_b > kLogTiny) ? std::exp(log_b) : 0.0;
    double log_mag = log_b;
    const int k_hi = cap - std::max(k1, k2) + n;
    int k = 0;
    while (true) {
      const double rho =
          t * std::sqrt(static_cast<double>(k1 - n + k + 1) * (k2 - n + k + 1)) / (k + 1);
      if (k > k_hi) {
        if (rho < 1.0) {
          const double first = (mag > 0.0) ? mag : std::exp(std::max(log_mag, 2.0 * kLogTiny));
          local += first / (1.0 - rho);
        } else {
          unbounded = true;
        }
        break;
      }
      if (mag > 0.0) {
        const double sign = (k % 2 != 0) ? -1.0 : 1.0;
        list.push_back({k1 - n + k, k2 - n + k, complex(sign * mag, 0.0)});
      }
      const double mag_next = mag * rho;
      const double log_next = log_mag + std::log(rho);
      if (rho < 1.0 && ((mag > 0.0) ? (mag_next < policy.term_floor)
                                    : (log_next < std::log(policy.term_floor)))) {
        const double rho_next =
            t * std::sqrt(static_cast<double>(k1 - n + k + 2) * (k2 - n + k + 2)) / (k + 2);
        local += ((mag > 0.0) ? mag_next : 0.0) / (1.0 - rho_next);
        break;
      }
      mag = mag_next;
      log_mag = log_next;
      if (mag == 0.0 && log_mag > kLogTiny) mag = std::exp(log_mag);
      ++k;
    }
  }
  tail += unbounded ? 1.0 : std::min(local, 1.0);
  return list;
}

}  // namespace

SparseFockState two_crystal_series_state(double r1, double r2, double phi,
                                         const TruncationPolicy& policy) {
  policy.validate();
  require_convergent(r1);
  require_convergent(r2);
  double tail = 0.0;
  const std::vector<complex> w1 = pump_chain(r1, phi, policy, tail);
  const std::vector<complex> w2 = diag_squeeze(w1, r2, policy, tail);
  return diag_state(w2, tail);
}

SparseFockState three_crystal_series_state(double r1, double r2, double r3, double phi1,
                                           double phi2, const TruncationPolicy& policy) {
  policy.validate();
  require_convergent(r1);
  require_convergent(r2);
  require_convergent(r3);
  double tail = 0.0;
  const std::vector<complex> w1 = pump_chain(r1, phi1, policy, tail);
  std::vector<complex> w2 = diag_squeeze(w1, r2, policy, tail);
  for (int j = 0; j < static_cast<int>(w2.size()); ++j) {
    w2[static_cast<std::size_t>(j)] *= phase_power(phi2, j);
  }
  const std::vector<complex> w3 = diag_squeeze(w2, r3, policy, tail);
  return diag_state(w3, tail);
}

SparseFockState four_crystal_series_state(double r1, double r2, double r3, double r4,
                                          double phi, const TruncationPolicy& policy) {
  policy.validate();
  require_convergent(r1);
  require_convergent(r2);
  require_convergent(r3);
  require_convergent(r4);
  const int cap = policy.photon_cap;
  if (cap > 48) {
    throw std::invalid_argument(
        "photon_cap above 48 is not supported by the four-crystal reference series");
  }
  const std::size_t side = static_cast<std::size_t>(cap) + 1;
  std::vector<complex> dense(side * side * side * side, complex(0.0, 0.0));
  double tail = 0.0;

  const double t1 = std::tanh(r1), ch1 = std::cosh(r1);
  const double t2 = std::tanh(r2), ch2 = std::cosh(r2);

  double mag1 = 1.0 / ch1;
  for (int k1 = 0;; ++k1) {
    if (k1 > cap || mag1 < policy.term_floor) {
      tail += mag1 / (1.0 - t1);
      break;
    }
    const complex base1 =
        phase_power(phi, k1) * ((k1 % 2 != 0) ? -mag1 : mag1);
    double mag2 = 1.0 / ch2;
    for (int k2 = 0;; ++k2) {
      if (k2 > cap || mag1 * mag2 < policy.term_floor) {
        tail += mag1 * mag2 / (1.0 - t2);
        break;
      }
      const complex base = base1 * ((k2 % 2 != 0) ? -mag2 : mag2);
      const double base_mag = mag1 * mag2;
      double tail_a = 0.0, tail_b = 0.0;
      const std::vector<PairTerm> list_a = pair_emissions(k1, k2, r3, policy, tail_a);
      const std::vector<PairTerm> list_b = pair_emissions(k1, k2, r4, policy, tail_b);
      tail += base_mag * (tail_a + tail_b);
      for (const PairTerm& ea : list_a) {
        const std::size_t row =
            (static_cast<std::size_t>(ea.p_out) * side + static_cast<std::size_t>(ea.q_out)) *
            side;
        const complex ca = base * ea.amp;
        for (const PairTerm& eb : list_b) {
          dense[(row + static_cast<std::size_t>(eb.p_out)) * side +
                static_cast<std::size_t>(eb.q_out)] += ca * eb.amp;
        }
      }
      mag2 *= t2;
      if (mag2 == 0.0) {
        break;  // r2 = 0: the single k2 = 0 slice is exact
      }
    }
    mag1 *= t1;
    if (mag1 == 0.0) break;  // r1 = 0 likewise
  }

  SparseFockState s;
  s.mode_count = 4;
  for (std::size_t a = 0; a < side; ++a) {
    for (std::size_t b = 0; b < side; ++b) {
      for (std::size_t c = 0; c < side; ++c) {
        for (std::size_t d = 0; d < side; ++d) {
          const complex v = dense[((a * side + b) * side + c) * side + d];
          if (v != complex(0.0, 0.0)) {
            OccupationVector occ = OccupationVector::zeros(4);
            occ.set(0, static_cast<int>(a));
            occ.set(1, static_cast<int>(b));
            occ.set(2, static_cast<int>(c));
            occ.set(3, static_cast<int>(d));
            s.terms.emplace_back(occ, v);
          }
        }
      }
    }
  }
  s.tail_error = tail;
  return s;
}

}  // namespace su11
