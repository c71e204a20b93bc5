// Copyright 2026 The su11sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "su11/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace su11 {

namespace {

// Magnitudes below exp(kLogTiny) are treated as flushed to zero; branches in
// that regime are iterated in log space so they can resurface.
constexpr double kLogTiny = -700.0;

// The alternating sums over (n, k) cancel heavily when min(p, q) and r are
// both sizable: individual terms can exceed the result by many orders of
// magnitude. Extended precision in the inner accumulation buys ~3.5 decimal
// digits of headroom before that cancellation hits the noise floor.
using ldcomplex = std::complex<long double>;

bool is_quarter_turn(double angle, int& quadrant) {
  const double q = std::nearbyint(angle / M_PI_2);
  if (angle != q * M_PI_2) return false;
  quadrant = static_cast<int>(std::fmod(q, 4.0));
  if (quadrant < 0) quadrant += 4;
  return true;
}

ldcomplex phase_unit_ld(double angle) {
  int quadrant = 0;
  if (is_quarter_turn(angle, quadrant)) {
    static const ldcomplex axis[4] = {{1.0L, 0.0L}, {0.0L, 1.0L}, {-1.0L, 0.0L},
                                      {0.0L, -1.0L}};
    return axis[quadrant];
  }
  return std::polar(1.0L, static_cast<long double>(angle));
}

}  // namespace

complex phase_unit(double angle) {
  int quadrant = 0;
  if (is_quarter_turn(angle, quadrant)) {
    static const complex axis[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    return axis[quadrant];
  }
  return std::polar(1.0, angle);
}

complex phase_power(double phi, long n) {
  int quadrant = 0;
  if (is_quarter_turn(phi, quadrant)) {
    static const complex axis[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    long idx = (static_cast<long>(quadrant) * n) % 4;
    if (idx < 0) idx += 4;
    return axis[idx];
  }
  return std::polar(1.0, phi * static_cast<double>(n));
}

PairExpansion squeeze_pair_coefficients(int p, int q, double r, double theta,
                                        const TruncationPolicy& policy) {
  policy.validate();
  if (p < 0 || q < 0) throw std::invalid_argument("photon numbers must be non-negative");
  if (r < 0.0) throw std::invalid_argument("squeezing magnitude must be non-negative");

  PairExpansion out;
  if (r == 0.0) {
    out.coeffs.push_back({p, q, complex(1.0, 0.0)});
    return out;
  }

  const double t = std::tanh(r);
  if (t >= 1.0 - 1e-12) {
    throw ConvergenceError("squeezing magnitude too large: tanh r within 1e-12 of 1", 1.0);
  }
  const long double log_t = std::log(std::tanh(static_cast<long double>(r)));
  const long double log_ch = std::log(std::cosh(static_cast<long double>(r)));
  const double log_floor = std::log(policy.term_floor);

  const int n_max = std::min(p, q);
  // Output occupations are (p + j, q + j) with j = k - n; the photon cap
  // bounds j from above, the input pair bounds it from below.
  const int j_cap = policy.photon_cap - std::max(p, q);
  if (j_cap < -n_max) {
    // Every output of this pair exceeds the cap; the whole unit-norm image
    // is discarded.
    out.tail_bound = 1.0;
    return out;
  }

  std::vector<ldcomplex> acc(static_cast<std::size_t>(j_cap + n_max) + 1,
                             ldcomplex(0.0L, 0.0L));

  const ldcomplex phase_a = phase_unit_ld(-theta);  // multiplies t^n
  const ldcomplex phase_b = -phase_unit_ld(theta);  // multiplies t^k
  ldcomplex phase_n(1.0L, 0.0L);

  // log |B(n)| where B(n) = t^n sqrt(C(p,n) C(q,n)) / (cosh r)^{p+q-2n+1}
  // is the k = 0 term magnitude of branch n.
  long double log_b = -static_cast<long double>(p + q + 1) * log_ch;

  double tail = 0.0;
  bool tail_unbounded = false;

  for (int n = 0; n <= n_max; ++n) {
    const int k_hi = n + j_cap;  // last k whose output fits under the cap
    const double pn = static_cast<double>(p - n);
    const double qn = static_cast<double>(q - n);

    long double mag = (log_b > kLogTiny) ? std::exp(log_b) : 0.0L;
    long double log_mag = log_b;
    ldcomplex phase_k = phase_n;

    int k = 0;
    while (true) {
      if (k > k_hi) {
        // Cap cut: the term at the current k is the first one dropped.
        const double rho = t * std::sqrt((pn + k + 1) * (qn + k + 1)) / (k + 1);
        if (mag > 0.0L || log_mag > 2.0 * kLogTiny) {
          const double first =
              static_cast<double>((mag > 0.0L) ? mag : std::exp(log_mag));
          if (rho < 1.0) {
            tail += first / (1.0 - rho);
          } else {
            tail_unbounded = true;
          }
        }
        break;
      }
      if (k > policy.k_max) {
        const double rho = t * std::sqrt((pn + k + 1) * (qn + k + 1)) / (k + 1);
        double best = tail + ((rho < 1.0 && mag > 0.0L)
                                  ? static_cast<double>(mag) / (1.0 - rho)
                                  : 1.0);
        throw ConvergenceError("k-series exceeded policy.k_max before reaching term_floor",
                               std::min(best, 1.0));
      }
      if (mag > 0.0L) {
        acc[static_cast<std::size_t>(k - n + n_max)] += mag * phase_k;
      }
      // Step k -> k+1. Ratios decrease monotonically toward t, which makes
      // the geometric tail below certified.
      const double rho = t * std::sqrt((pn + k + 1) * (qn + k + 1)) / (k + 1);
      const long double mag_next = (mag > 0.0L) ? mag * rho : 0.0L;
      const long double log_next = log_mag + std::log(static_cast<long double>(rho));
      const bool past_peak = rho < 1.0;
      if (past_peak && ((mag > 0.0L) ? (mag_next < policy.term_floor)
                                     : (log_next < log_floor))) {
        // Floor cut: bound the dropped remainder by the geometric series
        // starting at the first dropped term.
        const double rho_next = t * std::sqrt((pn + k + 2) * (qn + k + 2)) / (k + 2);
        const double first = static_cast<double>(
            (mag > 0.0L) ? mag_next
                         : ((log_next > kLogTiny) ? std::exp(log_next) : 0.0L));
        tail += first / (1.0 - rho_next);
        break;
      }
      if (mag > 0.0L) {
        mag = mag_next;
      } else {
        log_mag = log_next;
        if (log_mag > kLogTiny) {
          mag = std::exp(log_mag);
        }
      }
      phase_k *= phase_b;
      ++k;
    }

    if (n == n_max) break;
    log_b += log_t + 2.0L * log_ch +
             0.5L * std::log(static_cast<long double>(pn * qn)) -
             std::log(static_cast<long double>(n + 1));
    phase_n *= phase_a;
  }

  out.tail_bound = tail_unbounded ? 1.0 : std::min(tail, 1.0);
  out.coeffs.reserve(acc.size());
  for (int j = -n_max; j <= j_cap; ++j) {
    const ldcomplex c = acc[static_cast<std::size_t>(j + n_max)];
    if (c != ldcomplex(0.0L, 0.0L)) {
      out.coeffs.push_back({p + j, q + j,
                            complex(static_cast<double>(c.real()),
                                    static_cast<double>(c.imag()))});
    }
  }
  return out;
}

SparseFockState apply_squeezer(const SparseFockState& state, const TwoModeSqueezer& sq,
                               const TruncationPolicy& policy) {
  policy.validate();
  if (sq.mode_a == sq.mode_b || sq.mode_a < 0 || sq.mode_b < 0 ||
      sq.mode_a >= state.mode_count || sq.mode_b >= state.mode_count) {
    throw std::invalid_argument("squeezer modes must be distinct and within the state");
  }

  std::unordered_map<std::uint32_t, PairExpansion> cache;
  std::unordered_map<OccupationVector, ldcomplex, OccupationHash> merged;
  merged.reserve(state.terms.size() * 8);

  double tail = state.tail_error;
  for (const auto& [occ, amp] : state.terms) {
    const int p = occ[sq.mode_a];
    const int q = occ[sq.mode_b];
    const std::uint32_t key =
        (static_cast<std::uint32_t>(p) << 16) | static_cast<std::uint32_t>(q);
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, squeeze_pair_coefficients(p, q, sq.r, sq.theta, policy)).first;
    }
    const PairExpansion& expansion = it->second;
    tail += std::abs(amp) * expansion.tail_bound;
    const ldcomplex amp_ld(amp.real(), amp.imag());
    for (const PairCoefficient& pc : expansion.coeffs) {
      OccupationVector dest = occ;
      dest.set(sq.mode_a, pc.p_out);
      dest.set(sq.mode_b, pc.q_out);
      merged[dest] += amp_ld * ldcomplex(pc.amp.real(), pc.amp.imag());
    }
  }

  SparseFockState result;
  result.mode_count = state.mode_count;
  result.terms.reserve(merged.size());
  for (const auto& [occ, amp] : merged) {
    result.terms.emplace_back(occ, complex(static_cast<double>(amp.real()),
                                           static_cast<double>(amp.imag())));
  }
  std::sort(result.terms.begin(), result.terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  result.tail_error = tail;
  return prune(result, policy.prune_floor);
}

SparseFockState apply_phase(const SparseFockState& state, const PhaseShifter& ph) {
  if (ph.mode < 0 || ph.mode >= state.mode_count) {
    throw std::invalid_argument("phase shifter mode out of range");
  }
  SparseFockState result = state;
  for (auto& [occ, amp] : result.terms) {
    amp *= phase_power(ph.phi, occ[ph.mode]);
  }
  return result;
}

SparseFockState squeezed_vacuum(double r, double theta, const TruncationPolicy& policy) {
  const PairExpansion expansion = squeeze_pair_coefficients(0, 0, r, theta, policy);
  SparseFockState result;
  result.mode_count = 2;
  result.terms.reserve(expansion.coeffs.size());
  for (const PairCoefficient& pc : expansion.coeffs) {
    OccupationVector occ = OccupationVector::zeros(2);
    occ.set(0, pc.p_out);
    occ.set(1, pc.q_out);
    result.terms.emplace_back(occ, pc.amp);
  }
  result.tail_error = expansion.tail_bound;
  return result;
}

}  // namespace su11
