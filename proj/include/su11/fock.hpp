// Copyright 2026 The su11sim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Sparse multimode photon-number states: occupation vectors, amplitude maps,
// truncation policy, and the norm / projection / pruning primitives.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace su11 {

using complex = std::complex<double>;

inline constexpr int max_modes = 8;

// Photon count per mode. Value type: comparable, hashable, padding always zero.
struct OccupationVector {
  std::array<std::uint16_t, max_modes> counts{};
  std::uint8_t mode_count = 0;

  OccupationVector() = default;
  OccupationVector(std::initializer_list<int> ns);
  static OccupationVector zeros(int modes);

  int size() const { return mode_count; }
  int operator[](int mode) const { return counts[static_cast<std::size_t>(mode)]; }
  void set(int mode, int value);
  int total() const;
  std::string str() const;  // "p,q,..."

  friend bool operator==(const OccupationVector& a, const OccupationVector& b) {
    return a.mode_count == b.mode_count && a.counts == b.counts;
  }
  friend bool operator<(const OccupationVector& a, const OccupationVector& b) {
    if (a.mode_count != b.mode_count) return a.mode_count < b.mode_count;
    return a.counts < b.counts;  // lexicographic in declaration order
  }
};

struct OccupationHash {
  std::size_t operator()(const OccupationVector& v) const;
};

// Sparse amplitude map over occupation vectors. terms stays sorted by key so
// iteration (and therefore every accumulation downstream) is deterministic.
// tail_error is a scalar upper bound on the l2 norm of everything discarded
// by truncation or pruning since construction.
struct SparseFockState {
  int mode_count = 0;
  std::vector<std::pair<OccupationVector, complex>> terms;
  double tail_error = 0.0;

  static SparseFockState vacuum(int modes);
  static SparseFockState basis(const OccupationVector& pattern, complex amp = 1.0);
  std::size_t size() const { return terms.size(); }
};

// Cutoffs bounding the infinite photon-number sums.
struct TruncationPolicy {
  double term_floor = 1e-14;  // per-term magnitude cutoff in the k-series
  int k_max = 64;             // hard cap on the pair-creation series length
  int photon_cap = 40;        // per-mode occupation cap
  double prune_floor = 1e-14;

  void validate() const;  // throws std::invalid_argument on nonpositive fields
};

double norm(const SparseFockState& state);

// Stored amplitude of the pattern, exact zero if absent.
// Throws std::invalid_argument if pattern length != state.mode_count.
complex amplitude_of(const SparseFockState& state, const OccupationVector& pattern);

// Removes terms with |amplitude| < floor; tail_error grows by the l2 mass of
// the removed terms.
SparseFockState prune(const SparseFockState& state, double floor);

}  // namespace su11
