// Copyright 2026 The su11sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "su11/fock.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace su11 {

OccupationVector::OccupationVector(std::initializer_list<int> ns) {
  if (ns.size() > static_cast<std::size_t>(max_modes))
    throw std::invalid_argument("occupation vector exceeds max mode count");
  for (int v : ns) {
    if (v < 0) throw std::invalid_argument("negative occupation");
    counts[mode_count++] = static_cast<std::uint16_t>(v);
  }
}

OccupationVector OccupationVector::zeros(int modes) {
  if (modes < 1 || modes > max_modes)
    throw std::invalid_argument("mode count out of range");
  OccupationVector v;
  v.mode_count = static_cast<std::uint8_t>(modes);
  return v;
}

void OccupationVector::set(int mode, int value) {
  if (mode < 0 || mode >= mode_count)
    throw std::invalid_argument("mode index out of range");
  if (value < 0) throw std::invalid_argument("negative occupation");
  counts[static_cast<std::size_t>(mode)] = static_cast<std::uint16_t>(value);
}

int OccupationVector::total() const {
  int t = 0;
  for (int m = 0; m < mode_count; ++m) t += counts[static_cast<std::size_t>(m)];
  return t;
}

std::string OccupationVector::str() const {
  std::string s;
  for (int m = 0; m < mode_count; ++m) {
    if (m) s += ',';
    s += std::to_string(counts[static_cast<std::size_t>(m)]);
  }
  return s;
}

std::size_t OccupationHash::operator()(const OccupationVector& v) const {
  // counts fit in two 64-bit words; mix with splitmix64.
  std::uint64_t w0 = 0, w1 = 0;
  std::memcpy(&w0, v.counts.data(), 8);
  std::memcpy(&w1, v.counts.data() + 4, 8);
  std::uint64_t h = w0 + 0x9e3779b97f4a7c15ull * (w1 + v.mode_count);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebull;
  h ^= h >> 31;
  return static_cast<std::size_t>(h);
}

SparseFockState SparseFockState::vacuum(int modes) {
  return basis(OccupationVector::zeros(modes));
}

SparseFockState SparseFockState::basis(const OccupationVector& pattern, complex amp) {
  SparseFockState s;
  s.mode_count = pattern.size();
  s.terms.emplace_back(pattern, amp);
  return s;
}

void TruncationPolicy::validate() const {
  if (!(term_floor > 0.0)) throw std::invalid_argument("term_floor must be > 0");
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  if (photon_cap < 1) throw std::invalid_argument("photon_cap must be >= 1");
  if (!(prune_floor > 0.0)) throw std::invalid_argument("prune_floor must be > 0");
}

double norm(const SparseFockState& state) {
  double s = 0.0;
  for (const auto& [key, amp] : state.terms) s += std::norm(amp);
  return std::sqrt(s);
}

complex amplitude_of(const SparseFockState& state, const OccupationVector& pattern) {
  if (pattern.size() != state.mode_count)
    throw std::invalid_argument("pattern mode count does not match state");
  auto it = std::lower_bound(
      state.terms.begin(), state.terms.end(), pattern,
      [](const auto& term, const OccupationVector& p) { return term.first < p; });
  if (it != state.terms.end() && it->first == pattern) return it->second;
  return complex{0.0, 0.0};
}

SparseFockState prune(const SparseFockState& state, double floor) {
  if (floor < 0.0) throw std::invalid_argument("prune floor must be >= 0");
  SparseFockState out;
  out.mode_count = state.mode_count;
  out.tail_error = state.tail_error;
  out.terms.reserve(state.terms.size());
  double dropped_sq = 0.0;
  for (const auto& term : state.terms) {
    if (std::abs(term.second) < floor)
      dropped_sq += std::norm(term.second);
    else
      out.terms.push_back(term);
  }
  out.tail_error += std::sqrt(dropped_sq);
  return out;
}

}  // namespace su11
