// Copyright 2026 The su11sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "su11/closed_forms.hpp"

#include <cmath>
#include <stdexcept>

#include "su11/engine.hpp"

namespace su11 {

namespace {

// 1/cosh with the argument capped before cosh overflows; sech underflows to
// zero smoothly beyond the cap.
double sech(double r) {
  return 1.0 / std::cosh(std::min(std::abs(r), 350.0));
}

void require_nonneg(double r, const char* name) {
  if (!(r >= 0.0)) throw std::invalid_argument(std::string(name) + " must be >= 0");
}

void require_pos(double r, const char* name) {
  if (!(r > 0.0)) throw std::invalid_argument(std::string(name) + " must be > 0");
}

}  // namespace

complex amp_single_crystal_11(double r) {
  require_nonneg(r, "r");
  const double sh = std::sinh(r);
  const double s = sech(r);
  return complex((1.0 - sh * sh) * s * s * s, 0.0);
}

double amp_single_crystal_11_gain(double g) {
  if (!(g >= 1.0)) throw std::invalid_argument("gain must be >= 1");
  return (2.0 - g) / (g * std::sqrt(g));
}

complex amp_two_crystal_11(double r1, double r2, double phi) {
  require_nonneg(r1, "r1");
  require_nonneg(r2, "r2");
  const double t1 = std::tanh(r1), t2 = std::tanh(r2);
  const double s1 = sech(r1), s2 = sech(r2);
  const complex e = phase_unit(phi);
  const complex den = 1.0 + e * (t1 * t2);
  return -(t2 + e * t1) * (s1 * s2) / (den * den);
}

complex amp_two_crystal_11_equal(double r, double phi) {
  require_nonneg(r, "r");
  const double t = std::tanh(r), s = sech(r);
  const complex e = phase_unit(phi);
  const complex den = 1.0 + e * (t * t);
  return -t * (1.0 + e) * (s * s) / (den * den);
}

complex two_crystal_series_partial(double r1, double r2, double phi, int n_terms) {
  require_nonneg(r1, "r1");
  require_pos(r2, "r2");
  if (n_terms < 0) throw std::invalid_argument("n_terms must be >= 0");
  const double sh2 = std::sinh(r2);
  const double scale = sech(r1) * sech(r2) * sech(r2) * sech(r2) / std::tanh(r2);
  const complex base = -phase_unit(phi) * (std::tanh(r1) * std::tanh(r2));
  complex pw(1.0, 0.0);
  complex acc(0.0, 0.0);
  for (int n = 0; n < n_terms; ++n) {
    acc += pw * ((n - sh2 * sh2) * scale);
    pw *= base;
  }
  return acc;
}

double curvature_two_crystal(double r) {
  require_nonneg(r, "r");
  const double sh = std::sinh(2.0 * r);
  return 0.5 * sh * sh;
}

complex amp_three_crystal_11(double r1, double r2, double r3, double phi1, double phi2) {
  require_nonneg(r1, "r1");
  require_nonneg(r2, "r2");
  require_nonneg(r3, "r3");
  const double t1 = std::tanh(r1), t2 = std::tanh(r2), t3 = std::tanh(r3);
  const double s1 = sech(r1), s2 = sech(r2), s3 = sech(r3);
  const complex e1 = phase_unit(phi1), e2 = phase_unit(phi2);
  const complex num = t3 * (1.0 + e1 * (t1 * t2)) + e2 * (t2 + e1 * t1);
  const complex den = 1.0 + e1 * (t1 * t2) + e2 * (t2 * t3) + e1 * e2 * (t1 * t3);
  return -(s1 * s2 * s3) * num / (den * den);
}

std::array<ThreeCrystalNull, 2> three_crystal_null(double r1, double r2, double r3) {
  require_pos(r1, "r1");
  require_pos(r2, "r2");
  require_pos(r3, "r3");
  const double t1 = std::tanh(r1), t2 = std::tanh(r2), t3 = std::tanh(r3);
  std::array<ThreeCrystalNull, 2> out{};
  double c = (t3 * t3 * (1.0 + t1 * t1 * t2 * t2) - t1 * t1 - t2 * t2) /
             (2.0 * t1 * t2 * (1.0 - t3 * t3));
  if (std::abs(c) > 1.0 + 1e-12) return out;
  c = std::max(-1.0, std::min(1.0, c));
  const double base = std::acos(c);
  const double two_pi = 2.0 * M_PI;
  const double roots[2] = {base, two_pi - base};
  for (int i = 0; i < 2; ++i) {
    const double phi1 = roots[i];
    const complex e1 = phase_unit(phi1);
    const complex ratio = -t3 * (1.0 + (t1 * t2) * e1) / (t1 * e1 + t2);
    double phi2 = std::arg(ratio);
    if (phi2 < 0.0) phi2 += two_pi;
    if (phi2 >= two_pi) phi2 -= two_pi;
    out[i] = ThreeCrystalNull{phi1, phi2, true};
  }
  return out;
}

double three_crystal_equal_null_phase(double r) {
  require_nonneg(r, "r");
  return 2.0 * std::acos(0.5 * sech(r));
}

complex amp_four_crystal_1111(double r1, double r2, double r3, double r4, double phi) {
  require_nonneg(r1, "r1");
  require_nonneg(r2, "r2");
  require_nonneg(r3, "r3");
  require_nonneg(r4, "r4");
  const double t1 = std::tanh(r1), t2 = std::tanh(r2), t3 = std::tanh(r3),
               t4 = std::tanh(r4);
  const double s1 = sech(r1), s2 = sech(r2), s3 = sech(r3), s4 = sech(r4);
  const complex e = phase_unit(phi);
  const complex d = e * (t1 * t2 * t3 * t4) - 1.0;
  const complex pref = (s1 * s2 * s3 * s4) / (2.0 * d * d * d);
  const complex term1 =
      e * ((std::cosh(2.0 * r3) * std::cosh(2.0 * r4) - 3.0) * t1 * t2 * (s3 * s3) *
           (s4 * s4));
  const complex term2 = (1.0 + e * e * (t1 * t1 * t2 * t2)) * (t3 * t4);
  return pref * (term1 - 2.0 * term2);
}

complex amp_four_crystal_1111_equal(double r, double phi) {
  require_nonneg(r, "r");
  const double t = std::tanh(r), s = sech(r), sh = std::sinh(r);
  const complex e = phase_unit(phi);
  const complex d = e * (t * t * t * t) - 1.0;
  const complex bracket = 3.0 + 4.0 * std::cosh(2.0 * r) + std::cosh(4.0 * r) +
                          2.0 * e * (5.0 - std::cosh(4.0 * r)) +
                          8.0 * e * e * (sh * sh * sh * sh);
  const double s8 = s * s * s * s * s * s * s * s;
  return -(s8 * t * t) / (8.0 * d * d * d) * bracket;
}

complex amp_four_crystal_1111_rows(double r1, double r3, double phi) {
  require_nonneg(r1, "r1");
  require_nonneg(r3, "r3");
  const double t1 = std::tanh(r1), t3 = std::tanh(r3);
  const double s1 = sech(r1), s3 = sech(r3);
  const complex e = phase_unit(phi);
  const complex d = e * (t1 * t1 * t3 * t3) - 1.0;
  const complex bracket =
      e * ((std::cosh(4.0 * r3) - 5.0) * (s3 * s3 * s3 * s3) * (t1 * t1)) -
      4.0 * (1.0 + e * e * (t1 * t1 * t1 * t1)) * (t3 * t3);
  return (s1 * s1 * s3 * s3) / (4.0 * d * d * d) * bracket;
}

double four_crystal_null_r3(double r1) {
  require_pos(r1, "r1");
  return 0.5 * std::asinh(std::tanh(2.0 * r1));
}

std::optional<double> four_crystal_phi0_null_r1(double r3, double r4) {
  require_pos(r3, "r3");
  require_pos(r4, "r4");
  const double d = std::cosh(2.0 * (r3 - r4)) - 3.0;
  if (d <= 0.0) return std::nullopt;
  const double arg = 2.0 * std::sinh(2.0 * r3) * std::sinh(2.0 * r4) / d;
  return 0.5 * std::asinh(std::sqrt(arg));
}

}  // namespace su11
