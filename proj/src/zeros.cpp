// Copyright 2026 The su11sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "su11/zeros.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "su11/engine.hpp"

namespace su11 {

namespace {

std::string format_point(const SweepGrid& grid, const std::vector<double>& params) {
  std::string s = " at grid point (";
  for (std::size_t i = 0; i < params.size(); ++i) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s%s=%.17g", i ? ", " : "", grid.axes[i].name.c_str(),
                  params[i]);
    s += buf;
  }
  s += ")";
  return s;
}

}  // namespace

void SweepGrid::validate() const {
  if (axes.empty() || axes.size() > 2) {
    throw std::invalid_argument("sweep grid needs one or two axes");
  }
  for (const SweepAxis& ax : axes) {
    if (ax.count < 2) throw std::invalid_argument("axis sample count must be >= 2");
    if (!std::isfinite(ax.lo) || !std::isfinite(ax.hi) || !(ax.lo < ax.hi)) {
      throw std::invalid_argument("axis bounds must be finite with lo < hi");
    }
    if (ax.name.empty()) throw std::invalid_argument("axis name must be non-empty");
  }
}

std::vector<ScanRow> scan(const ObjectiveN& objective, const SweepGrid& grid) {
  grid.validate();
  std::vector<ScanRow> rows;
  const bool two_d = grid.axes.size() == 2;
  const int n0 = grid.axes[0].count;
  const int n1 = two_d ? grid.axes[1].count : 1;
  rows.reserve(static_cast<std::size_t>(n0) * n1);
  for (int i = 0; i < n0; ++i) {
    for (int j = 0; j < n1; ++j) {
      ScanRow row;
      row.params.push_back(grid.axes[0].value_at(i));
      if (two_d) row.params.push_back(grid.axes[1].value_at(j));
      try {
        row.abs_amp = objective(row.params);
      } catch (const ConvergenceError& e) {
        throw ConvergenceError(e.what() + format_point(grid, row.params), e.tail_bound);
      } catch (const std::exception& e) {
        throw std::runtime_error(e.what() + format_point(grid, row.params));
      }
      row.prob = row.abs_amp * row.abs_amp;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

NullRefinement refine_null(const Objective1& objective, double lo, double hi) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("refine_null needs a finite interval with lo < hi");
  }
  const auto f = [&](double x) {
    const double a = objective(x);
    return a * a;
  };

  // Coarse scan to isolate the basin.
  const int kCoarse = 400;
  double best_x = lo, best_f = f(lo);
  for (int i = 1; i <= kCoarse; ++i) {
    const double x = lo + (hi - lo) * i / kCoarse;
    const double v = f(x);
    if (v < best_f) {
      best_f = v;
      best_x = x;
    }
  }
  const double h = (hi - lo) / kCoarse;
  double a = std::max(lo, best_x - h);
  double b = std::min(hi, best_x + h);

  // Golden-section contraction on [a, b].
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 200 && (b - a) > 1e-13 * std::max(1.0, std::abs(a) + std::abs(b));
       ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = f(x2);
    }
  }
  double xm = 0.5 * (a + b);
  double fm = f(xm);
  if (f1 < fm) {
    xm = x1;
    fm = f1;
  }
  if (f2 < fm) {
    xm = x2;
    fm = f2;
  }

  // Quadratic vertex through (a, xm, b); keep it only if it improves.
  const double fa = f(a), fb = f(b);
  const double denom = (xm - a) * (fm - fb) - (xm - b) * (fm - fa);
  if (denom != 0.0) {
    const double num = (xm - a) * (xm - a) * (fm - fb) - (xm - b) * (xm - b) * (fm - fa);
    const double xv = xm - 0.5 * num / denom;
    if (xv > lo && xv < hi && std::isfinite(xv)) {
      const double fv = f(xv);
      if (fv < fm) {
        xm = xv;
        fm = fv;
      }
    }
  }

  NullRefinement out;
  out.param = xm;
  out.residual = objective(xm);
  out.is_null = out.residual < 1e-9;
  return out;
}

double curvature_at(const Objective1& objective, double param0, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("step must be > 0");
  const double fp = objective(param0 + step);
  const double f0 = objective(param0);
  const double fmn = objective(param0 - step);
  return (fp - 2.0 * f0 + fmn) / (step * step);
}

}  // namespace su11
