// Copyright 2026 The su11sim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Grid scans of amplitude magnitudes and certified refinement of
// interference nulls. Minimization runs on |A|^2, which is smooth where |A|
// has a kink at a zero crossing.

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace su11 {

struct SweepAxis {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;

  double value_at(int i) const { return lo + (hi - lo) * i / (count - 1); }
};

// One or two axes; rows iterate the last axis fastest.
struct SweepGrid {
  std::vector<SweepAxis> axes;

  void validate() const;
};

struct ScanRow {
  std::vector<double> params;
  double abs_amp = 0.0;
  double prob = 0.0;
};

// Objective conventions: the callable returns |A| at the given parameters.
using Objective1 = std::function<double(double)>;
using ObjectiveN = std::function<double(const std::vector<double>&)>;

// Evaluate over the grid in lexicographic order. Objective failures are
// rethrown with the grid coordinates appended to the message.
std::vector<ScanRow> scan(const ObjectiveN& objective, const SweepGrid& grid);

struct NullRefinement {
  double param = 0.0;
  double residual = 0.0;  // |A| at param
  bool is_null = false;   // residual < 1e-9
};

// Locate the minimum of |A|^2 on [lo, hi]: coarse scan, golden-section, then
// a quadratic-fit vertex polish. If no parameter reaches |A| < 1e-9 the
// achieved minimum is reported with is_null = false.
NullRefinement refine_null(const Objective1& objective, double lo, double hi);

// Central second difference (f(x+h) - 2 f(x) + f(x-h)) / h^2.
double curvature_at(const Objective1& objective, double param0, double step);

}  // namespace su11
