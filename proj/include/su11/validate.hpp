// Copyright 2026 The su11sim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Self-check suites wiring the three independent evaluation paths against
// each other: engine vs closed forms, engine vs matrix-exponential oracle,
// engine vs direct nested-sum series. Each check reports its worst observed
// deviation against the requested tolerance.

#pragma once

#include <string>
#include <vector>

namespace su11 {

struct CheckResult {
  std::string name;
  double max_dev = 0.0;
  double tol = 0.0;
  bool pass = false;
};

std::vector<CheckResult> validate_closedform(double tol);
std::vector<CheckResult> validate_oracle(double tol);
std::vector<CheckResult> validate_series(double tol);

// suite: "closedform" | "oracle" | "series" | "all"
std::vector<CheckResult> validate_suite(const std::string& suite, double tol);

}  // namespace su11
