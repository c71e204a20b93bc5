// Copyright 2026 The su11sim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Parameter sweeps of a configured circuit's pattern amplitude, emitted as
// CSV. Output is deterministic: fixed grid order (last axis fastest) and
// fixed 17-significant-digit formatting, so repeated runs are byte-identical
// and suitable for golden-file comparison.

#pragma once

#include <string>
#include <vector>

#include "su11/config.hpp"
#include "su11/zeros.hpp"

namespace su11 {

// Header: the axis names, then re, im, prob, tail_bound. One row per grid
// point; each point rebuilds the circuit with the axis values overriding the
// config's parameters.
std::string sweep_csv(const CircuitConfig& config, const std::vector<SweepAxis>& axes);

}  // namespace su11
