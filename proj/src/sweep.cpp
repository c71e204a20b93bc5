// Copyright 2026 The su11sim Authors
// SPDX-License-Identifier: Apache-2.0

#include "su11/sweep.hpp"

#include <cstdio>
#include <stdexcept>

namespace su11 {

namespace {

void append_g17(std::string& s, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  s += buf;
}

}  // namespace

std::string sweep_csv(const CircuitConfig& config, const std::vector<SweepAxis>& axes) {
  if (axes.empty() || axes.size() > 2) {
    throw std::invalid_argument("sweep needs one or two axes");
  }
  SweepGrid grid{axes};
  grid.validate();

  std::string csv;
  for (const SweepAxis& ax : axes) {
    csv += ax.name;
    csv += ',';
  }
  csv += "re,im,prob,tail_bound\n";

  const int n0 = axes[0].count;
  const int n1 = (axes.size() == 2) ? axes[1].count : 1;
  for (int i = 0; i < n0; ++i) {
    for (int j = 0; j < n1; ++j) {
      std::map<std::string, double> overrides;
      overrides[axes[0].name] = axes[0].value_at(i);
      if (axes.size() == 2) overrides[axes[1].name] = axes[1].value_at(j);
      const BuiltCircuit built = build_circuit(config, overrides);
      const AmplitudeResult res = amplitude(built.circuit, built.pattern, built.policy);

      append_g17(csv, axes[0].value_at(i));
      csv += ',';
      if (axes.size() == 2) {
        append_g17(csv, axes[1].value_at(j));
        csv += ',';
      }
      append_g17(csv, res.amp.real());
      csv += ',';
      append_g17(csv, res.amp.imag());
      csv += ',';
      append_g17(csv, std::norm(res.amp));
      csv += ',';
      append_g17(csv, res.tail_bound);
      csv += '\n';
    }
  }
  return csv;
}

}  // namespace su11
