#pragma once

#include <span>
#include <string>
#include <vector>

#include "pathsum/configuration.hpp"
#include "pathsum/machine.hpp"

namespace pathsum {

struct StochasticSum {
  StateId state = 0;
  SymbolId symbol = 0;
  double sum = 0.0;
  bool ok = false;
};

struct ColumnNorm {
  Configuration source;
  double norm2 = 0.0;
  bool ok = false;
};

struct ColumnOverlap {
  Configuration a;
  Configuration b;
  double magnitude = 0.0;
};

struct ValidationReport {
  bool passed = true;
  std::vector<StochasticSum> sums;      // probabilistic: one per (state, symbol)
  std::vector<ColumnNorm> norms;        // quantum: one per active reachable configuration
  std::vector<ColumnOverlap> overlaps;  // quantum: failing column pairs only
  std::vector<std::string> notes;
};

// Checks that every (state, symbol) with outgoing rules has weights summing
// to 1 within k_norm_epsilon. Throws WrongKind on non-probabilistic machines.
ValidationReport validate_stochastic(const MachineDescription& m);

// Numerical unitarity check on the subspace reachable within `depth` steps
// of the probe inputs: the image of every reachable active configuration
// must have unit norm, and images of distinct active configurations must be
// orthogonal, within k_norm_epsilon. Halted and stuck configurations are
// absorbing and contribute no columns. Probes with symbols outside the
// alphabet are skipped with a note.
ValidationReport validate_norm_preserving(const MachineDescription& m,
                                          std::span<const std::string> probe_inputs,
                                          std::uint32_t depth);

}  // namespace pathsum
