#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "pathsum/configuration.hpp"
#include "pathsum/machine.hpp"

namespace pathsum {

enum class WeightKind : std::uint8_t { probability, amplitude };

WeightKind weight_kind_for(MachineKind kind);

// Finite-support mapping from configuration to weight. Probability kind
// holds real weights; amplitude kind holds complex amplitudes. Entries with
// magnitude below k_prune_threshold are dropped by the producing operations.
struct WeightedState {
  WeightKind kind = WeightKind::probability;
  std::map<Configuration, std::complex<double>> entries;

  // Total probability: sum of weights, or sum of squared amplitude moduli.
  double total_probability() const;
};

void prune_small_entries(std::map<Configuration, std::complex<double>>& entries);

// Probability that the tape cells [region_begin, region_begin + len) read
// `pattern`, where len is the pattern length. Probability kind sums weights;
// amplitude kind sums squared moduli of the per-configuration amplitudes.
double output_probability(const MachineDescription& m, const WeightedState& ws,
                          std::int64_t region_begin, std::string_view pattern);
double output_probability(const MachineDescription& m, const WeightedState& ws,
                          std::int64_t region_begin, std::span<const std::string> pattern);

}  // namespace pathsum
