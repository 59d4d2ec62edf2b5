#include "pathsum/weighted_state.hpp"

#include <cmath>
#include <vector>

namespace pathsum {

WeightKind weight_kind_for(MachineKind kind) {
  return kind == MachineKind::quantum ? WeightKind::amplitude : WeightKind::probability;
}

double WeightedState::total_probability() const {
  double total = 0.0;
  for (const auto& [c, w] : entries) {
    total += kind == WeightKind::probability ? w.real() : std::norm(w);
  }
  return total;
}

void prune_small_entries(std::map<Configuration, std::complex<double>>& entries) {
  for (auto it = entries.begin(); it != entries.end();) {
    if (std::abs(it->second) < k_prune_threshold) {
      it = entries.erase(it);
    } else {
      ++it;
    }
  }
}

namespace {

double matched_probability(const MachineDescription& m, const WeightedState& ws,
                           std::int64_t region_begin, std::span<const SymbolId> pattern) {
  double total = 0.0;
  for (const auto& [c, w] : ws.entries) {
    bool match = true;
    for (std::size_t j = 0; j < pattern.size(); ++j) {
      if (c.read(region_begin + static_cast<std::int64_t>(j), m.blank) != pattern[j]) {
        match = false;
        break;
      }
    }
    if (match) {
      total += ws.kind == WeightKind::probability ? w.real() : std::norm(w);
    }
  }
  return total;
}

}  // namespace

double output_probability(const MachineDescription& m, const WeightedState& ws,
                          std::int64_t region_begin, std::string_view pattern) {
  std::vector<SymbolId> ids = input_symbols(m, pattern);
  return matched_probability(m, ws, region_begin, ids);
}

double output_probability(const MachineDescription& m, const WeightedState& ws,
                          std::int64_t region_begin, std::span<const std::string> pattern) {
  std::vector<SymbolId> ids;
  ids.reserve(pattern.size());
  for (const auto& token : pattern) {
    auto id = m.symbol_id(token);
    if (!id) {
      throw Error(ErrorCode::unknown_symbol, "pattern symbol '" + token + "' not in alphabet");
    }
    ids.push_back(*id);
  }
  return matched_probability(m, ws, region_begin, ids);
}

}  // namespace pathsum
