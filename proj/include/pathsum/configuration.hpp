#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "pathsum/machine.hpp"

namespace pathsum {

// Complete machine snapshot: tape contents, head position, control state.
// The tape stores only non-blank cells, sorted by cell index, so structural
// equality coincides with semantic equality and ordering is total.
struct Configuration {
  StateId state = 0;
  std::int64_t head = 0;
  std::vector<std::pair<std::int64_t, SymbolId>> tape;

  SymbolId read(std::int64_t cell, SymbolId blank) const;
  // Keeps the canonical form: writing the blank erases the cell entry.
  void write(std::int64_t cell, SymbolId symbol, SymbolId blank);

  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

// Maps a CLI-style input string (one character per symbol) to symbol ids.
std::vector<SymbolId> input_symbols(const MachineDescription& m, std::string_view input);

// Tape holds the input starting at cell 0, head at 0, state = start.
Configuration initial_configuration(const MachineDescription& m, std::string_view input);
Configuration initial_configuration(const MachineDescription& m,
                                    std::span<const std::string> input);

Configuration apply_rule(const MachineDescription& m, const Configuration& c,
                         const TransitionRule& r);

}  // namespace pathsum
