#include "pathsum/configuration.hpp"

#include <algorithm>
#include <string>

namespace pathsum {

namespace {

auto cell_lower_bound(std::vector<std::pair<std::int64_t, SymbolId>>& tape,
                      std::int64_t cell) {
  return std::lower_bound(tape.begin(), tape.end(), cell,
                          [](const auto& e, std::int64_t c) { return e.first < c; });
}

}  // namespace

SymbolId Configuration::read(std::int64_t cell, SymbolId blank) const {
  auto it = std::lower_bound(tape.begin(), tape.end(), cell,
                             [](const auto& e, std::int64_t c) { return e.first < c; });
  if (it != tape.end() && it->first == cell) return it->second;
  return blank;
}

void Configuration::write(std::int64_t cell, SymbolId symbol, SymbolId blank) {
  auto it = cell_lower_bound(tape, cell);
  bool present = it != tape.end() && it->first == cell;
  if (symbol == blank) {
    if (present) tape.erase(it);
  } else if (present) {
    it->second = symbol;
  } else {
    tape.insert(it, {cell, symbol});
  }
}

std::vector<SymbolId> input_symbols(const MachineDescription& m, std::string_view input) {
  std::vector<SymbolId> ids;
  ids.reserve(input.size());
  for (char c : input) {
    auto id = m.symbol_id(std::string_view(&c, 1));
    if (!id) {
      throw Error(ErrorCode::unknown_symbol,
                  std::string("input symbol '") + c + "' not in alphabet");
    }
    ids.push_back(*id);
  }
  return ids;
}

Configuration initial_configuration(const MachineDescription& m, std::string_view input) {
  Configuration c;
  c.state = m.start;
  c.head = 0;
  std::int64_t cell = 0;
  for (SymbolId id : input_symbols(m, input)) c.write(cell++, id, m.blank);
  return c;
}

Configuration initial_configuration(const MachineDescription& m,
                                    std::span<const std::string> input) {
  Configuration c;
  c.state = m.start;
  c.head = 0;
  std::int64_t cell = 0;
  for (const auto& token : input) {
    auto id = m.symbol_id(token);
    if (!id) {
      throw Error(ErrorCode::unknown_symbol, "input symbol '" + token + "' not in alphabet");
    }
    c.write(cell++, *id, m.blank);
  }
  return c;
}

Configuration apply_rule(const MachineDescription& m, const Configuration& c,
                         const TransitionRule& r) {
  Configuration next = c;
  next.write(c.head, r.write_symbol, m.blank);
  switch (r.dir) {
    case Direction::left: --next.head; break;
    case Direction::right: ++next.head; break;
    case Direction::nothing: break;
  }
  next.state = r.to_state;
  return next;
}

}  // namespace pathsum
