#include "pathsum/machine.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <tuple>

namespace pathsum {

namespace {

auto quintuple_key(const TransitionRule& r) {
  return std::make_tuple(r.from_state, r.read_symbol, r.to_state, r.write_symbol,
                         static_cast<int>(r.dir));
}

std::optional<std::uint16_t> find_sorted(const std::vector<std::string>& names,
                                         std::string_view name) {
  auto it = std::lower_bound(names.begin(), names.end(), name);
  if (it == names.end() || *it != name) return std::nullopt;
  return static_cast<std::uint16_t>(it - names.begin());
}

void check_names(const std::vector<std::string>& names, const char* what) {
  for (const auto& n : names) {
    if (!is_valid_token_name(n)) {
      throw Error(ErrorCode::invalid_name,
                  std::string("invalid ") + what + " name '" + n + "'");
    }
  }
  for (std::size_t i = 1; i < names.size(); ++i) {
    if (names[i] == names[i - 1]) {
      throw Error(ErrorCode::duplicate_name,
                  std::string("duplicate ") + what + " '" + names[i] + "'");
    }
  }
}

void check_weight(MachineKind kind, const std::complex<double>& w, std::size_t index) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw Error(ErrorCode::invalid_weight, "weight is not finite", index);
  }
  switch (kind) {
    case MachineKind::deterministic:
      if (w != std::complex<double>(1.0, 0.0)) {
        throw Error(ErrorCode::invalid_weight,
                    "deterministic rules carry implicit weight 1", index);
      }
      break;
    case MachineKind::probabilistic:
      if (w.imag() != 0.0 || w.real() < 0.0 || w.real() > 1.0) {
        throw Error(ErrorCode::invalid_weight, "weight out of range [0,1]", index);
      }
      break;
    case MachineKind::quantum:
      break;
  }
}

}  // namespace

std::string_view kind_name(MachineKind kind) {
  switch (kind) {
    case MachineKind::deterministic: return "deterministic";
    case MachineKind::probabilistic: return "probabilistic";
    case MachineKind::quantum: return "quantum";
  }
  return "?";
}

std::optional<MachineKind> kind_from_name(std::string_view name) {
  if (name == "deterministic") return MachineKind::deterministic;
  if (name == "probabilistic") return MachineKind::probabilistic;
  if (name == "quantum") return MachineKind::quantum;
  return std::nullopt;
}

char direction_letter(Direction d) {
  switch (d) {
    case Direction::left: return 'L';
    case Direction::right: return 'R';
    case Direction::nothing: return 'N';
  }
  return '?';
}

std::optional<Direction> direction_from_letter(char c) {
  switch (c) {
    case 'L': return Direction::left;
    case 'R': return Direction::right;
    case 'N': return Direction::nothing;
    default: return std::nullopt;
  }
}

bool is_valid_token_name(std::string_view name) {
  if (name.empty() || name == "->") return false;
  for (unsigned char c : name) {
    if (c <= 0x20 || c >= 0x7f || c == '#') return false;
  }
  return true;
}

std::optional<SymbolId> MachineDescription::symbol_id(std::string_view name) const {
  return find_sorted(symbols, name);
}

std::optional<StateId> MachineDescription::state_id(std::string_view name) const {
  return find_sorted(states, name);
}

std::span<const TransitionRule> MachineDescription::rules_from(StateId q, SymbolId s) const {
  auto key = std::make_tuple(q, s);
  auto lo = std::partition_point(rules.begin(), rules.end(), [&](const TransitionRule& r) {
    return std::make_tuple(r.from_state, r.read_symbol) < key;
  });
  auto hi = std::partition_point(lo, rules.end(), [&](const TransitionRule& r) {
    return std::make_tuple(r.from_state, r.read_symbol) == key;
  });
  return {lo, hi};
}

MachineDescription build_machine(MachineKind kind,
                                 std::vector<std::string> alphabet,
                                 const std::string& blank,
                                 std::vector<std::string> states,
                                 const std::string& start,
                                 const std::string& halt,
                                 std::span<const RuleInput> rules) {
  std::sort(alphabet.begin(), alphabet.end());
  std::sort(states.begin(), states.end());
  check_names(alphabet, "symbol");
  check_names(states, "state");

  MachineDescription m;
  m.kind = kind;
  m.symbols = std::move(alphabet);
  m.states = std::move(states);

  auto symbol_or_throw = [&](const std::string& name, std::size_t index) {
    auto id = m.symbol_id(name);
    if (!id) {
      throw Error(ErrorCode::unknown_symbol, "unknown symbol '" + name + "'",
                  index == static_cast<std::size_t>(-1) ? std::nullopt
                                                        : std::optional<std::size_t>(index));
    }
    return *id;
  };
  auto state_or_throw = [&](const std::string& name, std::size_t index) {
    auto id = m.state_id(name);
    if (!id) {
      throw Error(ErrorCode::unknown_state, "unknown state '" + name + "'",
                  index == static_cast<std::size_t>(-1) ? std::nullopt
                                                        : std::optional<std::size_t>(index));
    }
    return *id;
  };

  m.blank = symbol_or_throw(blank, static_cast<std::size_t>(-1));
  m.start = state_or_throw(start, static_cast<std::size_t>(-1));
  m.halt = state_or_throw(halt, static_cast<std::size_t>(-1));

  std::vector<std::pair<TransitionRule, std::size_t>> table;
  table.reserve(rules.size());
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const RuleInput& in = rules[i];
    TransitionRule r;
    r.from_state = state_or_throw(in.from_state, i);
    r.read_symbol = symbol_or_throw(in.read_symbol, i);
    r.to_state = state_or_throw(in.to_state, i);
    r.write_symbol = symbol_or_throw(in.write_symbol, i);
    r.dir = in.dir;
    r.weight = in.weight;
    check_weight(kind, r.weight, i);
    if (r.from_state == m.halt) {
      throw Error(ErrorCode::halt_has_outgoing_rule,
                  "rule out of halt state '" + in.from_state + "'", i);
    }
    table.emplace_back(r, i);
  }

  std::sort(table.begin(), table.end(), [](const auto& a, const auto& b) {
    auto ka = quintuple_key(a.first);
    auto kb = quintuple_key(b.first);
    if (ka != kb) return ka < kb;
    return a.second < b.second;
  });

  for (std::size_t i = 1; i < table.size(); ++i) {
    const auto& prev = table[i - 1];
    const auto& cur = table[i];
    if (quintuple_key(prev.first) == quintuple_key(cur.first)) {
      throw Error(ErrorCode::duplicate_quintuple, "duplicate rule quintuple",
                  std::max(prev.second, cur.second));
    }
    if (kind == MachineKind::deterministic &&
        prev.first.from_state == cur.first.from_state &&
        prev.first.read_symbol == cur.first.read_symbol) {
      throw Error(ErrorCode::deterministic_conflict,
                  "two deterministic rules share (state, symbol)",
                  std::max(prev.second, cur.second));
    }
  }

  m.rules.reserve(table.size());
  for (auto& [r, idx] : table) m.rules.push_back(r);
  return m;
}

}  // namespace pathsum
