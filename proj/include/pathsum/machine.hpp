#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pathsum {

// Tolerance for normalization / stochasticity / unitarity checks.
inline constexpr double k_norm_epsilon = 1e-9;
// Weights with magnitude below this are dropped from weighted states.
// Two orders below k_norm_epsilon so pruning never masks a tolerance failure.
inline constexpr double k_prune_threshold = 1e-12;

using SymbolId = std::uint16_t;
using StateId = std::uint16_t;

enum class MachineKind : std::uint8_t { deterministic, probabilistic, quantum };

std::string_view kind_name(MachineKind kind);
std::optional<MachineKind> kind_from_name(std::string_view name);

enum class Direction : std::uint8_t { left, right, nothing };

char direction_letter(Direction d);
std::optional<Direction> direction_from_letter(char c);

enum class ErrorCode : std::uint8_t {
  unknown_state,
  unknown_symbol,
  duplicate_name,
  invalid_name,
  duplicate_quintuple,
  halt_has_outgoing_rule,
  deterministic_conflict,
  invalid_weight,
  wrong_kind,
  depth_zero,
  validation_failed,
  dimension_mismatch,
  non_unitary,
  not_normalized,
  invalid_table,
  wrong_arity,
  mixed_roots,
  length_mismatch,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> rule_index = std::nullopt)
      : std::runtime_error(message), code_(code), rule_index_(rule_index) {}

  ErrorCode code() const { return code_; }
  // Index into the caller-supplied rule list, when the error is about one rule.
  std::optional<std::size_t> rule_index() const { return rule_index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> rule_index_;
};

// One weighted quintuple: in state `from_state` scanning `read_symbol`,
// enter `to_state`, write `write_symbol`, move `dir`. States and symbols
// are indexes into the owning MachineDescription's name tables.
struct TransitionRule {
  StateId from_state = 0;
  SymbolId read_symbol = 0;
  StateId to_state = 0;
  SymbolId write_symbol = 0;
  Direction dir = Direction::nothing;
  std::complex<double> weight = 1.0;

  friend bool operator==(const TransitionRule&, const TransitionRule&) = default;
};

// Rule as supplied by callers, with names instead of ids.
struct RuleInput {
  std::string from_state;
  std::string read_symbol;
  std::string to_state;
  std::string write_symbol;
  Direction dir = Direction::nothing;
  std::complex<double> weight = 1.0;
};

struct MachineDescription {
  MachineKind kind = MachineKind::deterministic;
  std::vector<std::string> symbols;  // sorted, unique; SymbolId = position
  std::vector<std::string> states;   // sorted, unique; StateId = position
  SymbolId blank = 0;
  StateId start = 0;
  StateId halt = 0;
  std::vector<TransitionRule> rules;  // sorted by (from, read, to, write, dir)

  const std::string& symbol_name(SymbolId id) const { return symbols[id]; }
  const std::string& state_name(StateId id) const { return states[id]; }
  std::optional<SymbolId> symbol_id(std::string_view name) const;
  std::optional<StateId> state_id(std::string_view name) const;

  // Rules applicable in state q scanning s; contiguous in the sorted table.
  std::span<const TransitionRule> rules_from(StateId q, SymbolId s) const;

  friend bool operator==(const MachineDescription&, const MachineDescription&) = default;
};

// True if the token can serve as a symbol or state name in the text format:
// printable ASCII, no whitespace, no '#', and not the arrow token.
bool is_valid_token_name(std::string_view name);

// Canonicalizes and validates a full machine description. Throws Error on
// undeclared names, duplicate quintuples, rules out of the halt state,
// per-kind weight violations, and deterministic (q, s) conflicts.
MachineDescription build_machine(MachineKind kind,
                                 std::vector<std::string> alphabet,
                                 const std::string& blank,
                                 std::vector<std::string> states,
                                 const std::string& start,
                                 const std::string& halt,
                                 std::span<const RuleInput> rules);

}  // namespace pathsum
