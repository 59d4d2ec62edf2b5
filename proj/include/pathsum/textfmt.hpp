#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathsum/machine.hpp"

namespace pathsum {

struct SourceDiagnostic {
  enum class Severity : std::uint8_t { error, warning };

  int line = 1;    // 1-based
  int column = 1;  // 1-based
  std::string message;
  Severity severity = Severity::error;
};

struct ParseResult {
  std::optional<MachineDescription> machine;
  std::vector<SourceDiagnostic> diagnostics;

  bool ok() const { return machine.has_value(); }
};

// Parses the line-oriented machine format:
//   kind: deterministic|probabilistic|quantum
//   alphabet: <symbols>        blank: <symbol>
//   states: <names>            start: <name>    halt: <name>
//   rule: <q> <s> -> <q'> <s'> <L|R|N> [<weight>]
// '#' starts a comment; blank lines are ignored; headers precede rules.
// Weights: none (deterministic), a real (probabilistic), or `(<re>, <im>)`
// (quantum); `1/sqrt(2)` and `-1/sqrt(2)` are accepted wherever a real may
// appear. Parsing continues past errors and reports every diagnostic; a
// machine is produced only when no errors were found.
ParseResult parse_machine(std::string_view text);

// Canonical text: headers in fixed order, rules sorted canonically, reals
// printed with 17 significant digits. parse_machine(serialize_machine(m))
// reproduces m exactly, and the output is byte-stable.
std::string serialize_machine(const MachineDescription& m);

}  // namespace pathsum
