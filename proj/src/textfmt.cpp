#include "pathsum/textfmt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numbers>
#include <set>
#include <tuple>
#include <utility>

namespace pathsum {

namespace {

using Severity = SourceDiagnostic::Severity;

struct Token {
  std::string text;
  int column = 1;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t begin = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    tokens.push_back({std::string(line.substr(begin, i - begin)),
                      static_cast<int>(begin) + 1});
  }
  return tokens;
}

std::optional<double> parse_real_literal(std::string_view tok) {
  if (tok == "1/sqrt(2)" || tok == "+1/sqrt(2)") return 1.0 / std::numbers::sqrt2;
  if (tok == "-1/sqrt(2)") return -1.0 / std::numbers::sqrt2;
  if (tok.empty()) return std::nullopt;
  std::string buf(tok);
  char* end = nullptr;
  double value = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size()) return std::nullopt;
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

// `(<re>, <im>)` with arbitrary inner spacing.
std::optional<std::complex<double>> parse_complex_literal(std::string_view text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') return std::nullopt;
  std::string_view inner = text.substr(1, text.size() - 2);
  std::size_t comma = inner.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  auto re = parse_real_literal(trim(inner.substr(0, comma)));
  auto im = parse_real_literal(trim(inner.substr(comma + 1)));
  if (!re || !im) return std::nullopt;
  return std::complex<double>(*re, *im);
}

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct HeaderSlot {
  bool seen = false;
  int line = 0;
  std::vector<Token> values;
};

struct PendingRule {
  int line = 0;
  Token from_state, read_symbol, to_state, write_symbol;
  Direction dir = Direction::nothing;
  std::complex<double> weight = 1.0;
};

}  // namespace

ParseResult parse_machine(std::string_view text) {
  ParseResult result;
  auto error = [&](int line, int column, std::string message) {
    result.diagnostics.push_back({line, column, std::move(message), Severity::error});
  };

  HeaderSlot kind_h, alphabet_h, blank_h, states_h, start_h, halt_h, format_h;
  const std::pair<std::string_view, HeaderSlot*> header_table[] = {
      {"kind", &kind_h},   {"alphabet", &alphabet_h}, {"blank", &blank_h},
      {"states", &states_h}, {"start", &start_h},     {"halt", &halt_h},
      {"format", &format_h},
  };

  std::optional<MachineKind> kind;
  std::vector<PendingRule> pending;
  bool rules_seen = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    if (pos == text.size() && line_no > 0) break;
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                          : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    bool ascii_ok = true;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (static_cast<unsigned char>(raw[i]) >= 0x80) {
        error(line_no, static_cast<int>(i) + 1, "non-ASCII byte in input");
        ascii_ok = false;
        break;
      }
    }
    if (!ascii_ok) continue;

    std::string_view content = raw.substr(0, std::min(raw.find('#'), raw.size()));
    std::vector<Token> tokens = tokenize(content);
    if (tokens.empty()) continue;

    const Token& head = tokens[0];
    if (head.text.size() < 2 || head.text.back() != ':') {
      error(line_no, head.column, "expected a directive such as 'kind:' or 'rule:'");
      continue;
    }
    std::string directive = head.text.substr(0, head.text.size() - 1);

    if (directive == "rule") {
      rules_seen = true;
      if (tokens.size() < 7) {
        error(line_no, head.column,
              "malformed rule; expected 'rule: <q> <s> -> <q'> <s'> <L|R|N> [<weight>]'");
        continue;
      }
      if (tokens[3].text != "->") {
        error(line_no, tokens[3].column, "expected '->'");
        continue;
      }
      std::optional<Direction> dir;
      if (tokens[6].text.size() == 1) dir = direction_from_letter(tokens[6].text[0]);
      if (!dir) {
        error(line_no, tokens[6].column, "direction must be L, R or N");
        continue;
      }
      if (!kind) continue;  // the missing/invalid kind header carries the diagnostic

      std::complex<double> weight = 1.0;
      if (*kind == MachineKind::deterministic) {
        if (tokens.size() > 7) {
          error(line_no, tokens[7].column, "deterministic rule takes no weight");
          continue;
        }
      } else if (*kind == MachineKind::probabilistic) {
        if (tokens.size() != 8) {
          error(line_no, tokens[6].column, "probabilistic rule takes exactly one real weight");
          continue;
        }
        auto value = parse_real_literal(tokens[7].text);
        if (!value) {
          error(line_no, tokens[7].column, "invalid weight literal '" + tokens[7].text + "'");
          continue;
        }
        if (*value < 0.0 || *value > 1.0) {
          error(line_no, tokens[7].column, "weight out of range [0,1]");
          continue;
        }
        weight = *value;
      } else {
        if (tokens.size() < 8) {
          error(line_no, tokens[6].column, "quantum rule requires a weight '(<re>, <im>)'");
          continue;
        }
        std::string joined = tokens[7].text;
        for (std::size_t i = 8; i < tokens.size(); ++i) joined += " " + tokens[i].text;
        auto value = parse_complex_literal(joined);
        if (!value) {
          error(line_no, tokens[7].column,
                "invalid weight; expected '(<re>, <im>)' with real literals");
          continue;
        }
        weight = *value;
      }
      pending.push_back(
          {line_no, tokens[1], tokens[2], tokens[4], tokens[5], *dir, weight});
      continue;
    }

    HeaderSlot* slot = nullptr;
    for (const auto& [name, ptr] : header_table) {
      if (directive == name) {
        slot = ptr;
        break;
      }
    }
    if (slot == nullptr) {
      error(line_no, head.column, "unknown directive '" + head.text + "'");
      continue;
    }
    if (rules_seen) {
      error(line_no, head.column, "header '" + head.text + "' must precede all rules");
      continue;
    }
    if (slot->seen) {
      error(line_no, head.column, "duplicate header '" + head.text + "'");
      continue;
    }
    slot->seen = true;
    slot->line = line_no;
    slot->values.assign(tokens.begin() + 1, tokens.end());

    if (directive == "kind") {
      if (slot->values.size() != 1 ||
          !(kind = kind_from_name(slot->values[0].text)).has_value()) {
        error(line_no, slot->values.empty() ? head.column : slot->values[0].column,
              "kind must be deterministic, probabilistic or quantum");
      }
    } else if (directive == "format") {
      if (slot->values.size() != 1 || slot->values[0].text != "1") {
        error(line_no, slot->values.empty() ? head.column : slot->values[0].column,
              "unsupported format revision");
      }
    } else if (directive == "alphabet" || directive == "states") {
      if (slot->values.empty()) {
        error(line_no, head.column, "'" + head.text + "' needs at least one name");
      }
    } else {
      if (slot->values.size() != 1) {
        error(line_no, head.column, "'" + head.text + "' takes exactly one name");
      }
    }
  }

  const std::pair<std::string_view, HeaderSlot*> required[] = {
      {"kind", &kind_h},     {"alphabet", &alphabet_h}, {"blank", &blank_h},
      {"states", &states_h}, {"start", &start_h},       {"halt", &halt_h},
  };
  for (const auto& [name, slot] : required) {
    if (!slot->seen) error(1, 1, "missing header '" + std::string(name) + ":'");
  }

  auto collect_names = [&](HeaderSlot& slot, const char* what) {
    std::vector<std::string> names;
    std::set<std::string_view> seen;
    for (const Token& t : slot.values) {
      if (!is_valid_token_name(t.text)) {
        error(slot.line, t.column, std::string("invalid ") + what + " name '" + t.text + "'");
        continue;
      }
      if (!seen.insert(t.text).second) {
        error(slot.line, t.column, std::string("duplicate ") + what + " '" + t.text + "'");
        continue;
      }
      names.push_back(t.text);
    }
    return names;
  };

  std::vector<std::string> alphabet = collect_names(alphabet_h, "symbol");
  std::vector<std::string> states = collect_names(states_h, "state");
  std::set<std::string_view> symbol_set(alphabet.begin(), alphabet.end());
  std::set<std::string_view> state_set(states.begin(), states.end());

  auto single_name = [&](HeaderSlot& slot, const std::set<std::string_view>& universe,
                         const char* what, const char* universe_name) -> std::string {
    if (!slot.seen || slot.values.size() != 1) return "";
    const Token& t = slot.values[0];
    if (!universe.contains(t.text)) {
      error(slot.line, t.column,
            std::string(what) + " '" + t.text + "' is not in the " + universe_name);
      return "";
    }
    return t.text;
  };

  std::string blank = single_name(blank_h, symbol_set, "blank symbol", "alphabet");
  std::string start = single_name(start_h, state_set, "start state", "declared states");
  std::string halt = single_name(halt_h, state_set, "halt state", "declared states");

  std::vector<RuleInput> rules;
  std::vector<int> rule_lines;
  if (kind && alphabet_h.seen && states_h.seen) {
    using Quintuple = std::tuple<std::string, std::string, std::string, std::string, int>;
    std::set<Quintuple> quintuples;
    std::set<std::pair<std::string, std::string>> det_pairs;
    for (const PendingRule& p : pending) {
      const Token* bad_state = nullptr;
      const Token* bad_symbol = nullptr;
      if (!state_set.contains(p.from_state.text)) bad_state = &p.from_state;
      else if (!symbol_set.contains(p.read_symbol.text)) bad_symbol = &p.read_symbol;
      else if (!state_set.contains(p.to_state.text)) bad_state = &p.to_state;
      else if (!symbol_set.contains(p.write_symbol.text)) bad_symbol = &p.write_symbol;
      if (bad_state != nullptr) {
        error(p.line, bad_state->column, "unknown state '" + bad_state->text + "'");
        continue;
      }
      if (bad_symbol != nullptr) {
        error(p.line, bad_symbol->column, "unknown symbol '" + bad_symbol->text + "'");
        continue;
      }
      if (!halt.empty() && p.from_state.text == halt) {
        error(p.line, p.from_state.column, "rule out of the halt state");
        continue;
      }
      Quintuple key{p.from_state.text, p.read_symbol.text, p.to_state.text,
                    p.write_symbol.text, static_cast<int>(p.dir)};
      if (!quintuples.insert(key).second) {
        error(p.line, p.from_state.column, "duplicate rule quintuple");
        continue;
      }
      if (*kind == MachineKind::deterministic &&
          !det_pairs.insert({p.from_state.text, p.read_symbol.text}).second) {
        error(p.line, p.from_state.column,
              "conflicts with an earlier rule for the same (state, symbol)");
        continue;
      }
      rules.push_back({p.from_state.text, p.read_symbol.text, p.to_state.text,
                       p.write_symbol.text, p.dir, p.weight});
      rule_lines.push_back(p.line);
    }
  }

  for (const SourceDiagnostic& d : result.diagnostics) {
    if (d.severity == Severity::error) return result;
  }

  try {
    result.machine = build_machine(*kind, std::move(alphabet), blank, std::move(states),
                                   start, halt, rules);
  } catch (const Error& e) {
    int line = e.rule_index() && *e.rule_index() < rule_lines.size()
                   ? rule_lines[*e.rule_index()]
                   : 1;
    error(line, 1, e.what());
  }
  return result;
}

std::string serialize_machine(const MachineDescription& m) {
  std::string out;
  out += "kind: ";
  out += kind_name(m.kind);
  out += "\nalphabet:";
  for (const auto& s : m.symbols) {
    out += ' ';
    out += s;
  }
  out += "\nblank: " + m.symbol_name(m.blank);
  out += "\nstates:";
  for (const auto& s : m.states) {
    out += ' ';
    out += s;
  }
  out += "\nstart: " + m.state_name(m.start);
  out += "\nhalt: " + m.state_name(m.halt);
  out += '\n';
  for (const TransitionRule& r : m.rules) {
    out += "rule: " + m.state_name(r.from_state) + ' ' + m.symbol_name(r.read_symbol) +
           " -> " + m.state_name(r.to_state) + ' ' + m.symbol_name(r.write_symbol) + ' ' +
           direction_letter(r.dir);
    if (m.kind == MachineKind::probabilistic) {
      out += ' ' + g17(r.weight.real());
    } else if (m.kind == MachineKind::quantum) {
      out += " (" + g17(r.weight.real()) + ", " + g17(r.weight.imag()) + ')';
    }
    out += '\n';
  }
  return out;
}

}  // namespace pathsum
