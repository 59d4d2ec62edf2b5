#include "pathsum/validate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <set>

namespace pathsum {

ValidationReport validate_stochastic(const MachineDescription& m) {
  if (m.kind != MachineKind::probabilistic) {
    throw Error(ErrorCode::wrong_kind, "validate_stochastic requires a probabilistic machine");
  }
  ValidationReport report;
  std::size_t i = 0;
  while (i < m.rules.size()) {
    StateId q = m.rules[i].from_state;
    SymbolId s = m.rules[i].read_symbol;
    double sum = 0.0;
    while (i < m.rules.size() && m.rules[i].from_state == q && m.rules[i].read_symbol == s) {
      sum += m.rules[i].weight.real();
      ++i;
    }
    bool ok = std::abs(sum - 1.0) <= k_norm_epsilon;
    report.sums.push_back({q, s, sum, ok});
    report.passed = report.passed && ok;
  }
  return report;
}

namespace {

bool is_active(const MachineDescription& m, const Configuration& c) {
  return c.state != m.halt && !m.rules_from(c.state, c.read(c.head, m.blank)).empty();
}

std::map<Configuration, std::complex<double>> column_of(const MachineDescription& m,
                                                        const Configuration& c) {
  std::map<Configuration, std::complex<double>> col;
  for (const TransitionRule& r : m.rules_from(c.state, c.read(c.head, m.blank))) {
    col[apply_rule(m, c, r)] += r.weight;
  }
  return col;
}

}  // namespace

ValidationReport validate_norm_preserving(const MachineDescription& m,
                                          std::span<const std::string> probe_inputs,
                                          std::uint32_t depth) {
  if (m.kind != MachineKind::quantum) {
    throw Error(ErrorCode::wrong_kind, "validate_norm_preserving requires a quantum machine");
  }
  if (depth == 0) {
    throw Error(ErrorCode::depth_zero, "probe depth must be positive");
  }

  ValidationReport report;

  std::set<Configuration> reached;
  std::vector<Configuration> frontier;
  for (const std::string& probe : probe_inputs) {
    Configuration c;
    try {
      c = initial_configuration(m, std::string_view(probe));
    } catch (const Error& e) {
      report.notes.push_back("probe \"" + probe + "\" skipped: " + e.what());
      continue;
    }
    if (reached.insert(c).second) frontier.push_back(c);
  }

  for (std::uint32_t step = 0; step < depth && !frontier.empty(); ++step) {
    std::vector<Configuration> next;
    for (const Configuration& c : frontier) {
      if (c.state == m.halt) continue;
      for (const TransitionRule& r : m.rules_from(c.state, c.read(c.head, m.blank))) {
        Configuration succ = apply_rule(m, c, r);
        if (reached.insert(succ).second) next.push_back(std::move(succ));
      }
    }
    frontier = std::move(next);
  }

  std::vector<Configuration> active;
  for (const Configuration& c : reached) {
    if (is_active(m, c)) active.push_back(c);
  }

  std::vector<std::map<Configuration, std::complex<double>>> columns;
  columns.reserve(active.size());
  for (const Configuration& c : active) {
    auto col = column_of(m, c);
    double norm2 = 0.0;
    for (const auto& [succ, amp] : col) norm2 += std::norm(amp);
    bool ok = std::abs(norm2 - 1.0) <= k_norm_epsilon;
    report.norms.push_back({c, norm2, ok});
    report.passed = report.passed && ok;
    columns.push_back(std::move(col));
  }

  for (std::size_t i = 0; i < columns.size(); ++i) {
    for (std::size_t j = i + 1; j < columns.size(); ++j) {
      const auto& small = columns[i].size() <= columns[j].size() ? columns[i] : columns[j];
      const auto& large = columns[i].size() <= columns[j].size() ? columns[j] : columns[i];
      std::complex<double> dot = 0.0;
      for (const auto& [succ, amp] : small) {
        auto it = large.find(succ);
        if (it != large.end()) dot += std::conj(amp) * it->second;
      }
      if (std::abs(dot) > k_norm_epsilon) {
        report.overlaps.push_back({active[i], active[j], std::abs(dot)});
        report.passed = false;
      }
    }
  }

  return report;
}

}  // namespace pathsum
