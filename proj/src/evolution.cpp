#include "pathsum/evolution.hpp"

#include <cmath>
#include <map>
#include <utility>

#include "pathsum/validate.hpp"

namespace pathsum {

std::string_view run_status_name(RunStatus status) {
  switch (status) {
    case RunStatus::halted: return "halted";
    case RunStatus::stuck: return "stuck";
    case RunStatus::step_limit: return "step-limit";
  }
  return "?";
}

RunOutcome run_deterministic_from(const MachineDescription& m, Configuration c,
                                  std::uint64_t max_steps) {
  if (m.kind != MachineKind::deterministic) {
    throw Error(ErrorCode::wrong_kind, "run_deterministic requires a deterministic machine");
  }
  std::uint64_t steps = 0;
  while (steps < max_steps) {
    if (c.state == m.halt) break;
    auto rules = m.rules_from(c.state, c.read(c.head, m.blank));
    if (rules.empty()) return {RunStatus::stuck, std::move(c), steps};
    c = apply_rule(m, c, rules.front());
    ++steps;
  }
  RunStatus status = c.state == m.halt ? RunStatus::halted : RunStatus::step_limit;
  return {status, std::move(c), steps};
}

RunOutcome run_deterministic(const MachineDescription& m, std::string_view input,
                             std::uint64_t max_steps) {
  return run_deterministic_from(m, initial_configuration(m, input), max_steps);
}

WeightedState evolve_from(const MachineDescription& m, Configuration start,
                          std::uint32_t steps) {
  if (m.kind == MachineKind::deterministic) {
    throw Error(ErrorCode::wrong_kind,
                "evolve requires a probabilistic or quantum machine; use run_deterministic");
  }
  if (m.kind == MachineKind::probabilistic && !validate_stochastic(m).passed) {
    throw Error(ErrorCode::validation_failed, "machine fails the stochasticity check");
  }

  std::map<Configuration, std::complex<double>> current;
  current.emplace(std::move(start), 1.0);
  for (std::uint32_t step = 0; step < steps; ++step) {
    std::map<Configuration, std::complex<double>> next;
    for (const auto& [c, w] : current) {
      if (c.state == m.halt) {
        next[c] += w;
        continue;
      }
      auto rules = m.rules_from(c.state, c.read(c.head, m.blank));
      if (rules.empty()) {
        next[c] += w;
        continue;
      }
      for (const TransitionRule& r : rules) {
        next[apply_rule(m, c, r)] += w * r.weight;
      }
    }
    prune_small_entries(next);
    current = std::move(next);
  }
  return {weight_kind_for(m.kind), std::move(current)};
}

WeightedState evolve(const MachineDescription& m, std::string_view input,
                     std::uint32_t steps) {
  return evolve_from(m, initial_configuration(m, input), steps);
}

namespace {

struct PathCollector {
  const MachineDescription& m;
  std::uint32_t depth;
  std::uint64_t max_paths;
  PathEnumeration& out;
  std::vector<PathStep> trail;

  // Returns false once the path budget is exhausted.
  bool walk(const Configuration& c, std::complex<double> weight, std::uint32_t level) {
    if (level == depth) {
      if (out.paths.size() >= max_paths) {
        out.truncated = true;
        return false;
      }
      out.paths.push_back({out.root, trail, weight});
      return true;
    }
    if (c.state == m.halt) return pad(c, weight, level);
    auto rules = m.rules_from(c.state, c.read(c.head, m.blank));
    if (rules.empty()) return pad(c, weight, level);
    auto base = static_cast<std::uint32_t>(rules.data() - m.rules.data());
    for (std::uint32_t k = 0; k < rules.size(); ++k) {
      Configuration succ = apply_rule(m, c, rules[k]);
      trail.push_back({base + k, succ});
      bool more = walk(succ, weight * rules[k].weight, level + 1);
      trail.pop_back();
      if (!more) return false;
    }
    return true;
  }

  bool pad(const Configuration& c, std::complex<double> weight, std::uint32_t level) {
    trail.push_back({std::nullopt, c});
    bool more = walk(c, weight, level + 1);
    trail.pop_back();
    return more;
  }
};

}  // namespace

PathEnumeration enumerate_paths_from(const MachineDescription& m, Configuration start,
                                     std::uint32_t steps, std::uint64_t max_paths) {
  PathEnumeration out;
  out.kind = weight_kind_for(m.kind);
  out.root = std::move(start);
  out.depth = steps;
  PathCollector collector{m, steps, max_paths, out, {}};
  collector.trail.reserve(steps);
  collector.walk(out.root, 1.0, 0);
  return out;
}

PathEnumeration enumerate_paths(const MachineDescription& m, std::string_view input,
                                std::uint32_t steps, std::uint64_t max_paths) {
  return enumerate_paths_from(m, initial_configuration(m, input), steps, max_paths);
}

WeightedState aggregate_paths(WeightKind kind, std::span<const PathRecord> paths) {
  WeightedState ws;
  ws.kind = kind;
  if (paths.empty()) return ws;
  const Configuration& root = paths.front().root;
  const std::size_t length = paths.front().steps.size();
  for (const PathRecord& p : paths) {
    if (p.root != root) {
      throw Error(ErrorCode::mixed_roots, "paths do not share a common root");
    }
    if (p.steps.size() != length) {
      throw Error(ErrorCode::length_mismatch, "paths have differing lengths");
    }
    const Configuration& final_config = p.steps.empty() ? p.root : p.steps.back().config;
    ws.entries[final_config] += p.weight;
  }
  prune_small_entries(ws.entries);
  return ws;
}

WeightedState aggregate_paths(const PathEnumeration& enumeration) {
  return aggregate_paths(enumeration.kind, enumeration.paths);
}

namespace {

double draw_unit(std::mt19937_64& rng) {
  // 53-bit mantissa draw in [0, 1); avoids distribution objects so the
  // stream is identical across standard library implementations.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

SampleOutcome sample_run(const MachineDescription& m, std::string_view input,
                         std::uint64_t max_steps, std::mt19937_64& rng) {
  if (m.kind != MachineKind::probabilistic) {
    throw Error(ErrorCode::wrong_kind, "sample_run requires a probabilistic machine");
  }
  if (!validate_stochastic(m).passed) {
    throw Error(ErrorCode::validation_failed, "machine fails the stochasticity check");
  }

  Configuration c = initial_configuration(m, input);
  SampleOutcome result;
  result.trajectory.root = c;
  std::uint64_t steps = 0;
  while (steps < max_steps) {
    if (c.state == m.halt) break;
    auto rules = m.rules_from(c.state, c.read(c.head, m.blank));
    if (rules.empty()) {
      result.outcome = {RunStatus::stuck, std::move(c), steps};
      return result;
    }
    auto base = static_cast<std::uint32_t>(rules.data() - m.rules.data());
    double u = draw_unit(rng);
    std::size_t chosen = rules.size() - 1;
    double acc = 0.0;
    for (std::size_t k = 0; k < rules.size(); ++k) {
      acc += rules[k].weight.real();
      if (u < acc) {
        chosen = k;
        break;
      }
    }
    c = apply_rule(m, c, rules[chosen]);
    result.trajectory.steps.push_back({base + static_cast<std::uint32_t>(chosen), c});
    result.trajectory.weight *= rules[chosen].weight;
    ++steps;
  }
  RunStatus status = c.state == m.halt ? RunStatus::halted : RunStatus::step_limit;
  result.outcome = {status, std::move(c), steps};
  return result;
}

SampleOutcome sample_run(const MachineDescription& m, std::string_view input,
                         std::uint64_t max_steps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_run(m, input, max_steps, rng);
}

}  // namespace pathsum
