#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "pathsum/configuration.hpp"
#include "pathsum/machine.hpp"
#include "pathsum/weighted_state.hpp"

namespace pathsum {

enum class RunStatus : std::uint8_t { halted, stuck, step_limit };

std::string_view run_status_name(RunStatus status);

struct RunOutcome {
  RunStatus status = RunStatus::halted;
  Configuration final_config;
  std::uint64_t steps = 0;
};

// One root-to-leaf branch of the computation tree. A step without a rule
// index is an absorbing self-loop (halted or stuck branch padded to depth).
struct PathStep {
  std::optional<std::uint32_t> rule;  // index into MachineDescription::rules
  Configuration config;

  friend bool operator==(const PathStep&, const PathStep&) = default;
};

struct PathRecord {
  Configuration root;
  std::vector<PathStep> steps;
  std::complex<double> weight = 1.0;  // product of applied rule weights

  friend bool operator==(const PathRecord&, const PathRecord&) = default;
};

struct PathEnumeration {
  WeightKind kind = WeightKind::probability;
  Configuration root;
  std::uint32_t depth = 0;
  std::vector<PathRecord> paths;  // lexicographic in applied-rule indices
  bool truncated = false;         // set when max_paths would be exceeded
};

inline constexpr std::uint64_t k_default_max_paths = 1000000;

// Runs the unique applicable rule until halt, an undefined (state, symbol),
// or the step budget. Deterministic machines only.
RunOutcome run_deterministic(const MachineDescription& m, std::string_view input,
                             std::uint64_t max_steps);
RunOutcome run_deterministic_from(const MachineDescription& m, Configuration start,
                                  std::uint64_t max_steps);

// Level-wise aggregation: weights of configurations sharing a level are
// merged before the next step; halted and stuck configurations are absorbing.
// Probabilistic machines must pass validate_stochastic. Deterministic
// machines are rejected (use run_deterministic).
WeightedState evolve(const MachineDescription& m, std::string_view input, std::uint32_t steps);
WeightedState evolve_from(const MachineDescription& m, Configuration start,
                          std::uint32_t steps);

// Every depth-n branch of the computation tree, in lexicographic order of
// applied-rule indices. Halted/stuck branches are padded with self-loops.
PathEnumeration enumerate_paths(const MachineDescription& m, std::string_view input,
                                std::uint32_t steps,
                                std::uint64_t max_paths = k_default_max_paths);
PathEnumeration enumerate_paths_from(const MachineDescription& m, Configuration start,
                                     std::uint32_t steps,
                                     std::uint64_t max_paths = k_default_max_paths);

// Groups paths by final configuration and sums their cumulative weights in
// path order. All paths must share the root (MixedRoots) and length.
WeightedState aggregate_paths(WeightKind kind, std::span<const PathRecord> paths);
WeightedState aggregate_paths(const PathEnumeration& enumeration);

struct SampleOutcome {
  RunOutcome outcome;
  PathRecord trajectory;
};

// Follows a single random path of a probabilistic machine; branch chosen by
// cumulative-weight inversion over the rules in canonical order. The same
// seed yields the same trajectory on every platform.
SampleOutcome sample_run(const MachineDescription& m, std::string_view input,
                         std::uint64_t max_steps, std::uint64_t seed);
SampleOutcome sample_run(const MachineDescription& m, std::string_view input,
                         std::uint64_t max_steps, std::mt19937_64& rng);

}  // namespace pathsum
