#include "pathsum/gates.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace pathsum {

namespace {

void check_unitary(std::size_t dim, const std::vector<std::complex<double>>& e) {
  auto at = [&](std::size_t r, std::size_t c) { return e[r * dim + c]; };
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      std::complex<double> row_dot = 0.0;
      std::complex<double> col_dot = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        row_dot += std::conj(at(i, k)) * at(j, k);
        col_dot += std::conj(at(k, i)) * at(k, j);
      }
      double expected = i == j ? 1.0 : 0.0;
      if (std::abs(row_dot - expected) > k_norm_epsilon ||
          std::abs(col_dot - expected) > k_norm_epsilon) {
        throw Error(ErrorCode::non_unitary,
                    "gate rows/columns are not orthonormal (entry " + std::to_string(i) +
                        "," + std::to_string(j) + ")");
      }
    }
  }
}

}  // namespace

Gate::Gate(std::size_t dim, std::vector<std::complex<double>> row_major_entries)
    : dim_(dim), entries_(std::move(row_major_entries)) {
  if (dim_ < 1) {
    throw Error(ErrorCode::dimension_mismatch, "gate dimension must be at least 1");
  }
  if (entries_.size() != dim_ * dim_) {
    throw Error(ErrorCode::dimension_mismatch, "gate entry count does not match dimension");
  }
  for (const auto& c : entries_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorCode::invalid_weight, "gate entry is not finite");
    }
  }
  check_unitary(dim_, entries_);
}

Gate Gate::identity(std::size_t dim) {
  std::vector<std::complex<double>> e(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
  return Gate(dim, std::move(e));
}

PathState::PathState(std::vector<std::complex<double>> amps) : amplitudes(std::move(amps)) {
  if (amplitudes.empty()) {
    throw Error(ErrorCode::dimension_mismatch, "path state must have dimension at least 1");
  }
  double norm2 = 0.0;
  for (const auto& a : amplitudes) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > k_norm_epsilon) {
    throw Error(ErrorCode::not_normalized, "path state squared moduli do not sum to 1");
  }
}

PathState PathState::basis(std::size_t dim, std::size_t label) {
  if (label >= dim) {
    throw Error(ErrorCode::dimension_mismatch, "basis label out of range");
  }
  std::vector<std::complex<double>> amps(dim, 0.0);
  amps[label] = 1.0;
  return PathState(std::move(amps));
}

Gate sqrt_not() {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const std::complex<double> keep(0.0, inv_sqrt2);
  const std::complex<double> flip(inv_sqrt2, 0.0);
  return Gate(2, {keep, flip, flip, keep});
}

Gate compose(const Gate& first, const Gate& then) {
  if (first.dim() != then.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "composed gates must share a dimension");
  }
  std::size_t d = first.dim();
  std::vector<std::complex<double>> e(d * d, 0.0);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      std::complex<double> sum = 0.0;
      for (std::size_t k = 0; k < d; ++k) sum += first.entry(a, k) * then.entry(k, b);
      e[a * d + b] = sum;
    }
  }
  return Gate(d, std::move(e));
}

PathState apply(const Gate& g, const PathState& s) {
  if (g.dim() != s.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "gate and state dimensions differ");
  }
  std::size_t d = g.dim();
  std::vector<std::complex<double>> out(d, 0.0);
  for (std::size_t b = 0; b < d; ++b) {
    std::complex<double> sum = 0.0;
    for (std::size_t a = 0; a < d; ++a) sum += s.amplitudes[a] * g.entry(a, b);
    out[b] = sum;
  }
  return PathState(std::move(out));
}

BooleanFunctionTable::BooleanFunctionTable(std::uint32_t n, std::uint32_t m,
                                           std::vector<std::uint64_t> vals)
    : input_bits(n), output_bits(m), values(std::move(vals)) {
  if (n == 0 || n > 16 || m == 0 || m > 63) {
    throw Error(ErrorCode::invalid_table, "unsupported function arity");
  }
  if (values.size() != (std::uint64_t{1} << n)) {
    throw Error(ErrorCode::invalid_table, "table must list one value per input");
  }
  for (std::uint64_t v : values) {
    if (v >= (std::uint64_t{1} << m)) {
      throw Error(ErrorCode::invalid_table, "table value exceeds the output range");
    }
  }
}

Gate phase_oracle(const BooleanFunctionTable& f) {
  std::size_t d = std::size_t{1} << f.input_bits;
  double denom = static_cast<double>(std::uint64_t{1} << f.output_bits);
  std::vector<std::complex<double>> e(d * d, 0.0);
  for (std::size_t x = 0; x < d; ++x) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(f.values[x]) / denom;
    e[x * d + x] = std::polar(1.0, angle);
  }
  return Gate(d, std::move(e));
}

std::string_view deutsch_verdict_name(DeutschVerdict v) {
  return v == DeutschVerdict::constant ? "constant" : "balanced";
}

DeutschReport deutsch_decide(const BooleanFunctionTable& f) {
  if (f.input_bits != 1 || f.output_bits != 1) {
    throw Error(ErrorCode::wrong_arity, "deutsch_decide requires f: {0,1} -> {0,1}");
  }
  DeutschReport report;
  Gate oracle = phase_oracle(f);
  auto consult_oracle = [&]() -> const Gate& {
    ++report.oracle_calls;
    return oracle;
  };
  Gate machine = compose(compose(sqrt_not(), consult_oracle()), sqrt_not());
  PathState out = apply(machine, PathState::basis(2, 0));
  report.p_output0 = std::norm(out.amplitudes[0]);
  report.p_output1 = std::norm(out.amplitudes[1]);
  report.verdict =
      report.p_output0 < 0.5 ? DeutschVerdict::constant : DeutschVerdict::balanced;
  return report;
}

MachineDescription bridge_gate_to_machine(const Gate& g) {
  if (g.dim() < 2 || g.dim() > 10) {
    throw Error(ErrorCode::dimension_mismatch,
                "bridge supports gate dimensions 2 through 10");
  }
  std::vector<std::string> alphabet;
  for (std::size_t a = 0; a < g.dim(); ++a) alphabet.push_back(std::to_string(a));
  alphabet.push_back("_");
  std::vector<RuleInput> rules;
  for (std::size_t a = 0; a < g.dim(); ++a) {
    for (std::size_t b = 0; b < g.dim(); ++b) {
      rules.push_back({"q0", std::to_string(a), "qh", std::to_string(b),
                       Direction::nothing, g.entry(a, b)});
    }
  }
  return build_machine(MachineKind::quantum, std::move(alphabet), "_", {"q0", "qh"},
                       "q0", "qh", rules);
}

}  // namespace pathsum
