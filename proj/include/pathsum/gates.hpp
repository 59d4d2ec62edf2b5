#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "pathsum/machine.hpp"

namespace pathsum {

// d x d matrix of probability amplitudes over path labels; entry(a, b) is
// the amplitude for input a to produce output b. Unitarity (orthonormal
// rows and columns within k_norm_epsilon) is checked at construction.
class Gate {
 public:
  Gate(std::size_t dim, std::vector<std::complex<double>> row_major_entries);
  static Gate identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::complex<double> entry(std::size_t in, std::size_t out) const {
    return entries_[in * dim_ + out];
  }

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  std::size_t dim_;
  std::vector<std::complex<double>> entries_;
};

// Amplitude per path label; squared moduli sum to 1 within k_norm_epsilon.
struct PathState {
  explicit PathState(std::vector<std::complex<double>> amplitudes);
  static PathState basis(std::size_t dim, std::size_t label);

  std::size_t dim() const { return amplitudes.size(); }

  std::vector<std::complex<double>> amplitudes;

  friend bool operator==(const PathState&, const PathState&) = default;
};

// The machine that preserves a bit with amplitude i/sqrt(2) and negates it
// with amplitude 1/sqrt(2); applied twice it implements logical not.
Gate sqrt_not();

// first applied first: entry (a -> b) sums first(a, k) * then(k, b) over
// the intermediate labels k.
Gate compose(const Gate& first, const Gate& then);

PathState apply(const Gate& g, const PathState& s);

// Boolean function {0,1}^n -> {0,1}^m as a lookup table of 2^n values.
struct BooleanFunctionTable {
  BooleanFunctionTable(std::uint32_t input_bits, std::uint32_t output_bits,
                       std::vector<std::uint64_t> values);

  std::uint32_t input_bits;
  std::uint32_t output_bits;
  std::vector<std::uint64_t> values;
};

// Diagonal gate of dimension 2^n multiplying path x by exp(2*pi*i*f(x)/2^m).
Gate phase_oracle(const BooleanFunctionTable& f);

enum class DeutschVerdict : std::uint8_t { constant, balanced };

std::string_view deutsch_verdict_name(DeutschVerdict v);

struct DeutschReport {
  double p_output0 = 0.0;
  double p_output1 = 0.0;
  DeutschVerdict verdict = DeutschVerdict::constant;
  int oracle_calls = 0;
};

// Decides constant vs balanced for f: {0,1} -> {0,1} with one consultation
// of the phase oracle, sandwiched between two sqrt-not stages.
DeutschReport deutsch_decide(const BooleanFunctionTable& f);

// Embeds a gate as a one-step quantum machine: rules (q0, a) -> (qh, b, N)
// with amplitude entry(a, b), over single-digit symbols plus a blank.
MachineDescription bridge_gate_to_machine(const Gate& g);

}  // namespace pathsum
