// Copyright 2026 The ptrack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ptrack/pauli.hpp"
#include "ptrack/random.hpp"
#include "ptrack/tracker.hpp"

namespace ptrack {

using Label = std::uint32_t;
using Amplitude = std::complex<double>;

/// Resource states consumed by the teleportation gadgets.
enum class InjectedState {
  Y,      // (|0> + i|1>) / sqrt2
  YConj,  // (|0> - i|1>) / sqrt2 = Z|Y>
  A,      // (|0> + e^{i pi/4}|1>) / sqrt2
};

/**
 * Dense state over a set of labeled qubits.
 *
 * Position p in labels() corresponds to bit (k - 1 - p) of the amplitude
 * index, i.e. the first label is the most significant bit. Measured
 * qubits are removed, so the vector always has 2^k entries for k live
 * labels.
 */
class StateVector {
 public:
  /// Hard memory bound for any single state.
  static constexpr std::size_t kMaxQubits = 24;

  /// Zero qubits, amplitude 1.
  StateVector();

  /// |0...0> over labels 0..n-1.
  static StateVector zeros(std::size_t n);

  /// Computational basis state |index> over labels 0..n-1 (label 0 is MSB).
  static StateVector basis(std::size_t n, std::uint64_t index);

  /// Haar-like random state over labels 0..n-1 (normalized complex
  /// Gaussian amplitudes).
  static StateVector random(std::size_t n, Rng& rng);

  /// Throws std::invalid_argument unless amplitudes.size() == 2^labels and
  /// the norm is 1 within 1e-9, or labels repeat.
  static StateVector from_amplitudes(std::vector<Label> labels,
                                     std::vector<Amplitude> amplitudes);

  std::span<const Label> labels() const { return labels_; }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  std::size_t num_qubits() const { return labels_.size(); }
  bool contains(Label label) const;
  double norm_squared() const;

  /// Tensor-extends with a fresh qubit as the new least significant bit.
  /// Throws std::invalid_argument on a duplicate label.
  void inject(Label label, InjectedState which);

  void apply_cnot(Label control, Label target);

  /// Throws std::invalid_argument for a dead label or a matrix that is not
  /// unitary within 1e-12.
  void apply_unitary(Label q, const Matrix2& u);

  /// Samples a Born outcome, collapses, renormalizes and removes q.
  /// Z basis: false = |0>; X basis: false = |+>.
  bool measure(Label q, Basis basis, Rng& rng);

  /// Post-selects `outcome` on q and removes it. Returns the branch
  /// probability. Throws std::domain_error for a zero-probability branch.
  double project(Label q, Basis basis, bool outcome);

  void relabel(Label from, Label to);

  /// Same state with positions permuted so labels() == order.
  StateVector reordered(std::span<const Label> order) const;

 private:
  std::size_t position(Label label) const;
  std::uint64_t mask(std::size_t position) const {
    return std::uint64_t{1} << (labels_.size() - 1 - position);
  }
  void remove(std::size_t position, bool outcome, double probability);
  double probability_of_one(std::size_t position) const;

  std::vector<Label> labels_;
  std::vector<Amplitude> amps_;
};

/**
 * Phase-insensitive comparison: true iff a = theta * b within max-norm tol
 * for a unit-modulus theta taken from the largest-magnitude amplitude of
 * b. Throws std::invalid_argument if the label lists differ.
 */
bool equal_up_to_phase(const StateVector& a, const StateVector& b,
                       double tol);

/// One amplitude per line, "re im" with 12 decimals, basis index order.
std::string format_state(const StateVector& state);

/// Inverse of format_state(); labels are 0..n-1.
StateVector parse_state(std::string_view text);

}  // namespace ptrack
