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

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>

namespace ptrack {

/**
 * Pending Pauli correction on one qubit, ignoring global phase.
 *
 * Stored as a pair of flags: bit 0 is the X component, bit 1 the Z
 * component. The four values form the Klein four-group under XOR, which is
 * all the frame needs; the phase of XZ versus ZX is never observable.
 */
enum class PauliStatus : std::uint8_t {
  I = 0,
  X = 1,
  Z = 2,
  XZ = 3,
};

inline constexpr std::array<PauliStatus, 4> kAllStatuses = {
    PauliStatus::I, PauliStatus::X, PauliStatus::Z, PauliStatus::XZ};

constexpr bool has_x(PauliStatus s) {
  return (static_cast<std::uint8_t>(s) & 1u) != 0;
}
constexpr bool has_z(PauliStatus s) {
  return (static_cast<std::uint8_t>(s) & 2u) != 0;
}

constexpr PauliStatus make_status(bool x, bool z) {
  return static_cast<PauliStatus>((x ? 1u : 0u) | (z ? 2u : 0u));
}

constexpr PauliStatus flip_x(PauliStatus s) {
  return static_cast<PauliStatus>(static_cast<std::uint8_t>(s) ^ 1u);
}

constexpr PauliStatus flip_z(PauliStatus s) {
  return static_cast<PauliStatus>(static_cast<std::uint8_t>(s) ^ 2u);
}

/// Group product with phases discarded.
constexpr PauliStatus compose(PauliStatus a, PauliStatus b) {
  return static_cast<PauliStatus>(static_cast<std::uint8_t>(a) ^
                                  static_cast<std::uint8_t>(b));
}

std::string_view to_string(PauliStatus s);
std::optional<PauliStatus> parse_status(std::string_view text);

/// Dense 2x2 complex matrix, row-major.
struct Matrix2 {
  using Scalar = std::complex<double>;
  std::array<Scalar, 4> m{};

  constexpr Scalar& operator()(int r, int c) { return m[2 * r + c]; }
  constexpr const Scalar& operator()(int r, int c) const {
    return m[2 * r + c];
  }

  static Matrix2 identity();
  Matrix2 adjoint() const;
  bool is_unitary(double tol) const;

  friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);
  friend Matrix2 operator*(Matrix2::Scalar k, const Matrix2& a);
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// Matrix realization of a status; XZ is the product X times Z.
Matrix2 matrix_of(PauliStatus s);

/// True if a equals e^{i theta} b for some theta, entrywise within tol.
bool equal_up_to_phase(const Matrix2& a, const Matrix2& b, double tol);

}  // namespace ptrack
