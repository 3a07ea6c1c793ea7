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

#include "ptrack/pauli.hpp"

#include <cmath>

namespace ptrack {

std::string_view to_string(PauliStatus s) {
  switch (s) {
    case PauliStatus::I:
      return "I";
    case PauliStatus::X:
      return "X";
    case PauliStatus::Z:
      return "Z";
    case PauliStatus::XZ:
      return "XZ";
  }
  return "?";
}

std::optional<PauliStatus> parse_status(std::string_view text) {
  if (text == "I") return PauliStatus::I;
  if (text == "X") return PauliStatus::X;
  if (text == "Z") return PauliStatus::Z;
  if (text == "XZ") return PauliStatus::XZ;
  return std::nullopt;
}

Matrix2 Matrix2::identity() {
  Matrix2 r;
  r(0, 0) = 1.0;
  r(1, 1) = 1.0;
  return r;
}

Matrix2 Matrix2::adjoint() const {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

bool Matrix2::is_unitary(double tol) const {
  const Matrix2 p = adjoint() * *this;
  const Matrix2 id = identity();
  for (std::size_t k = 0; k < 4; ++k)
    if (std::abs(p.m[k] - id.m[k]) > tol) return false;
  return true;
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

Matrix2 operator*(Matrix2::Scalar k, const Matrix2& a) {
  Matrix2 r = a;
  for (auto& v : r.m) v *= k;
  return r;
}

Matrix2 matrix_of(PauliStatus s) {
  Matrix2 x;
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  Matrix2 z;
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  switch (s) {
    case PauliStatus::I:
      return Matrix2::identity();
    case PauliStatus::X:
      return x;
    case PauliStatus::Z:
      return z;
    case PauliStatus::XZ:
      return x * z;
  }
  return Matrix2::identity();
}

bool equal_up_to_phase(const Matrix2& a, const Matrix2& b, double tol) {
  std::size_t pivot = 0;
  for (std::size_t k = 1; k < 4; ++k)
    if (std::abs(b.m[k]) > std::abs(b.m[pivot])) pivot = k;
  if (std::abs(b.m[pivot]) <= tol) {
    for (const auto& v : a.m)
      if (std::abs(v) > tol) return false;
    return true;
  }
  std::complex<double> phase = a.m[pivot] / b.m[pivot];
  if (std::abs(phase) == 0.0) return false;
  phase /= std::abs(phase);
  for (std::size_t k = 0; k < 4; ++k)
    if (std::abs(a.m[k] - phase * b.m[k]) > tol) return false;
  return true;
}

}  // namespace ptrack
