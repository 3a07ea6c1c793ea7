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

#include "ptrack/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "ptrack/errors.hpp"
#include "text_util.hpp"

namespace ptrack {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_capacity(std::size_t n) {
  if (n > StateVector::kMaxQubits)
    throw CapacityError("state vector limited to " +
                        std::to_string(StateVector::kMaxQubits) +
                        " qubits, requested " + std::to_string(n));
}

std::vector<Label> iota_labels(std::size_t n) {
  std::vector<Label> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<Label>(i);
  return labels;
}

}  // namespace

StateVector::StateVector() : amps_{Amplitude{1.0, 0.0}} {}

StateVector StateVector::zeros(std::size_t n) { return basis(n, 0); }

StateVector StateVector::basis(std::size_t n, std::uint64_t index) {
  check_capacity(n);
  if (index >> n != 0)
    throw std::invalid_argument("basis index out of range");
  StateVector s;
  s.labels_ = iota_labels(n);
  s.amps_.assign(std::size_t{1} << n, Amplitude{});
  s.amps_[index] = 1.0;
  return s;
}

StateVector StateVector::random(std::size_t n, Rng& rng) {
  check_capacity(n);
  StateVector s;
  s.labels_ = iota_labels(n);
  s.amps_.resize(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& a : s.amps_) {
    const double re = rng.normal();
    const double im = rng.normal();
    a = {re, im};
    norm += re * re + im * im;
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& a : s.amps_) a *= scale;
  return s;
}

StateVector StateVector::from_amplitudes(std::vector<Label> labels,
                                         std::vector<Amplitude> amplitudes) {
  check_capacity(labels.size());
  if (amplitudes.size() != (std::size_t{1} << labels.size()))
    throw std::invalid_argument("amplitude count must be 2^(label count)");
  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate qubit label");
  StateVector s;
  s.labels_ = std::move(labels);
  s.amps_ = std::move(amplitudes);
  if (std::abs(s.norm_squared() - 1.0) > 1e-9)
    throw std::invalid_argument("state is not normalized");
  return s;
}

bool StateVector::contains(Label label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t StateVector::position(Label label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end())
    throw std::invalid_argument("qubit label " + std::to_string(label) +
                                " is not live");
  return static_cast<std::size_t>(it - labels_.begin());
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return total;
}

void StateVector::inject(Label label, InjectedState which) {
  if (contains(label))
    throw std::invalid_argument("qubit label " + std::to_string(label) +
                                " is already live");
  check_capacity(labels_.size() + 1);
  Amplitude one;
  switch (which) {
    case InjectedState::Y:
      one = {0.0, kInvSqrt2};
      break;
    case InjectedState::YConj:
      one = {0.0, -kInvSqrt2};
      break;
    case InjectedState::A:
      one = std::polar(kInvSqrt2, std::numbers::pi / 4);
      break;
  }
  const Amplitude zero{kInvSqrt2, 0.0};
  std::vector<Amplitude> next(amps_.size() * 2);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    next[2 * i] = amps_[i] * zero;
    next[2 * i + 1] = amps_[i] * one;
  }
  amps_ = std::move(next);
  labels_.push_back(label);
}

void StateVector::apply_cnot(Label control, Label target) {
  if (control == target)
    throw std::invalid_argument("CNOT control equals target");
  const std::uint64_t c = mask(position(control));
  const std::uint64_t t = mask(position(target));
  for (std::uint64_t i = 0; i < amps_.size(); ++i)
    if ((i & c) && !(i & t)) std::swap(amps_[i], amps_[i | t]);
}

void StateVector::apply_unitary(Label q, const Matrix2& u) {
  if (!u.is_unitary(1e-12))
    throw std::invalid_argument("matrix is not unitary");
  const std::uint64_t b = mask(position(q));
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (i & b) continue;
    const Amplitude a0 = amps_[i];
    const Amplitude a1 = amps_[i | b];
    amps_[i] = u(0, 0) * a0 + u(0, 1) * a1;
    amps_[i | b] = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

double StateVector::probability_of_one(std::size_t pos) const {
  const std::uint64_t b = mask(pos);
  double p1 = 0.0;
  for (std::uint64_t i = 0; i < amps_.size(); ++i)
    if (i & b) p1 += std::norm(amps_[i]);
  return p1;
}

void StateVector::remove(std::size_t pos, bool outcome, double probability) {
  const std::size_t k = labels_.size();
  const std::size_t low_bits = k - 1 - pos;  // bits below the removed one
  const std::uint64_t low_mask = (std::uint64_t{1} << low_bits) - 1;
  const double scale = 1.0 / std::sqrt(probability);
  std::vector<Amplitude> next(amps_.size() / 2);
  for (std::uint64_t j = 0; j < next.size(); ++j) {
    const std::uint64_t high = (j & ~low_mask) << 1;
    const std::uint64_t i =
        high | (std::uint64_t{outcome} << low_bits) | (j & low_mask);
    next[j] = amps_[i] * scale;
  }
  amps_ = std::move(next);
  labels_.erase(labels_.begin() + static_cast<std::ptrdiff_t>(pos));
}

bool StateVector::measure(Label q, Basis basis, Rng& rng) {
  const std::size_t pos = position(q);
  if (basis == Basis::X) {
    const Matrix2 h{{kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2}};
    apply_unitary(q, h);
  }
  const double p1 = std::clamp(probability_of_one(pos), 0.0, 1.0);
  const bool outcome = rng.uniform() >= 1.0 - p1;
  remove(pos, outcome, outcome ? p1 : 1.0 - p1);
  return outcome;
}

double StateVector::project(Label q, Basis basis, bool outcome) {
  const std::size_t pos = position(q);
  if (basis == Basis::X) {
    const Matrix2 h{{kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2}};
    apply_unitary(q, h);
  }
  const double p1 = probability_of_one(pos);
  const double p = outcome ? p1 : 1.0 - p1;
  if (p < 1e-12)
    throw std::domain_error("post-selected branch has zero probability");
  remove(pos, outcome, p);
  return p;
}

void StateVector::relabel(Label from, Label to) {
  if (from == to) return;
  const std::size_t pos = position(from);
  if (contains(to))
    throw std::invalid_argument("qubit label " + std::to_string(to) +
                                " is already live");
  labels_[pos] = to;
}

StateVector StateVector::reordered(std::span<const Label> order) const {
  if (order.size() != labels_.size())
    throw std::invalid_argument("reorder: label count mismatch");
  const std::size_t k = labels_.size();
  // shift[p] = bit of old position p inside the new index
  std::vector<std::size_t> old_bit(k), new_bit(k);
  for (std::size_t p = 0; p < k; ++p) {
    const std::size_t old_pos = position(order[p]);
    old_bit[p] = k - 1 - old_pos;
    new_bit[p] = k - 1 - p;
  }
  StateVector out;
  out.labels_.assign(order.begin(), order.end());
  out.amps_.assign(amps_.size(), Amplitude{});
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    std::uint64_t j = 0;
    for (std::size_t p = 0; p < k; ++p)
      j |= ((i >> old_bit[p]) & 1u) << new_bit[p];
    out.amps_[j] = amps_[i];
  }
  return out;
}

bool equal_up_to_phase(const StateVector& a, const StateVector& b,
                       double tol) {
  if (!std::equal(a.labels().begin(), a.labels().end(), b.labels().begin(),
                  b.labels().end()))
    throw std::invalid_argument("equal_up_to_phase: label lists differ");
  const auto av = a.amplitudes();
  const auto bv = b.amplitudes();
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < bv.size(); ++i)
    if (std::abs(bv[i]) > std::abs(bv[pivot])) pivot = i;
  Amplitude theta{1.0, 0.0};
  if (std::abs(bv[pivot]) > 0.0 && std::abs(av[pivot]) > 0.0) {
    theta = av[pivot] / bv[pivot];
    theta /= std::abs(theta);
  }
  for (std::size_t i = 0; i < av.size(); ++i)
    if (std::abs(av[i] - theta * bv[i]) > tol) return false;
  return true;
}

namespace {

double canonical(double x) {
  // Values that print as zero must not print as "-0.000000000000".
  return std::abs(x) < 5e-13 ? 0.0 : x;
}

}  // namespace

std::string format_state(const StateVector& state) {
  std::string out;
  char buf[96];
  for (const auto& a : state.amplitudes()) {
    std::snprintf(buf, sizeof buf, "%.12f %.12f\n", canonical(a.real()),
                  canonical(a.imag()));
    out += buf;
  }
  return out;
}

StateVector parse_state(std::string_view text) {
  std::vector<Amplitude> amps;
  std::size_t line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    const auto tokens = detail::tokenize(detail::strip_comment(line));
    if (tokens.empty()) continue;
    if (tokens.size() != 2) throw ParseError(line_no, "expected 're im'");
    double parts[2];
    for (int i = 0; i < 2; ++i) {
      std::string tok(tokens[i]);
      char* end = nullptr;
      parts[i] = std::strtod(tok.c_str(), &end);
      if (end != tok.c_str() + tok.size())
        throw ParseError(line_no, "bad number '" + tok + "'");
    }
    amps.emplace_back(parts[0], parts[1]);
  }
  std::size_t n = 0;
  while ((std::size_t{1} << n) < amps.size()) ++n;
  if (amps.empty() || (std::size_t{1} << n) != amps.size())
    throw ParseError(line_no, "amplitude count must be a power of two");
  double norm = 0.0;
  for (const auto& a : amps) norm += std::norm(a);
  if (std::abs(norm - 1.0) > 1e-6)
    throw ParseError(line_no, "state is not normalized");
  for (auto& a : amps) a /= std::sqrt(norm);
  return StateVector::from_amplitudes(iota_labels(n), std::move(amps));
}

}  // namespace ptrack
