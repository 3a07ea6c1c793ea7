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

#include "ptrack/generate.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ptrack/random.hpp"

namespace ptrack {

GateWeights GateWeights::parse(std::string_view text) {
  std::array<double, 4> w{};
  std::size_t i = 0;
  std::string item;
  auto flush = [&] {
    if (i >= w.size())
      throw std::invalid_argument("weights: expected 4 comma-separated values");
    std::size_t used = 0;
    try {
      w[i] = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw std::invalid_argument("weights: bad number '" + item + "'");
    ++i;
    item.clear();
  };
  for (char ch : text) {
    if (ch == ',')
      flush();
    else if (ch != ' ')
      item.push_back(ch);
  }
  flush();
  if (i != w.size())
    throw std::invalid_argument("weights: expected 4 comma-separated values");
  return {w[0], w[1], w[2], w[3]};
}

namespace {

template <std::size_t N>
void check_weights(const std::array<double, N>& w) {
  double total = 0.0;
  for (double x : w) {
    if (!(x >= 0.0) || !std::isfinite(x))
      throw std::invalid_argument("gate weights must be finite and >= 0");
    total += x;
  }
  if (!(total > 0.0))
    throw std::invalid_argument("gate weights must not all be zero");
}

template <std::size_t N>
std::size_t pick(Rng& rng, const std::array<double, N>& w) {
  double total = 0.0;
  for (double x : w) total += x;
  const double u = rng.uniform() * total;
  double acc = 0.0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < N; ++i) {
    if (w[i] <= 0.0) continue;
    last = i;
    acc += w[i];
    if (u < acc) return i;
  }
  return last;
}

template <std::size_t N>
Circuit generate(std::size_t n, std::size_t m, std::uint64_t seed,
                 const std::array<double, N>& w,
                 const std::array<GateKind, N>& kinds, GateSet gate_set) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  check_weights(w);
  if (n == 1 && w[0] > 0.0)
    throw std::invalid_argument(
        "CNOT needs two qubits; use n >= 2 or a zero CNOT weight");

  Rng rng(seed);
  Circuit c(n, gate_set);
  c.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const GateKind kind = kinds[pick(rng, w)];
    if (kind == GateKind::CNOT) {
      const auto ctrl = static_cast<Qubit>(rng.below(n));
      auto tgt = static_cast<Qubit>(rng.below(n - 1));
      if (tgt >= ctrl) ++tgt;
      c.append(Gate::cnot(ctrl, tgt));
    } else {
      c.append(Gate::single(kind, static_cast<Qubit>(rng.below(n))));
    }
  }
  return c;
}

}  // namespace

Circuit random_circuit(std::size_t n, std::size_t m, std::uint64_t seed,
                       const GateWeights& weights) {
  return generate<4>(
      n, m, seed, {weights.cnot, weights.rx4, weights.rz4, weights.rz8},
      {GateKind::CNOT, GateKind::RX4, GateKind::RZ4, GateKind::RZ8},
      GateSet::Teleportation);
}

Circuit random_clifford_t_circuit(std::size_t n, std::size_t m,
                                  std::uint64_t seed,
                                  const CliffordTWeights& weights) {
  return generate<4>(n, m, seed,
                     {weights.cnot, weights.h, weights.p, weights.t},
                     {GateKind::CNOT, GateKind::H, GateKind::P, GateKind::T},
                     GateSet::CliffordT);
}

}  // namespace ptrack
