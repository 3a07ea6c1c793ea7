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

#include "ptrack/oracle.hpp"

#include <array>
#include <cmath>
#include <future>
#include <map>
#include <sstream>
#include <tuple>

#include "ptrack/errors.hpp"
#include "ptrack/executor.hpp"
#include "ptrack/gadgets.hpp"
#include "ptrack/random.hpp"
#include "ptrack/record_io.hpp"
#include "ptrack/state_vector.hpp"

namespace ptrack {

namespace {

constexpr double kTol = 1e-9;

// --- CNOT ------------------------------------------------------------------

template <class T>
using Mat4 = std::array<std::array<T, 4>, 4>;

template <class T>
Mat4<T> mul(const Mat4<T>& a, const Mat4<T>& b) {
  Mat4<T> r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

template <class T>
Mat4<T> cnot_matrix() {
  Mat4<T> c{};
  c[0][0] = 1;
  c[1][1] = 1;
  c[2][3] = 1;
  c[3][2] = 1;
  return c;
}

// Control is the high bit, as in the textbook CNOT(c=1, t=2) matrix.
Mat4<Amplitude> kron(const Matrix2& a, const Matrix2& b) {
  Mat4<Amplitude> r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          r[2 * i + k][2 * j + l] = a(i, j) * b(k, l);
  return r;
}

bool same_up_to_phase(const Mat4<Amplitude>& a, const Mat4<Amplitude>& b) {
  int pi = 0, pj = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (std::abs(b[i][j]) > std::abs(b[pi][pj])) pi = i, pj = j;
  if (std::abs(a[pi][pj]) < kTol) return false;
  Amplitude theta = a[pi][pj] / b[pi][pj];
  if (std::abs(std::abs(theta) - 1.0) > kTol) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (std::abs(a[i][j] - theta * b[i][j]) > kTol) return false;
  return true;
}

// --- rotations -------------------------------------------------------------

constexpr Label kData = 0;
constexpr Label kRef = 1;
constexpr Label kStage1 = 100;
constexpr Label kStage2 = 101;

struct Probes {
  StateVector product;
  StateVector entangled;
};

Probes make_probes(std::uint64_t seed) {
  Rng rng(seed);
  Probes p{StateVector::random(1, rng), {}};
  const double r = 0.70710678118654752440;
  p.entangled = StateVector::from_amplitudes({kRef, kData}, {r, 0.0, 0.0, r});
  return p;
}

// Statuses s with `result` = M(s) R(kind) |probe> on label `out`.
std::vector<PauliStatus> explaining_statuses(const StateVector& result,
                                             const StateVector& probe,
                                             GateKind kind, Label out) {
  StateVector ideal = probe;
  ideal.apply_unitary(kData, gate_matrix(kind));
  ideal.relabel(kData, out);
  const StateVector got = result.reordered(ideal.labels());
  std::vector<PauliStatus> found;
  for (PauliStatus s : kAllStatuses) {
    StateVector candidate = ideal;
    candidate.apply_unitary(out, matrix_of(s));
    if (equal_up_to_phase(got, candidate, kTol)) found.push_back(s);
  }
  return found;
}

auto forced(bool bit) {
  return [bit](StateVector& s, Label q, Basis b) {
    s.project(q, b, bit);
    return bit;
  };
}

// Runs the uncorrected gadget on M(s_in)|probe> with forced outcomes and
// returns the explaining statuses. For RZ8 without `second`, only the first
// stage runs.
std::vector<PauliStatus> run_forced(GateKind kind, PauliStatus s_in,
                                    bool first, std::optional<bool> second,
                                    const StateVector& probe) {
  StateVector state = probe;
  state.apply_unitary(kData, matrix_of(s_in));
  try {
    teleport_stage(state, kind, kData, kStage1, forced(first));
    if (!second) return explaining_statuses(state, probe, kind, kStage1);
    teleport_stage(state, GateKind::RZ4, kStage1, kStage2, forced(*second));
  } catch (const std::domain_error& e) {
    throw OracleDefect(std::string("branch unreachable: ") + e.what());
  }
  return explaining_statuses(state, probe, kind, kStage2);
}

std::string row_name(GateKind kind, PauliStatus s_in, const Outcome& o) {
  return std::string(mnemonic(kind)) + " " + std::string(to_string(s_in)) +
         " " + format_outcome(o);
}

using RowKey = std::tuple<int, int, int, int>;

RowKey key_of(const TauRow& r) {
  return {static_cast<int>(r.kind), static_cast<int>(r.s_in),
          r.outcome.first ? 1 : 0,
          r.outcome.second ? (*r.outcome.second ? 1 : 0) : -1};
}

}  // namespace

std::vector<CnotTauEntry> derive_tau_cnot_table() {
  const auto cnot = cnot_matrix<Amplitude>();
  std::vector<CnotTauEntry> table;
  for (PauliStatus c : kAllStatuses) {
    for (PauliStatus t : kAllStatuses) {
      const auto lhs = mul(cnot, kron(matrix_of(c), matrix_of(t)));
      std::vector<CnotTauEntry> hits;
      for (PauliStatus c2 : kAllStatuses)
        for (PauliStatus t2 : kAllStatuses)
          if (same_up_to_phase(lhs,
                               mul(kron(matrix_of(c2), matrix_of(t2)), cnot)))
            hits.push_back({c, t, c2, t2});
      if (hits.size() != 1)
        throw OracleDefect("CNOT rule for (" + std::string(to_string(c)) +
                           ", " + std::string(to_string(t)) + ") has " +
                           std::to_string(hits.size()) + " solutions");
      table.push_back(hits.front());
    }
  }
  return table;
}

bool cnot_x_spread_identity_holds() {
  const auto cnot = cnot_matrix<int>();
  Mat4<int> x1{};  // X (x) I
  x1[0][2] = x1[1][3] = x1[2][0] = x1[3][1] = 1;
  Mat4<int> x2{};  // I (x) X
  x2[0][1] = x2[1][0] = x2[2][3] = x2[3][2] = 1;
  return mul(cnot, x1) == mul(mul(x1, x2), cnot);
}

PauliStatus derive_tau_rotation(GateKind kind, PauliStatus s_in,
                                const Outcome& outcome, std::uint64_t seed) {
  if (!is_rotation(kind))
    throw OracleDefect("not a rotational gate: " +
                       std::string(mnemonic(kind)));
  const Basis expected = kind == GateKind::RX4 ? Basis::X : Basis::Z;
  if (outcome.basis != expected ||
      (outcome.second && kind != GateKind::RZ8))
    throw OracleDefect("outcome shape does not fit " +
                       row_name(kind, s_in, outcome));

  const Probes probes = make_probes(seed);
  std::optional<PauliStatus> answer;
  for (const StateVector* probe : {&probes.product, &probes.entangled}) {
    if (kind == GateKind::RZ8) {
      const auto after_first =
          run_forced(kind, s_in, outcome.first, std::nullopt, *probe);
      if (outcome.second && !after_first.empty())
        throw OracleDefect("branch unreachable: first stage already enacts "
                           "T for " +
                           row_name(kind, s_in, outcome));
      if (!outcome.second && after_first.empty())
        throw OracleDefect("branch unreachable: second stage required for " +
                           row_name(kind, s_in, outcome));
    }
    const auto found =
        run_forced(kind, s_in, outcome.first, outcome.second, *probe);
    if (found.size() != 1)
      throw OracleDefect(std::to_string(found.size()) +
                         " statuses explain " + row_name(kind, s_in, outcome));
    if (answer && *answer != found.front())
      throw OracleDefect("product and entangled probes disagree on " +
                         row_name(kind, s_in, outcome));
    answer = found.front();
  }
  return *answer;
}

RotationTauDerivation derive_tau_rotation_table(std::uint64_t seed) {
  // Enumerate reachable outcome shapes; RZ8 reachability is decided by the
  // simulator, on the entangled probe.
  const Probes probes = make_probes(seed);
  std::vector<TauRow> rows;
  for (GateKind kind : {GateKind::RX4, GateKind::RZ4, GateKind::RZ8}) {
    const Basis basis = kind == GateKind::RX4 ? Basis::X : Basis::Z;
    for (PauliStatus s : kAllStatuses) {
      for (bool b1 : {false, true}) {
        const bool two_stage =
            kind == GateKind::RZ8 &&
            run_forced(kind, s, b1, std::nullopt, probes.entangled).empty();
        if (two_stage) {
          rows.push_back({kind, s, Outcome{basis, b1, false}, s});
          rows.push_back({kind, s, Outcome{basis, b1, true}, s});
        } else {
          rows.push_back({kind, s, Outcome{basis, b1, {}}, s});
        }
      }
    }
  }

  std::vector<std::future<PauliStatus>> jobs;
  jobs.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const TauRow row = rows[i];
    const std::uint64_t row_seed = derive_seed(seed, i);
    jobs.push_back(std::async(std::launch::async, [row, row_seed] {
      return derive_tau_rotation(row.kind, row.s_in, row.outcome, row_seed);
    }));
  }
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].s_out = jobs[i].get();

  std::map<RowKey, std::pair<std::optional<PauliStatus>,
                             std::optional<PauliStatus>>>
      merged;
  std::map<RowKey, TauRow> shape;
  for (const TauRow& r : published_rotation_table()) {
    merged[key_of(r)].first = r.s_out;
    shape.emplace(key_of(r), r);
  }
  for (const TauRow& r : rows) {
    merged[key_of(r)].second = r.s_out;
    shape.emplace(key_of(r), r);
  }

  RotationTauDerivation out;
  out.rows = std::move(rows);
  for (const auto& [key, values] : merged) {
    if (values.first == values.second) continue;
    const TauRow& r = shape.at(key);
    out.diff.push_back({r.kind, r.s_in, r.outcome, values.first,
                        values.second});
  }
  return out;
}

std::vector<TauRow> published_rotation_table() {
  using S = PauliStatus;
  const auto x = [](bool b) { return Outcome::x(b); };
  const auto z = [](bool b) { return Outcome::z(b); };
  const auto zz = [](bool a, bool b) { return Outcome::z(a, b); };
  constexpr auto RX4 = GateKind::RX4;
  constexpr auto RZ4 = GateKind::RZ4;
  constexpr auto RZ8 = GateKind::RZ8;
  return {
      {RX4, S::I, x(false), S::I},    {RX4, S::I, x(true), S::X},
      {RX4, S::X, x(false), S::X},    {RX4, S::X, x(true), S::Z},
      {RX4, S::Z, x(false), S::X},    {RX4, S::Z, x(true), S::I},
      {RX4, S::XZ, x(false), S::I},   {RX4, S::XZ, x(true), S::Z},

      {RZ4, S::I, z(false), S::I},    {RZ4, S::I, z(true), S::XZ},
      {RZ4, S::X, z(false), S::XZ},   {RZ4, S::X, z(true), S::I},
      {RZ4, S::Z, z(false), S::Z},    {RZ4, S::Z, z(true), S::X},
      {RZ4, S::XZ, z(false), S::X},   {RZ4, S::XZ, z(true), S::X},

      {RZ8, S::I, z(false), S::I},
      {RZ8, S::I, zz(true, false), S::XZ},
      {RZ8, S::I, zz(true, true), S::I},
      {RZ8, S::X, zz(false, false), S::XZ},
      {RZ8, S::X, zz(false, true), S::I},
      {RZ8, S::X, z(true), S::I},
      {RZ8, S::Z, z(false), S::Z},
      {RZ8, S::Z, zz(true, false), S::X},
      {RZ8, S::Z, zz(true, true), S::Z},
      {RZ8, S::XZ, zz(false, false), S::X},
      {RZ8, S::XZ, zz(false, true), S::Z},
      {RZ8, S::XZ, zz(true, false), S::X},
      {RZ8, S::XZ, zz(true, true), S::Z},
  };
}

std::string format_tau_diff(const std::vector<TauDiffRow>& diff) {
  std::ostringstream out;
  out << "# kind s_in outcome published certified\n";
  for (const TauDiffRow& d : diff) {
    std::string outcome = format_outcome(d.outcome);
    for (auto& ch : outcome)
      if (ch == ' ') ch = ',';
    out << mnemonic(d.kind) << ' ' << to_string(d.s_in) << ' ' << outcome
        << ' ' << (d.published ? to_string(*d.published) : "-") << ' '
        << (d.certified ? to_string(*d.certified) : "-") << '\n';
  }
  return out.str();
}

}  // namespace ptrack
