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

#include "ptrack/record_io.hpp"

#include "ptrack/errors.hpp"
#include "text_util.hpp"

namespace ptrack {

namespace {

struct Token {
  Basis basis;
  bool bit;
};

std::optional<Token> parse_token(std::string_view t) {
  if (t == "X+") return Token{Basis::X, false};
  if (t == "X-") return Token{Basis::X, true};
  if (t == "Z0") return Token{Basis::Z, false};
  if (t == "Z1") return Token{Basis::Z, true};
  return std::nullopt;
}

std::string_view token_text(Basis basis, bool bit) {
  if (basis == Basis::X) return bit ? "X-" : "X+";
  return bit ? "Z1" : "Z0";
}

}  // namespace

std::string format_outcome(const Outcome& outcome) {
  std::string s(token_text(outcome.basis, outcome.first));
  if (outcome.second) {
    s += ' ';
    s += token_text(Basis::Z, *outcome.second);
  }
  return s;
}

MeasurementRecord parse_record(std::string_view text) {
  MeasurementRecord record;
  std::size_t line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    const auto tokens = detail::tokenize(detail::strip_comment(line));
    if (tokens.empty()) continue;
    if (tokens.size() > 2)
      throw ParseError(line_no, "expected one or two outcome tokens");
    auto first = parse_token(tokens[0]);
    if (!first)
      throw ParseError(line_no,
                       "unknown outcome '" + std::string(tokens[0]) + "'");
    Outcome o{first->basis, first->bit, {}};
    if (tokens.size() == 2) {
      auto second = parse_token(tokens[1]);
      if (!second || second->basis != Basis::Z || first->basis != Basis::Z)
        throw ParseError(line_no,
                         "a second-stage outcome must be 'Z<b> Z<b>'");
      o.second = second->bit;
    }
    record.entries.push_back(o);
  }
  return record;
}

std::string serialize_record(const MeasurementRecord& record) {
  std::string out;
  for (const Outcome& o : record.entries) {
    out += format_outcome(o);
    out += '\n';
  }
  return out;
}

CorrectionFrame parse_frame(std::string_view text) {
  std::vector<PauliStatus> statuses;
  std::size_t line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    const auto tokens = detail::tokenize(detail::strip_comment(line));
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw ParseError(line_no, "expected '<index> <status>'");
    auto index = detail::parse_uint(tokens[0]);
    if (!index || *index != statuses.size())
      throw ParseError(line_no, "qubit indices must run 0, 1, 2, ...");
    auto status = parse_status(tokens[1]);
    if (!status)
      throw ParseError(line_no,
                       "unknown status '" + std::string(tokens[1]) + "'");
    statuses.push_back(*status);
  }
  CorrectionFrame frame(statuses.size());
  for (std::size_t k = 0; k < statuses.size(); ++k) frame[k] = statuses[k];
  return frame;
}

std::string serialize_frame(const CorrectionFrame& frame) {
  std::string out;
  for (std::size_t k = 0; k < frame.size(); ++k) {
    out += std::to_string(k);
    out += ' ';
    out += to_string(frame[k]);
    out += '\n';
  }
  return out;
}

}  // namespace ptrack
