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

// Text formats for measurement records and correction frames.
//
// Record: one line per rotational gate in circuit order.
//   X+ | X-            RX4 (|+> / |->)
//   Z0 | Z1            RZ4, or RZ8 without a second stage
//   Z<b> Z<b>          RZ8 whose second stage ran (first, second)
// Blank lines and '#' comments are ignored.
//
// Frame: one line per qubit, "<index> <I|X|Z|XZ>".

#pragma once

#include <string>
#include <string_view>

#include "ptrack/tracker.hpp"

namespace ptrack {

std::string format_outcome(const Outcome& outcome);

MeasurementRecord parse_record(std::string_view text);
std::string serialize_record(const MeasurementRecord& record);

CorrectionFrame parse_frame(std::string_view text);
std::string serialize_frame(const CorrectionFrame& frame);

}  // namespace ptrack
