// Copyright 2026 The Chartgen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHARTGEN_TICKS_H_
#define CHARTGEN_TICKS_H_

#include <string>
#include <vector>

#include "chartgen/chart_spec.h"

namespace chartgen {

// Spacing between consecutive ticks, e.g. {"year", 1} or {"linear", 0.5}.
struct TickInterval {
  std::string unit;
  double step = 0;

  friend bool operator==(const TickInterval&, const TickInterval&) = default;
};

struct Tick {
  double value = 0;
  std::string label;
};

struct TickSet {
  std::vector<Tick> ticks;
  TickInterval interval;
};

// Ticks at multiples of a 1/2/5 x 10^k step inside [lo, hi].
TickSet LinearTicks(double lo, double hi, int desired_count);

// Calendar ticks for Unix-epoch-seconds domains: the smallest interval from
// a fixed ladder (days, weeks, months, years) producing at most
// `desired_count` ticks.
TickSet TimeTicks(double lo, double hi, int desired_count);

TickSet MakeTicks(const AxisSpec& axis, double lo, double hi);

// Shortest decimal text that parses back to exactly `value`.
std::string FormatNumber(double value);

}  // namespace chartgen

#endif  // CHARTGEN_TICKS_H_
