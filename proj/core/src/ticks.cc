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

#include "chartgen/ticks.h"

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

namespace chartgen {
namespace {

namespace chr = std::chrono;

constexpr int64_t kSecondsPerDay = 86400;
constexpr size_t kMaxTicks = 100000;

std::string FormatFixed(double value, int decimals) {
  std::array<char, 64> buf;
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                           std::chars_format::fixed, decimals);
  std::string out(buf.data(), res.ptr);
  if (out == "-0" || out.rfind("-0.", 0) == 0) {
    // Avoid "-0" / "-0.0" labels produced by tiny negative products.
    bool all_zero = out.find_first_not_of("-0.") == std::string::npos;
    if (all_zero) out.erase(0, 1);
  }
  return out;
}

chr::year_month_day ToDate(int64_t epoch_seconds) {
  auto days = chr::floor<chr::days>(chr::sys_seconds{chr::seconds{epoch_seconds}});
  return chr::year_month_day{days};
}

double ToEpoch(chr::year_month_day ymd) {
  return static_cast<double>(
      chr::sys_days{ymd}.time_since_epoch() / chr::seconds{1});
}

std::string Pad2(unsigned v) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%02u", v);
  return buf;
}

std::string YearText(chr::year_month_day d) {
  return std::to_string(static_cast<int>(d.year()));
}

enum class TimeUnit { kHour, kDay, kMonth, kYear };

struct TimeStep {
  TimeUnit unit;
  int step;
};

constexpr std::array<TimeStep, 16> kTimeLadder = {{
    {TimeUnit::kHour, 1},   {TimeUnit::kHour, 6},   {TimeUnit::kHour, 12},
    {TimeUnit::kDay, 1},    {TimeUnit::kDay, 2},    {TimeUnit::kDay, 7},
    {TimeUnit::kMonth, 1},  {TimeUnit::kMonth, 3},  {TimeUnit::kMonth, 6},
    {TimeUnit::kYear, 1},   {TimeUnit::kYear, 2},   {TimeUnit::kYear, 5},
    {TimeUnit::kYear, 10},  {TimeUnit::kYear, 25},  {TimeUnit::kYear, 50},
    {TimeUnit::kYear, 100},
}};

std::string UnitName(TimeUnit unit) {
  switch (unit) {
    case TimeUnit::kHour: return "hour";
    case TimeUnit::kDay: return "day";
    case TimeUnit::kMonth: return "month";
    case TimeUnit::kYear: return "year";
  }
  return "?";
}

// Generates ticks for one ladder rung; stops once `limit` is exceeded.
std::vector<Tick> TimeTicksFor(TimeStep ts, double lo, double hi, size_t limit) {
  std::vector<Tick> out;
  switch (ts.unit) {
    case TimeUnit::kHour:
    case TimeUnit::kDay: {
      const int64_t period =
          (ts.unit == TimeUnit::kHour ? 3600 : kSecondsPerDay) * ts.step;
      for (int64_t k = static_cast<int64_t>(std::ceil(lo / period));
           static_cast<double>(k * period) <= hi && out.size() <= limit; ++k) {
        const int64_t t = k * period;
        auto d = ToDate(t);
        std::string label = YearText(d) + "-" +
                            Pad2(static_cast<unsigned>(d.month())) + "-" +
                            Pad2(static_cast<unsigned>(d.day()));
        if (ts.unit == TimeUnit::kHour) {
          const int64_t hour = ((t % kSecondsPerDay) + kSecondsPerDay) %
                               kSecondsPerDay / 3600;
          label = Pad2(static_cast<unsigned>(hour)) + ":00";
        }
        out.push_back({static_cast<double>(t), std::move(label)});
      }
      break;
    }
    case TimeUnit::kMonth: {
      auto start = ToDate(static_cast<int64_t>(std::floor(lo)));
      int index = static_cast<int>(start.year()) * 12 +
                  static_cast<int>(static_cast<unsigned>(start.month())) - 1;
      for (; out.size() <= limit; ++index) {
        if (index % ts.step != 0) continue;
        chr::year_month_day ymd{chr::year{index / 12},
                                chr::month{static_cast<unsigned>(index % 12 + 1)},
                                chr::day{1}};
        double t = ToEpoch(ymd);
        if (t < lo) continue;
        if (t > hi) break;
        out.push_back({t, YearText(ymd) + "-" +
                              Pad2(static_cast<unsigned>(ymd.month()))});
      }
      break;
    }
    case TimeUnit::kYear: {
      int year = static_cast<int>(ToDate(static_cast<int64_t>(std::floor(lo))).year());
      for (; out.size() <= limit; ++year) {
        if (year % ts.step != 0) continue;
        chr::year_month_day ymd{chr::year{year}, chr::January, chr::day{1}};
        double t = ToEpoch(ymd);
        if (t < lo) continue;
        if (t > hi) break;
        out.push_back({t, std::to_string(year)});
      }
      break;
    }
  }
  return out;
}

}  // namespace

std::string FormatNumber(double value) {
  if (value == 0) return "0";
  std::array<char, 64> buf;
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

TickSet LinearTicks(double lo, double hi, int desired_count) {
  TickSet set;
  if (!(hi > lo) || desired_count < 1) {
    set.ticks.push_back({lo, FormatNumber(lo)});
    set.interval = {"linear", 0};
    return set;
  }
  const double raw = (hi - lo) / desired_count;
  const int power = static_cast<int>(std::floor(std::log10(raw)));
  const double error = raw / std::pow(10.0, power);
  int factor = 1;
  if (error >= std::sqrt(50.0)) {
    factor = 10;
  } else if (error >= std::sqrt(10.0)) {
    factor = 5;
  } else if (error >= std::sqrt(2.0)) {
    factor = 2;
  }
  // Negative powers divide by an exact integer to keep 0.1-style steps clean.
  const bool inverse = power < 0;
  const double step = factor * std::pow(10.0, power);
  const double inv = inverse ? std::pow(10.0, -power) / factor : 0;
  const double i0 = inverse ? std::ceil(lo * inv) : std::ceil(lo / step);
  const double i1 = inverse ? std::floor(hi * inv) : std::floor(hi / step);
  const int decimals = std::max(0, -power + (factor == 10 ? -1 : 0));
  for (double i = i0; i <= i1 && set.ticks.size() < kMaxTicks; i += 1) {
    double v = inverse ? i / inv : i * step;
    set.ticks.push_back({v, FormatFixed(v, decimals)});
  }
  set.interval = {"linear", step};
  return set;
}

TickSet TimeTicks(double lo, double hi, int desired_count) {
  const size_t limit = static_cast<size_t>(std::max(desired_count, 1));
  TickSet set;
  for (const TimeStep& ts : kTimeLadder) {
    auto ticks = TimeTicksFor(ts, lo, hi, limit);
    set.ticks = std::move(ticks);
    set.interval = {UnitName(ts.unit), static_cast<double>(ts.step)};
    if (set.ticks.size() <= limit && !set.ticks.empty()) return set;
  }
  if (set.ticks.size() > limit) set.ticks.resize(limit);
  if (set.ticks.empty()) set.ticks.push_back({lo, FormatNumber(lo)});
  return set;
}

TickSet MakeTicks(const AxisSpec& axis, double lo, double hi) {
  return axis.type == AxisType::kTime ? TimeTicks(lo, hi, axis.tick_count)
                                      : LinearTicks(lo, hi, axis.tick_count);
}

}  // namespace chartgen
