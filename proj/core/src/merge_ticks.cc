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

#include <algorithm>
#include <map>

#include "chartgen/operators.h"

namespace chartgen {
namespace {

// Separation between two boxes along whichever axis separates them; negative
// when they overlap.
double Gap(const Rect& a, const Rect& b) {
  return std::max({b.Left() - a.Right(), a.Left() - b.Right(), b.Top() - a.Bottom(),
                   a.Top() - b.Bottom()});
}

// Visible tick labels of one axis keyed by tick index.
std::map<int, const Element*> VisibleLabels(const std::vector<Element>& elements,
                                            AxisId axis) {
  std::map<int, const Element*> out;
  for (const Element& e : elements) {
    if (e.visible && e.layer == LayerKind::kTickLabel && e.axis == axis) {
      out[e.tick_index] = &e;
    }
  }
  return out;
}

bool HasCrowdedPair(const std::map<int, const Element*>& labels, double gap_min) {
  const Element* prev = nullptr;
  for (const auto& [index, e] : labels) {
    if (prev != nullptr && Gap(prev->bbox, e->bbox) < gap_min) return true;
    prev = e;
  }
  return false;
}

// Tick indices kept at `stride`: every stride-th from the first plus the last.
// When the last crowds the kept tick before it, that one goes instead (unless
// it is the first tick).
std::vector<bool> KeptAtStride(const std::vector<Element>& elements, AxisId axis,
                               int tick_count, int stride, double gap_min) {
  std::vector<bool> keep(static_cast<size_t>(tick_count), false);
  for (int i = 0; i < tick_count; i += stride) keep[static_cast<size_t>(i)] = true;
  const int last = tick_count - 1;
  keep[static_cast<size_t>(last)] = true;
  const int prev = last % stride == 0 ? last - stride : last - last % stride;
  if (prev > 0) {
    const Element* a = nullptr;
    const Element* b = nullptr;
    for (const Element& e : elements) {
      if (e.layer != LayerKind::kTickLabel || e.axis != axis) continue;
      if (e.tick_index == prev) a = &e;
      if (e.tick_index == last) b = &e;
    }
    if (a != nullptr && b != nullptr && Gap(a->bbox, b->bbox) < gap_min) {
      keep[static_cast<size_t>(prev)] = false;
    }
  }
  return keep;
}

}  // namespace

MergeResult MergeTicks(std::vector<Element> elements, AxisId axis,
                       const TickSet& ticks, int stride, double gap_min,
                       const OperatorContext& ctx) {
  MergeResult result;
  result.stride = std::max(1, stride);
  const int tick_count = static_cast<int>(ticks.ticks.size());
  if (tick_count < 2 || !HasCrowdedPair(VisibleLabels(elements, axis), gap_min)) {
    result.elements = std::move(elements);
    return result;
  }

  const ClutterMeasure before = MeasureClutter(elements, ctx);
  const int stride_before = result.stride;
  std::vector<int> hidden;
  while (HasCrowdedPair(VisibleLabels(elements, axis), gap_min) &&
         result.stride < tick_count - 1) {
    result.stride *= 2;
    const std::vector<bool> keep =
        KeptAtStride(elements, axis, tick_count, result.stride, gap_min);
    for (Element& e : elements) {
      if (!e.visible || e.axis != axis || e.tick_index < 0) continue;
      if (e.layer != LayerKind::kTickLabel && e.layer != LayerKind::kTickMark &&
          e.layer != LayerKind::kGridline) {
        continue;
      }
      if (keep[static_cast<size_t>(e.tick_index)]) continue;
      e.visible = false;
      hidden.push_back(e.id);
    }
  }
  std::sort(hidden.begin(), hidden.end());

  OperatorLogEntry entry;
  entry.kind = OperatorKind::kMergeTicks;
  entry.element_ids = std::move(hidden);
  const double step = ticks.interval.step;
  entry.params = {{"axis", std::string(axis == AxisId::kX ? "x" : "y")},
                  {"unit", ticks.interval.unit},
                  {"stepBefore", step * stride_before},
                  {"stepAfter", step * result.stride},
                  {"strideBefore", static_cast<double>(stride_before)},
                  {"stride", static_cast<double>(result.stride)}};
  const ClutterMeasure after = MeasureClutter(elements, ctx);
  entry.delta = {before.collision_area, after.collision_area,
                 before.congested_cells, after.congested_cells};
  result.log = std::move(entry);
  result.elements = std::move(elements);
  return result;
}

}  // namespace chartgen
