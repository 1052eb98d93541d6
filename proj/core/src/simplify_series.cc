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

#include "chartgen/chart_model.h"
#include "chartgen/operators.h"
#include "chartgen/simplify.h"

namespace chartgen {

SimplifyResult SimplifySeries(std::vector<Element> elements,
                              const OperatorContext& ctx, double retention) {
  SimplifyResult result;
  const size_t count = elements.size();
  for (size_t i = 0; i < count; ++i) {
    Element& line = elements[i];
    if (line.layer != LayerKind::kDataLine || !line.visible) continue;
    // A line already reduced by an earlier pass is left alone.
    if (line.vertices.size() != line.data_vertices.size()) continue;
    if (line.vertices.size() <= 2) continue;

    const std::vector<FeatureKind> kinds =
        ClassifyFeaturePoints(Series{{}, line.data_vertices});
    const double epsilon =
        FeaturePreservingEpsilon(line.vertices, kinds, ctx.target, retention);
    if (epsilon <= 0) continue;
    const std::vector<size_t> kept = SimplifyLineIndices(line.vertices, epsilon);
    if (kept.size() == line.vertices.size()) continue;

    OperatorLogEntry entry;
    entry.kind = OperatorKind::kSimplify;
    entry.element_ids.push_back(line.id);
    const size_t points_before = line.vertices.size();
    std::vector<Point> reduced;
    for (size_t k : kept) reduced.push_back(line.vertices[k]);
    line.vertices = std::move(reduced);
    Rect hull{line.vertices.front().x, line.vertices.front().y, 0, 0};
    for (const Point& v : line.vertices) hull = Union(hull, {v.x, v.y, 0, 0});
    line.bbox = hull;

    entry.params = {{"series", static_cast<double>(line.series)},
                    {"epsilon", epsilon},
                    {"retention", retention},
                    {"pointsBefore", static_cast<double>(points_before)},
                    {"pointsAfter", static_cast<double>(kept.size())}};
    // Only the polyline changes; markers and labels keep their state.
    const ClutterMeasure clutter = MeasureClutter(elements, ctx);
    entry.delta = {clutter.collision_area, clutter.collision_area,
                   clutter.congested_cells, clutter.congested_cells};
    result.log.push_back(std::move(entry));
  }
  result.elements = std::move(elements);
  return result;
}

}  // namespace chartgen
