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

#include "chartgen/metrics.h"

#include <algorithm>
#include <tuple>

namespace chartgen {
namespace {

bool IsOverlapChecked(LayerKind layer) {
  return IsConflictLabelLayer(layer) || layer == LayerKind::kDataPoint;
}

}  // namespace

std::vector<PairDistance> LayerDistances(std::span<const Element> elements,
                                         LayerKind layer) {
  std::vector<const Element*> members;
  for (const Element& e : elements) {
    if (e.visible && e.layer == layer) members.push_back(&e);
  }
  std::sort(members.begin(), members.end(),
            [](const Element* a, const Element* b) { return a->id < b->id; });
  std::vector<PairDistance> out;
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = i + 1; j < members.size(); ++j) {
      out.push_back({members[i]->id, members[j]->id,
                     Distance(members[i]->bbox.Center(), members[j]->bbox.Center())});
    }
  }
  return out;
}

double TotalCollisionArea(std::span<const Rect> boxes, QuadtreeParams params) {
  std::vector<Quadtree::Item> items;
  items.reserve(boxes.size());
  for (size_t i = 0; i < boxes.size(); ++i) {
    items.push_back({static_cast<int>(i), boxes[i]});
  }
  Quadtree tree = Quadtree::Build(items, params);
  double total = 0;
  for (size_t i = 0; i < boxes.size(); ++i) {
    // Ascending candidate order matches the plain i/j loop term for term.
    for (int j : tree.Query(boxes[i])) {
      if (static_cast<size_t>(j) == i) continue;
      total += OverlapArea(boxes[i], boxes[j]);
    }
  }
  return total;
}

double TotalCollisionArea(std::span<const Element> elements,
                          QuadtreeParams params) {
  std::vector<Rect> boxes;
  for (const Element& e : elements) {
    if (e.visible && IsOverlapChecked(e.layer)) boxes.push_back(e.bbox);
  }
  return TotalCollisionArea(boxes, params);
}

double AreaRatio(const Element& e, Size target) {
  return e.bbox.Area() / target.Area();
}

double MinProminentAreaRatio(const Element& e, Size target,
                             const TextMetrics& text_model,
                             const ConstraintThresholds& thresholds) {
  if (!IsTextLayer(e.layer) || e.text.empty()) return 0;
  TextMetrics floor = text_model.WithFontSize(thresholds.min_font_px);
  Rect box{0, 0, floor.Width(e.text), floor.LineHeight()};
  return box.Area() / target.Area();
}

std::vector<ConflictViolation> FindConflicts(std::span<const Element> elements,
                                             QuadtreeParams params) {
  std::vector<Quadtree::Item> items;
  std::vector<const Element*> by_id;
  for (const Element& e : elements) {
    if (!e.visible || !IsOverlapChecked(e.layer)) continue;
    items.push_back({static_cast<int>(by_id.size()), e.bbox});
    by_id.push_back(&e);
  }
  Quadtree tree = Quadtree::Build(items, params);
  std::vector<ConflictViolation> out;
  for (const Element* label : by_id) {
    if (!IsConflictLabelLayer(label->layer)) continue;
    for (int k : tree.Query(label->bbox)) {
      const Element* other = by_id[k];
      if (other == label) continue;
      const bool other_is_label = IsConflictLabelLayer(other->layer);
      if (other_is_label && other->id < label->id) continue;
      double area = OverlapArea(label->bbox, other->bbox);
      if (area <= 0) continue;
      out.push_back({std::min(label->id, other->id),
                     std::max(label->id, other->id), area});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  return out;
}

std::vector<ProximityViolation> FindProximity(std::span<const Element> elements,
                                              double min_distance_em) {
  std::vector<ProximityViolation> out;
  for (LayerKind layer : {LayerKind::kPointLabel, LayerKind::kAnnotation}) {
    std::vector<const Element*> members;
    double max_font = 0;
    for (const Element& e : elements) {
      if (e.visible && e.layer == layer) {
        members.push_back(&e);
        max_font = std::max(max_font, e.font_size);
      }
    }
    std::sort(members.begin(), members.end(), [](const Element* a, const Element* b) {
      return std::tie(a->anchor.x, a->id) < std::tie(b->anchor.x, b->id);
    });
    const double window = min_distance_em * max_font;
    for (size_t i = 0; i < members.size(); ++i) {
      for (size_t j = i + 1; j < members.size(); ++j) {
        const Element* a = members[i];
        const Element* b = members[j];
        if (b->anchor.x - a->anchor.x >= window) break;
        double limit = min_distance_em * std::min(a->font_size, b->font_size);
        double d = Distance(a->anchor, b->anchor);
        if (d < limit) {
          out.push_back({std::min(a->id, b->id), std::max(a->id, b->id), d});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  return out;
}

ConstraintReport EvaluateConstraints(std::span<const Element> elements,
                                     const DensityGrid& grid, Size target,
                                     const ConstraintThresholds& thresholds,
                                     const TextMetrics& text_model,
                                     QuadtreeParams params) {
  ConstraintReport report;
  for (int row = 0; row < grid.rows(); ++row) {
    for (int col = 0; col < grid.columns(); ++col) {
      double d = grid.Density(col, row);
      if (d > thresholds.max_cell_density) {
        report.congestion.push_back({{col, row}, d});
      }
    }
  }
  report.conflicts = FindConflicts(elements, params);
  report.proximity = FindProximity(elements, thresholds.min_anchor_distance_em);
  for (const Element& e : elements) {
    if (!e.visible || !IsTextLayer(e.layer)) continue;
    double ratio = AreaRatio(e, target);
    if (ratio < MinProminentAreaRatio(e, target, text_model, thresholds)) {
      report.prominence.push_back({e.id, ratio});
    }
  }
  std::sort(report.prominence.begin(), report.prominence.end(),
            [](const auto& x, const auto& y) { return x.id < y.id; });
  report.satisfied = report.ViolationCount() == 0;
  return report;
}

}  // namespace chartgen
