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

#ifndef CHARTGEN_METRICS_H_
#define CHARTGEN_METRICS_H_

#include <span>
#include <vector>

#include "chartgen/density_grid.h"
#include "chartgen/element.h"
#include "chartgen/geometry.h"
#include "chartgen/quadtree.h"
#include "chartgen/text_metrics.h"

namespace chartgen {

struct PairDistance {
  int a = 0;
  int b = 0;
  double distance = 0;
};

// Euclidean distance between bbox centres for every unordered pair of
// visible elements in `layer`, ordered by (a, b).
std::vector<PairDistance> LayerDistances(std::span<const Element> elements,
                                         LayerKind layer);

// Sum over ordered pairs i != j of the overlap area of boxes i and j, so
// every overlapping pair counts twice. Candidate pairs come from a quadtree;
// the result is bit-identical to the plain double loop.
double TotalCollisionArea(std::span<const Rect> boxes, QuadtreeParams params = {});

// Same over the visible elements of the overlap-checked layers (labels,
// annotations, tick labels and data points).
double TotalCollisionArea(std::span<const Element> elements,
                          QuadtreeParams params = {});

// bbox area / display area.
double AreaRatio(const Element& e, Size target);

// Free parameters of the clutter guidelines.
struct ConstraintThresholds {
  // Elements per px^2 a cell may hold (8 per 32x32 cell).
  double max_cell_density = 8.0 / (32.0 * 32.0);
  // Text laid out smaller than this is unreadable.
  double min_font_px = 7;
  // Same-layer label anchors closer than this many ems are too close.
  double min_anchor_distance_em = 1.0;
};

struct CongestionViolation {
  CellIndex cell;
  double density = 0;
};

struct ConflictViolation {
  int a = 0;
  int b = 0;
  double overlap = 0;
};

struct ProximityViolation {
  int a = 0;
  int b = 0;
  double distance = 0;
};

struct ProminenceViolation {
  int id = 0;
  double area_ratio = 0;
};

struct ConstraintReport {
  std::vector<CongestionViolation> congestion;
  std::vector<ConflictViolation> conflicts;
  std::vector<ProximityViolation> proximity;
  std::vector<ProminenceViolation> prominence;
  bool satisfied = true;

  size_t ViolationCount() const {
    return congestion.size() + conflicts.size() + proximity.size() +
           prominence.size();
  }
};

// Smallest readable area ratio for a text element: its box laid out at the
// minimum font size over the display area. 0 for non-text layers.
double MinProminentAreaRatio(const Element& e, Size target,
                             const TextMetrics& text_model,
                             const ConstraintThresholds& thresholds);

// Conflicting pairs: an overlap-checked label overlapping another such label
// or any data point with positive area. (a, b) with a < b, sorted.
std::vector<ConflictViolation> FindConflicts(std::span<const Element> elements,
                                             QuadtreeParams params = {});

// Same-layer point labels / annotations whose anchors are closer than the
// threshold. (a, b) with a < b, sorted.
std::vector<ProximityViolation> FindProximity(std::span<const Element> elements,
                                              double min_distance_em);

// Evaluates congestion, conflict, proximity and prominence over the visible
// elements. `grid` must be built from the same element set.
ConstraintReport EvaluateConstraints(std::span<const Element> elements,
                                     const DensityGrid& grid, Size target,
                                     const ConstraintThresholds& thresholds,
                                     const TextMetrics& text_model,
                                     QuadtreeParams params = {});

}  // namespace chartgen

#endif  // CHARTGEN_METRICS_H_
