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

#ifndef CHARTGEN_OPERATORS_H_
#define CHARTGEN_OPERATORS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chartgen/density_grid.h"
#include "chartgen/element.h"
#include "chartgen/layout.h"
#include "chartgen/metrics.h"
#include "chartgen/quadtree.h"
#include "chartgen/text_metrics.h"
#include "chartgen/ticks.h"

namespace chartgen {

enum class OperatorKind { kJitter, kEliminate, kSimplify, kMergeTicks, kSemanticTransition };

std::string_view ToString(OperatorKind kind);

struct LogParam {
  std::string key;
  std::variant<double, std::string> value;
};

// Clutter measured around a mutation: pairwise collision area over the
// overlap-checked layers and the number of congested cells.
struct ClutterDelta {
  double collision_before = 0;
  double collision_after = 0;
  int congested_cells_before = 0;
  int congested_cells_after = 0;
};

struct OperatorLogEntry {
  OperatorKind kind = OperatorKind::kJitter;
  std::vector<int> element_ids;
  std::vector<LogParam> params;
  ClutterDelta delta;

  const LogParam* Find(std::string_view key) const;
  double Number(std::string_view key) const;
};

// Shared, per-target inputs of every operator.
struct OperatorContext {
  Size target;
  GridDims dims;
  ConstraintThresholds thresholds;
  QuadtreeParams quadtree;
  TextMetrics text;
};

struct ClutterMeasure {
  double collision_area = 0;
  int congested_cells = 0;
};

ClutterMeasure MeasureClutter(std::span<const Element> elements,
                              const OperatorContext& ctx);

// --- Jittering -----------------------------------------------------------

struct AnnealingParams {
  double initial_temperature = 1.0;
  double decay = 0.9;
  int iterations = 50;
};

struct JitterResult {
  std::vector<Element> elements;
  OperatorLogEntry log;
  int moves = 0;
};

// Displaces conflicting point labels and annotations. Each starts in the
// diagonal slot of its lowest-density quadrant that avoids data points, then
// seeded simulated annealing over the five label slots minimises overlap.
// The best state seen is returned; identical inputs and seed give identical
// output.
JitterResult JitterLabels(std::vector<Element> elements, const DensityGrid& grid,
                          const OperatorContext& ctx,
                          const AnnealingParams& annealing, uint64_t seed);

// --- Elimination ---------------------------------------------------------

struct EliminationWeights {
  double importance = 0.5;
  double density = 0.3;
  double overlap = 0.2;

  // Scales to sum 1. Throws std::invalid_argument on negative weights or a
  // zero sum.
  EliminationWeights Normalized() const;
};

// Removal score; larger means a better candidate for removal.
double EliminationScore(double importance, double local_density, double overlap,
                        const EliminationWeights& w);

enum class EliminationOrder { kHighestScoreFirst, kLowestScoreFirst };

struct EliminationParams {
  EliminationWeights weights;
  AnnealingParams annealing;
  EliminationOrder order = EliminationOrder::kHighestScoreFirst;
};

struct EliminationResult {
  std::vector<Element> elements;
  std::vector<OperatorLogEntry> log;
  // Loop stopped with violations left and nothing eliminable.
  bool exhausted = false;
  int iterations = 0;
};

// Removal-score inputs for one element: anchor-cell density over the grid maximum,
// and summed conflict overlap over its own area (clamped to 1).
struct ScoreInputs {
  double local_density = 0;
  double overlap = 0;
};

// True for elements elimination may hide: everything but data lines and
// semantic-transition surrogates.
bool IsEliminable(const Element& e);

// Endpoint labels/markers and axis lines wait until no intermediate or local
// extremum label is visible.
bool IsDeferredForElimination(const Element& e);

// Alternates jittering with removal passes until the constraints hold or
// nothing eliminable is left. Each pass visits violating elements in score
// order and hides those still in violation.
EliminationResult Eliminate(std::vector<Element> elements,
                            const OperatorContext& ctx,
                            const EliminationParams& params, uint64_t seed);

// --- Simplification ------------------------------------------------------

struct SimplifyResult {
  std::vector<Element> elements;
  std::vector<OperatorLogEntry> log;
};

// Runs Douglas-Peucker on every data line at its feature-preserving epsilon.
// Only the drawn polyline changes; data vertices are kept for reference.
SimplifyResult SimplifySeries(std::vector<Element> elements,
                              const OperatorContext& ctx, double retention);

// --- Tick merging --------------------------------------------------------

struct MergeResult {
  std::vector<Element> elements;
  std::optional<OperatorLogEntry> log;
  int stride = 1;
};

// Doubles the tick stride of `axis` (keeping every 2nd tick from the first)
// until no two adjacent visible tick labels overlap or sit closer than
// `gap_min` px. The last tick is retained. `stride` is the current stride.
MergeResult MergeTicks(std::vector<Element> elements, AxisId axis,
                       const TickSet& ticks, int stride, double gap_min,
                       const OperatorContext& ctx);

// --- Semantic transition -------------------------------------------------

struct TransitionParams {
  double sparkline_area = 150000;
  double surrogate_importance = 0.85;
};

struct TransitionResult {
  std::vector<Element> elements;
  std::optional<OperatorLogEntry> log;
};

// Below the sparkline area, or once the y axis has been eliminated, hides the
// axis layers and inserts a reference line at the global minimum plus
// min/max value labels.
TransitionResult SemanticTransition(std::vector<Element> elements,
                                    const PlotMapping& mapping,
                                    const OperatorContext& ctx,
                                    const TransitionParams& params);

}  // namespace chartgen

#endif  // CHARTGEN_OPERATORS_H_
