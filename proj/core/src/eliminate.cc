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
#include <tuple>

#include "chartgen/operators.h"

namespace chartgen {
namespace {

bool IsEndpoint(const Element& e) {
  return e.feature == FeatureKind::kFirst || e.feature == FeatureKind::kLast;
}

bool IsInteriorLabel(const Element& e) {
  return e.visible && !e.surrogate && e.layer == LayerKind::kPointLabel &&
         (e.feature == FeatureKind::kIntermediate ||
          e.feature == FeatureKind::kLocalMax || e.feature == FeatureKind::kLocalMin);
}

struct Candidate {
  int id = 0;
  double score = 0;
  ScoreInputs inputs;
};

// Mutable view of the constraint state while a pass hides elements.
class ViolationState {
 public:
  ViolationState(const std::vector<Element>& elements, DensityGrid grid,
                 const ConstraintReport& report, double max_density)
      : grid_(std::move(grid)),
        max_density_(max_density),
        conflict_count_(elements.size(), 0),
        proximity_count_(elements.size(), 0),
        conflict_area_(elements.size(), 0),
        prominent_(elements.size(), true) {
    for (const ConflictViolation& c : report.conflicts) {
      conflict_partners_.push_back(c);
      ++conflict_count_[c.a];
      ++conflict_count_[c.b];
      conflict_area_[c.a] += c.overlap;
      conflict_area_[c.b] += c.overlap;
    }
    for (const ProximityViolation& p : report.proximity) {
      proximity_partners_.push_back(p);
      ++proximity_count_[p.a];
      ++proximity_count_[p.b];
    }
    for (const ProminenceViolation& p : report.prominence) prominent_[p.id] = false;
  }

  const DensityGrid& grid() const { return grid_; }
  double conflict_area(int id) const { return conflict_area_[id]; }

  bool InCongestedCell(const Element& e) const {
    CellRange r = grid_.CellsFor(e);
    for (int row = r.first_row; row <= r.last_row; ++row) {
      for (int col = r.first_column; col <= r.last_column; ++col) {
        if (grid_.Density(col, row) > max_density_) return true;
      }
    }
    return false;
  }

  bool Violates(const Element& e) const {
    return conflict_count_[e.id] > 0 || proximity_count_[e.id] > 0 ||
           !prominent_[e.id] || InCongestedCell(e);
  }

  void Hide(const Element& e) {
    for (const ConflictViolation& c : conflict_partners_) {
      if (c.a == e.id || c.b == e.id) {
        --conflict_count_[c.a];
        --conflict_count_[c.b];
      }
    }
    for (const ProximityViolation& p : proximity_partners_) {
      if (p.a == e.id || p.b == e.id) {
        --proximity_count_[p.a];
        --proximity_count_[p.b];
      }
    }
    prominent_[e.id] = true;
    grid_.Add(e, -1);
  }

 private:
  DensityGrid grid_;
  double max_density_;
  std::vector<int> conflict_count_;
  std::vector<int> proximity_count_;
  std::vector<double> conflict_area_;
  std::vector<bool> prominent_;
  std::vector<ConflictViolation> conflict_partners_;
  std::vector<ProximityViolation> proximity_partners_;
};

ScoreInputs InputsFor(const Element& e, const ViolationState& state,
                      double grid_max) {
  ScoreInputs in;
  CellIndex cell = state.grid().CellOf(e.anchor);
  if (grid_max > 0) in.local_density = state.grid().Density(cell.column, cell.row) / grid_max;
  const double area = e.bbox.Area();
  if (state.conflict_area(e.id) > 0) {
    in.overlap = area > 0 ? std::min(1.0, state.conflict_area(e.id) / area) : 1.0;
  }
  return in;
}

}  // namespace

bool IsEliminable(const Element& e) {
  return e.layer != LayerKind::kDataLine && !e.surrogate;
}

bool IsDeferredForElimination(const Element& e) {
  if (e.layer == LayerKind::kAxisLine) return true;
  return (e.layer == LayerKind::kPointLabel || e.layer == LayerKind::kDataPoint) &&
         IsEndpoint(e);
}

EliminationResult Eliminate(std::vector<Element> elements,
                            const OperatorContext& ctx,
                            const EliminationParams& params, uint64_t seed) {
  EliminationResult result;
  const EliminationWeights weights = params.weights.Normalized();
  const size_t max_passes = elements.size() + 1;

  for (size_t pass = 0; pass < max_passes; ++pass) {
    const ClutterMeasure before = MeasureClutter(elements, ctx);
    {
      DensityGrid grid = BuildDensityGrid(elements, ctx.target, ctx.dims);
      JitterResult jittered =
          JitterLabels(std::move(elements), grid, ctx, params.annealing, seed + pass);
      elements = std::move(jittered.elements);
      if (jittered.moves > 0) result.log.push_back(std::move(jittered.log));
    }

    DensityGrid grid = BuildDensityGrid(elements, ctx.target, ctx.dims);
    ConstraintReport report = EvaluateConstraints(
        elements, grid, ctx.target, ctx.thresholds, ctx.text, ctx.quadtree);
    if (report.satisfied) break;
    ++result.iterations;

    const double grid_max = grid.MaxDensity();
    ViolationState state(elements, std::move(grid), report,
                         ctx.thresholds.max_cell_density);
    const bool interior_visible =
        std::any_of(elements.begin(), elements.end(), IsInteriorLabel);

    std::vector<Candidate> candidates;
    bool deferred_blocked = false;
    for (const Element& e : elements) {
      if (!e.visible || !IsEliminable(e) || !state.Violates(e)) continue;
      if (interior_visible && IsDeferredForElimination(e)) {
        deferred_blocked = true;
        continue;
      }
      ScoreInputs in = InputsFor(e, state, grid_max);
      candidates.push_back(
          {e.id, EliminationScore(e.importance, in.local_density, in.overlap, weights), in});
    }

    if (candidates.empty() && deferred_blocked) {
      // Only deferred elements violate: give up the weakest interior label so
      // they become eligible.
      for (const Element& e : elements) {
        if (!IsInteriorLabel(e)) continue;
        ScoreInputs in = InputsFor(e, state, grid_max);
        candidates.push_back(
            {e.id, EliminationScore(e.importance, in.local_density, in.overlap, weights), in});
      }
      std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        return std::tie(b.score, a.id) < std::tie(a.score, b.id);
      });
      candidates.resize(std::min<size_t>(candidates.size(), 1));
    }
    if (candidates.empty()) {
      result.exhausted = true;
      break;
    }

    const bool highest_first = params.order == EliminationOrder::kHighestScoreFirst;
    std::sort(candidates.begin(), candidates.end(),
              [&](const Candidate& a, const Candidate& b) {
                if (a.score != b.score) {
                  return highest_first ? a.score > b.score : a.score < b.score;
                }
                if (a.inputs.overlap != b.inputs.overlap) {
                  return a.inputs.overlap > b.inputs.overlap;
                }
                const double ia = elements[a.id].importance;
                const double ib = elements[b.id].importance;
                if (ia != ib) return ia < ib;
                return a.id < b.id;
              });

    OperatorLogEntry entry;
    entry.kind = OperatorKind::kEliminate;
    for (const Candidate& c : candidates) {
      Element& e = elements[c.id];
      // The forced fallback candidate may not violate anything itself.
      if (candidates.size() > 1 && !state.Violates(e)) continue;
      state.Hide(e);
      e.visible = false;
      entry.element_ids.push_back(c.id);
    }
    const ClutterMeasure after = MeasureClutter(elements, ctx);
    entry.params = {{"pass", static_cast<double>(pass)},
                    {"violations", static_cast<double>(report.ViolationCount())},
                    {"candidates", static_cast<double>(candidates.size())},
                    {"hidden", static_cast<double>(entry.element_ids.size())},
                    {"order", std::string(highest_first ? "highestScoreFirst"
                                                        : "lowestScoreFirst")}};
    entry.delta = {before.collision_area, after.collision_area,
                   before.congested_cells, after.congested_cells};
    result.log.push_back(std::move(entry));
  }
  result.elements = std::move(elements);
  return result;
}

}  // namespace chartgen
