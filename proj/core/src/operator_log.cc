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

#include <stdexcept>

#include "chartgen/operators.h"

namespace chartgen {

std::string_view ToString(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::kJitter: return "Jitter";
    case OperatorKind::kEliminate: return "Eliminate";
    case OperatorKind::kSimplify: return "Simplify";
    case OperatorKind::kMergeTicks: return "MergeTicks";
    case OperatorKind::kSemanticTransition: return "SemanticTransition";
  }
  return "?";
}

const LogParam* OperatorLogEntry::Find(std::string_view key) const {
  for (const LogParam& p : params) {
    if (p.key == key) return &p;
  }
  return nullptr;
}

double OperatorLogEntry::Number(std::string_view key) const {
  const LogParam* p = Find(key);
  if (p == nullptr) throw std::out_of_range("no log parameter " + std::string(key));
  return std::get<double>(p->value);
}

ClutterMeasure MeasureClutter(std::span<const Element> elements,
                              const OperatorContext& ctx) {
  ClutterMeasure m;
  m.collision_area = TotalCollisionArea(elements, ctx.quadtree);
  DensityGrid grid = BuildDensityGrid(elements, ctx.target, ctx.dims);
  for (int row = 0; row < grid.rows(); ++row) {
    for (int col = 0; col < grid.columns(); ++col) {
      if (grid.Density(col, row) > ctx.thresholds.max_cell_density) {
        ++m.congested_cells;
      }
    }
  }
  return m;
}

EliminationWeights EliminationWeights::Normalized() const {
  if (importance < 0 || density < 0 || overlap < 0) {
    throw std::invalid_argument("elimination weights must be non-negative");
  }
  const double sum = importance + density + overlap;
  if (!(sum > 0)) throw std::invalid_argument("elimination weights sum to 0");
  return {importance / sum, density / sum, overlap / sum};
}

double EliminationScore(double importance, double local_density, double overlap,
                        const EliminationWeights& w) {
  return (1 - importance) * w.importance + local_density * w.density +
         overlap * w.overlap;
}

}  // namespace chartgen
