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

#ifndef CHARTGEN_TESTS_SUPPORT_FIXTURES_H_
#define CHARTGEN_TESTS_SUPPORT_FIXTURES_H_

#include <algorithm>
#include <vector>

#include "chartgen/chart_model.h"
#include "chartgen/config.h"
#include "chartgen/density_grid.h"
#include "chartgen/layout.h"
#include "chartgen/operators.h"

namespace testing_support {

// A chart laid out at a target with the operator context the pipeline
// would use.
struct LaidOut {
  chartgen::ChartModel model;
  chartgen::LayoutResult layout;
  chartgen::OperatorContext ctx;
};

inline LaidOut LayOut(const chartgen::ChartSpec& spec, chartgen::Size target,
                      const chartgen::EngineConfig& config = {}) {
  LaidOut out;
  out.model = chartgen::AssignImportance(spec, config.importance);
  const chartgen::TextMetrics text =
      chartgen::TextMetricsForTarget(target, config.typography);
  out.layout = chartgen::LayoutElements(out.model, target, text);
  out.ctx = {target, chartgen::DimsForTarget(target, config.cell_size_px),
             config.thresholds, config.quadtree, text};
  return out;
}

inline chartgen::ConstraintReport Evaluate(const std::vector<chartgen::Element>& els,
                                           const chartgen::OperatorContext& ctx) {
  auto grid = chartgen::BuildDensityGrid(els, ctx.target, ctx.dims);
  return chartgen::EvaluateConstraints(els, grid, ctx.target, ctx.thresholds, ctx.text,
                                       ctx.quadtree);
}

inline int CountVisible(const std::vector<chartgen::Element>& els) {
  return static_cast<int>(std::count_if(els.begin(), els.end(),
                                        [](const auto& e) { return e.visible; }));
}

// Context for hand-built element sets on a 1000x1000 display of 100 px cells.
inline chartgen::OperatorContext SquareContext() {
  return {{1000, 1000}, {10, 10}, {}, {}, chartgen::TextMetrics{10}};
}

}  // namespace testing_support

#endif  // CHARTGEN_TESTS_SUPPORT_FIXTURES_H_
