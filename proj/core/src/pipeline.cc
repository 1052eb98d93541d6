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

#include "chartgen/pipeline.h"

#include <algorithm>
#include <chrono>

#include "chartgen/chart_model.h"
#include "chartgen/density_grid.h"
#include "chartgen/layout.h"

namespace chartgen {
namespace {

struct Prepared {
  ChartModel model;
  LayoutResult layout;
  OperatorContext ctx;
};

Prepared Prepare(const ChartSpec& spec, Size target, const EngineConfig& config) {
  if (!(target.width >= 2 && target.height >= 2)) {
    throw LayoutError("target must be at least 2x2 px");
  }
  Prepared p;
  p.model = AssignImportance(spec, config.importance);
  const TextMetrics text = TextMetricsForTarget(target, config.typography);
  p.layout = LayoutElements(p.model, target, text);
  p.ctx = {target, DimsForTarget(target, config.cell_size_px), config.thresholds,
           config.quadtree, text};
  return p;
}

ConstraintReport Evaluate(const std::vector<Element>& elements,
                          const OperatorContext& ctx) {
  DensityGrid grid = BuildDensityGrid(elements, ctx.target, ctx.dims);
  return EvaluateConstraints(elements, grid, ctx.target, ctx.thresholds, ctx.text,
                             ctx.quadtree);
}

bool HasReferenceLine(const std::vector<Element>& elements) {
  return std::any_of(elements.begin(), elements.end(), [](const Element& e) {
    return e.layer == LayerKind::kReferenceLine;
  });
}

std::vector<bool> Visibility(const std::vector<Element>& elements) {
  std::vector<bool> v;
  v.reserve(elements.size());
  for (const Element& e : elements) v.push_back(e.visible);
  return v;
}

}  // namespace

int GeneralizedChart::VisibleCount() const {
  return static_cast<int>(std::count_if(elements.begin(), elements.end(),
                                        [](const Element& e) { return e.visible; }));
}

GeneralizedChart Generalize(const ChartSpec& spec, Size target,
                            const EngineConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  ValidateEngineConfig(config);
  Prepared p = Prepare(spec, target, config);
  const OperatorContext& ctx = p.ctx;

  GeneralizedChart chart;
  chart.target = target;
  chart.warnings = p.layout.warnings;
  std::vector<Element> elements = std::move(p.layout.elements);
  const bool sparkline = target.Area() < config.sparkline_area_px;
  const EliminationParams elimination{config.weights, config.annealing,
                                      config.elimination_order};
  const TransitionParams transition{config.sparkline_area_px,
                                    config.importance.transition};
  int x_stride = 1;
  int y_stride = 1;

  ConstraintReport report = Evaluate(elements, ctx);
  bool exhausted = false;
  for (int pass = 0; pass < config.max_passes; ++pass) {
    if (report.satisfied && !(sparkline && !HasReferenceLine(elements))) break;
    ++chart.passes;
    const std::vector<bool> visible_before = Visibility(elements);
    const size_t count_before = elements.size();
    const size_t log_before = chart.log.size();

    SimplifyResult simplified =
        SimplifySeries(std::move(elements), ctx, config.extrema_retention);
    elements = std::move(simplified.elements);
    for (auto& entry : simplified.log) chart.log.push_back(std::move(entry));

    MergeResult merged_x = MergeTicks(std::move(elements), AxisId::kX,
                                      p.model.x_ticks, x_stride, config.gap_min_px, ctx);
    elements = std::move(merged_x.elements);
    x_stride = merged_x.stride;
    if (merged_x.log) chart.log.push_back(std::move(*merged_x.log));
    MergeResult merged_y = MergeTicks(std::move(elements), AxisId::kY,
                                      p.model.y_ticks, y_stride, config.gap_min_px, ctx);
    elements = std::move(merged_y.elements);
    y_stride = merged_y.stride;
    if (merged_y.log) chart.log.push_back(std::move(*merged_y.log));

    const uint64_t seed = config.seed + static_cast<uint64_t>(pass) * 7919;
    EliminationResult eliminated = Eliminate(std::move(elements), ctx, elimination, seed);
    elements = std::move(eliminated.elements);
    for (auto& entry : eliminated.log) chart.log.push_back(std::move(entry));
    exhausted = eliminated.exhausted;

    TransitionResult transitioned =
        SemanticTransition(std::move(elements), p.layout.mapping, ctx, transition);
    elements = std::move(transitioned.elements);
    if (transitioned.log) chart.log.push_back(std::move(*transitioned.log));

    report = Evaluate(elements, ctx);
    const bool changed = elements.size() != count_before ||
                         Visibility(elements) != visible_before ||
                         chart.log.size() != log_before;
    if (!changed) break;
  }

  chart.report = std::move(report);
  chart.exhausted = !chart.report.satisfied && exhausted;
  chart.elements = std::move(elements);
  chart.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return chart;
}

std::vector<SweepEntry> SizeSweep(const ChartSpec& spec, std::span<const Size> targets,
                                  const EngineConfig& config) {
  std::vector<SweepEntry> out;
  for (const Size& target : targets) {
    SweepEntry entry;
    entry.target = target;
    try {
      entry.chart = Generalize(spec, target, config);
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

ChartMetrics ComputeMetrics(const ChartSpec& spec, Size target,
                            const EngineConfig& config) {
  ValidateEngineConfig(config);
  Prepared p = Prepare(spec, target, config);
  const std::vector<Element>& elements = p.layout.elements;
  ChartMetrics m;
  m.target = target;
  m.dims = p.ctx.dims;
  DensityGrid grid = BuildDensityGrid(elements, target, p.ctx.dims);
  m.max_cell_density = grid.MaxDensity();
  m.mean_cell_density = grid.MeanDensity();
  m.collision_area = TotalCollisionArea(elements, config.quadtree);
  m.report = EvaluateConstraints(elements, grid, target, config.thresholds,
                                 p.ctx.text, config.quadtree);
  for (const Element& e : elements) {
    if (!e.visible) continue;
    ++m.visible;
    auto it = std::find_if(m.layers.begin(), m.layers.end(),
                           [&](const LayerAreaRatio& l) { return l.layer == e.layer; });
    if (it == m.layers.end()) {
      m.layers.push_back({e.layer, 0, 0});
      it = m.layers.end() - 1;
    }
    ++it->count;
    it->area_ratio += AreaRatio(e, target);
  }
  std::sort(m.layers.begin(), m.layers.end(),
            [](const auto& a, const auto& b) { return a.layer < b.layer; });
  return m;
}

}  // namespace chartgen
