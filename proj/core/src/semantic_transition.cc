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
#include <array>
#include <limits>

#include "chartgen/operators.h"

namespace chartgen {
namespace {

bool IsAxisLayer(LayerKind layer) {
  return layer == LayerKind::kAxisLine || layer == LayerKind::kTickMark ||
         layer == LayerKind::kTickLabel || layer == LayerKind::kGridline ||
         layer == LayerKind::kAxisTitle;
}

bool Fits(const Rect& box, Size target, const std::vector<Element>& elements) {
  if (box.x < 0 || box.y < 0 || box.Right() > target.width ||
      box.Bottom() > target.height) {
    return false;
  }
  for (const Element& e : elements) {
    if (!e.visible) continue;
    if (!IsConflictLabelLayer(e.layer) && e.layer != LayerKind::kDataPoint) continue;
    if (OverlapArea(box, e.bbox) > 0) return false;
  }
  return true;
}

}  // namespace

TransitionResult SemanticTransition(std::vector<Element> elements,
                                    const PlotMapping& mapping,
                                    const OperatorContext& ctx,
                                    const TransitionParams& params) {
  TransitionResult result;
  const bool sparkline = ctx.target.Area() < params.sparkline_area;
  bool axis_removed = false;
  bool has_reference = false;
  for (const Element& e : elements) {
    if (e.layer == LayerKind::kAxisLine && e.axis == AxisId::kY && !e.visible) {
      axis_removed = true;
    }
    if (e.layer == LayerKind::kReferenceLine) has_reference = true;
  }
  if ((!sparkline && !axis_removed) || has_reference) {
    result.elements = std::move(elements);
    return result;
  }

  // Global extrema over every series, first occurrence winning.
  DataPoint lo{0, std::numeric_limits<double>::infinity()};
  DataPoint hi{0, -std::numeric_limits<double>::infinity()};
  for (const Element& e : elements) {
    if (e.layer != LayerKind::kDataLine) continue;
    for (const DataPoint& p : e.data_vertices) {
      if (p.y < lo.y) lo = p;
      if (p.y > hi.y) hi = p;
    }
  }
  if (!(lo.y <= hi.y)) {
    result.elements = std::move(elements);
    return result;
  }

  const ClutterMeasure before = MeasureClutter(elements, ctx);
  OperatorLogEntry entry;
  entry.kind = OperatorKind::kSemanticTransition;
  for (Element& e : elements) {
    if (!e.visible || e.surrogate) continue;
    const bool hide = IsAxisLayer(e.layer) ||
                      (sparkline && (e.layer == LayerKind::kDataPoint ||
                                     e.layer == LayerKind::kPointLabel));
    if (!hide) continue;
    e.visible = false;
    entry.element_ids.push_back(e.id);
  }

  const Rect& plot = mapping.plot();
  const double y_min = mapping.MapY(lo.y);
  const TextMetrics text =
      ctx.text.WithFontSize(std::max(ctx.text.font_size, ctx.thresholds.min_font_px));
  const double lh = text.LineHeight();
  const double gap = 2;

  auto add = [&](LayerKind layer) -> Element& {
    Element e;
    e.id = static_cast<int>(elements.size());
    e.layer = layer;
    e.importance = params.surrogate_importance;
    e.surrogate = true;
    elements.push_back(std::move(e));
    entry.element_ids.push_back(elements.back().id);
    return elements.back();
  };

  {
    Element& ref = add(LayerKind::kReferenceLine);
    ref.vertices = {{plot.Left(), y_min}, {plot.Right(), y_min}};
    ref.bbox = {plot.Left(), y_min, plot.width, 0};
    ref.anchor = ref.bbox.Center();
    ref.value = lo.y;
  }

  const bool degenerate = lo.y == hi.y;
  {
    Element& label = add(LayerKind::kPointLabel);
    label.text = degenerate ? "min = max = " + FormatNumber(lo.y)
                            : "min " + FormatNumber(lo.y);
    label.font_size = text.font_size;
    label.feature = FeatureKind::kGlobalMin;
    label.value = lo.y;
    label.data = lo;
    label.anchor = {plot.Right(), y_min};
    const double w = text.Width(label.text);
    label.bbox = {plot.Right() - w, y_min - gap - lh, w, lh};
    label.text_anchor = TextAnchor::kEnd;
    label.label_gap = gap;
  }

  if (!degenerate) {
    Element& label = add(LayerKind::kPointLabel);
    label.text = "max " + FormatNumber(hi.y);
    label.font_size = text.font_size;
    label.feature = FeatureKind::kGlobalMax;
    label.value = hi.y;
    label.data = hi;
    label.anchor = mapping.Map(hi);
    label.label_gap = gap;
    const double w = text.Width(label.text);
    const Size cell{ctx.target.width / ctx.dims.columns,
                    ctx.target.height / ctx.dims.rows};
    constexpr std::array<LabelSlot, 5> kOrder = {
        LabelSlot::kDefault, LabelSlot::kNorthEast, LabelSlot::kNorthWest,
        LabelSlot::kSouthEast, LabelSlot::kSouthWest};
    label.slot = LabelSlot::kDefault;
    label.bbox = LabelBoxForSlot(label.anchor, w, lh, gap, cell, LabelSlot::kDefault);
    for (LabelSlot slot : kOrder) {
      Rect box = LabelBoxForSlot(label.anchor, w, lh, gap, cell, slot);
      // `label` is already in `elements`; hide it while testing the fit.
      label.visible = false;
      const bool fits = Fits(box, ctx.target, elements);
      label.visible = true;
      if (fits) {
        label.slot = slot;
        label.bbox = box;
        break;
      }
    }
    label.text_anchor = AnchorForSlot(label.slot);
  }

  const ClutterMeasure after = MeasureClutter(elements, ctx);
  entry.params = {{"mode", std::string(sparkline ? "sparkline" : "axisRemoved")},
                  {"min", lo.y},
                  {"max", hi.y}};
  entry.delta = {before.collision_area, after.collision_area,
                 before.congested_cells, after.congested_cells};
  result.log = std::move(entry);
  result.elements = std::move(elements);
  return result;
}

}  // namespace chartgen
