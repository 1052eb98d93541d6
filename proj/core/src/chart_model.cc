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

#include "chartgen/chart_model.h"

#include <algorithm>

namespace chartgen {

std::vector<FeatureKind> ClassifyFeaturePoints(const Series& series) {
  const auto& pts = series.points;
  const size_t n = pts.size();
  std::vector<FeatureKind> kinds(n, FeatureKind::kIntermediate);
  if (n == 0) return kinds;

  size_t arg_max = 0;
  size_t arg_min = 0;
  for (size_t i = 1; i < n; ++i) {
    if (pts[i].y > pts[arg_max].y) arg_max = i;
    if (pts[i].y < pts[arg_min].y) arg_min = i;
  }
  for (size_t i = 1; i + 1 < n; ++i) {
    if (pts[i].y > pts[i - 1].y && pts[i].y > pts[i + 1].y) {
      kinds[i] = FeatureKind::kLocalMax;
    } else if (pts[i].y < pts[i - 1].y && pts[i].y < pts[i + 1].y) {
      kinds[i] = FeatureKind::kLocalMin;
    }
  }
  // A constant series has arg_max == arg_min == 0, which First absorbs.
  kinds[arg_max] = FeatureKind::kGlobalMax;
  if (arg_min != arg_max) kinds[arg_min] = FeatureKind::kGlobalMin;
  kinds[0] = FeatureKind::kFirst;
  if (n > 1) kinds[n - 1] = FeatureKind::kLast;
  return kinds;
}

double ImportanceTable::PointLabel(FeatureKind kind) const {
  switch (kind) {
    case FeatureKind::kFirst:
    case FeatureKind::kLast: return endpoint_label;
    case FeatureKind::kGlobalMax:
    case FeatureKind::kGlobalMin: return global_extremum_label;
    case FeatureKind::kLocalMax:
    case FeatureKind::kLocalMin: return local_extremum_label;
    case FeatureKind::kIntermediate: return intermediate_label;
  }
  return intermediate_label;
}

double ImportanceTable::Marker(FeatureKind kind) const {
  switch (kind) {
    case FeatureKind::kFirst:
    case FeatureKind::kLast: return endpoint_marker;
    case FeatureKind::kGlobalMax:
    case FeatureKind::kGlobalMin: return global_extremum_marker;
    case FeatureKind::kLocalMax:
    case FeatureKind::kLocalMin: return local_extremum_marker;
    case FeatureKind::kIntermediate: return intermediate_marker;
  }
  return intermediate_marker;
}

ChartModel AssignImportance(const ChartSpec& spec, const ImportanceTable& table) {
  ChartModel model;
  model.domain = ComputeDomain(spec);
  auto& out = model.elements;
  auto add = [&out](LayerKind layer, double importance) -> Element& {
    Element e;
    e.id = static_cast<int>(out.size());
    e.layer = layer;
    e.importance = importance;
    out.push_back(std::move(e));
    return out.back();
  };

  for (size_t s = 0; s < spec.series.size(); ++s) {
    const Series& series = spec.series[s];
    const auto kinds = ClassifyFeaturePoints(series);
    Element& line = add(LayerKind::kDataLine, table.data_line);
    line.series = static_cast<int>(s);
    line.data_vertices = series.points;
    for (size_t i = 0; i < series.points.size(); ++i) {
      Element& marker = add(LayerKind::kDataPoint, table.Marker(kinds[i]));
      marker.series = static_cast<int>(s);
      marker.point_index = static_cast<int>(i);
      marker.feature = kinds[i];
      marker.data = series.points[i];
      marker.value = series.points[i].y;
    }
    for (size_t i = 0; i < series.points.size(); ++i) {
      Element& label = add(LayerKind::kPointLabel, table.PointLabel(kinds[i]));
      label.series = static_cast<int>(s);
      label.point_index = static_cast<int>(i);
      label.feature = kinds[i];
      label.data = series.points[i];
      label.value = series.points[i].y;
      label.text = FormatNumber(series.points[i].y);
    }
  }

  for (const Annotation& note : spec.annotations) {
    Element& e =
        add(LayerKind::kAnnotation, note.importance.value_or(table.annotation));
    e.data = note.anchor;
    e.text = note.text;
  }

  const DataDomain& d = model.domain;
  model.x_ticks = MakeTicks(spec.x_axis, d.x_min, d.x_max);
  double y_lo = d.y_min;
  double y_hi = d.y_max;
  if (!(y_hi > y_lo)) {
    y_lo -= 1;
    y_hi += 1;
  }
  model.y_ticks = MakeTicks(spec.y_axis, y_lo, y_hi);

  for (AxisId axis : {AxisId::kX, AxisId::kY}) {
    Element& e = add(LayerKind::kAxisLine, table.axis_line);
    e.axis = axis;
  }
  for (AxisId axis : {AxisId::kX, AxisId::kY}) {
    const TickSet& set = axis == AxisId::kX ? model.x_ticks : model.y_ticks;
    for (size_t t = 0; t < set.ticks.size(); ++t) {
      Element& mark = add(LayerKind::kTickMark, table.tick_mark);
      mark.axis = axis;
      mark.tick_index = static_cast<int>(t);
      mark.value = set.ticks[t].value;
      Element& label = add(LayerKind::kTickLabel, table.tick_label);
      label.axis = axis;
      label.tick_index = static_cast<int>(t);
      label.value = set.ticks[t].value;
      label.text = set.ticks[t].label;
      if (axis == AxisId::kY) {
        Element& grid = add(LayerKind::kGridline, table.gridline);
        grid.axis = axis;
        grid.tick_index = static_cast<int>(t);
        grid.value = set.ticks[t].value;
      }
    }
  }
  if (!spec.x_axis.title.empty()) {
    Element& e = add(LayerKind::kAxisTitle, table.axis_title);
    e.axis = AxisId::kX;
    e.text = spec.x_axis.title;
  }
  if (!spec.y_axis.title.empty()) {
    Element& e = add(LayerKind::kAxisTitle, table.axis_title);
    e.axis = AxisId::kY;
    e.text = spec.y_axis.title;
  }
  if (!spec.title.empty()) {
    Element& e = add(LayerKind::kChartTitle, table.chart_title);
    e.text = spec.title;
  }
  return model;
}

}  // namespace chartgen
