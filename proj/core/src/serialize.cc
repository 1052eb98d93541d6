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

#include "chartgen/serialize.h"

#include "json.hpp"

namespace chartgen {
namespace {

// ordered_json keeps insertion order, so output does not depend on key
// sorting.
using json = nlohmann::ordered_json;

json RectJson(const Rect& r) {
  return {{"x", RoundTo2(r.x)},
          {"y", RoundTo2(r.y)},
          {"width", RoundTo2(r.width)},
          {"height", RoundTo2(r.height)}};
}

json PointJson(Point p) { return {{"x", RoundTo2(p.x)}, {"y", RoundTo2(p.y)}}; }

json ElementJson(const Element& e) {
  json j;
  j["id"] = e.id;
  j["layer"] = ToString(e.layer);
  j["visible"] = e.visible;
  j["importance"] = e.importance;
  j["bbox"] = RectJson(e.bbox);
  j["anchor"] = PointJson(e.anchor);
  if (!e.vertices.empty()) {
    json v = json::array();
    for (Point p : e.vertices) v.push_back(PointJson(p));
    j["vertices"] = std::move(v);
  }
  if (e.radius > 0) j["radius"] = RoundTo2(e.radius);
  if (IsTextLayer(e.layer) || !e.text.empty()) {
    j["text"] = e.text;
    j["fontSize"] = RoundTo2(e.font_size);
    j["textAnchor"] = ToString(e.text_anchor);
    j["slot"] = ToString(e.slot);
  }
  if (e.series >= 0) j["series"] = e.series;
  if (e.point_index >= 0) j["pointIndex"] = e.point_index;
  if (e.feature) j["feature"] = ToString(*e.feature);
  if (e.value) j["value"] = *e.value;
  if (e.axis) j["axis"] = *e.axis == AxisId::kX ? "x" : "y";
  if (e.tick_index >= 0) j["tickIndex"] = e.tick_index;
  if (e.surrogate) j["surrogate"] = true;
  return j;
}

json LogJson(std::span<const OperatorLogEntry> log) {
  json out = json::array();
  for (const OperatorLogEntry& entry : log) {
    json params = json::object();
    for (const LogParam& p : entry.params) {
      if (const double* d = std::get_if<double>(&p.value)) {
        params[p.key] = *d;
      } else {
        params[p.key] = std::get<std::string>(p.value);
      }
    }
    out.push_back({{"operator", ToString(entry.kind)},
                   {"elementIds", entry.element_ids},
                   {"params", std::move(params)},
                   {"delta",
                    {{"collisionBefore", entry.delta.collision_before},
                     {"collisionAfter", entry.delta.collision_after},
                     {"congestedCellsBefore", entry.delta.congested_cells_before},
                     {"congestedCellsAfter", entry.delta.congested_cells_after}}}});
  }
  return out;
}

json ReportJson(const ConstraintReport& r) {
  json congestion = json::array();
  for (const auto& v : r.congestion) {
    congestion.push_back(
        {{"column", v.cell.column}, {"row", v.cell.row}, {"density", v.density}});
  }
  json conflicts = json::array();
  for (const auto& v : r.conflicts) {
    conflicts.push_back({{"a", v.a}, {"b", v.b}, {"overlap", v.overlap}});
  }
  json proximity = json::array();
  for (const auto& v : r.proximity) {
    proximity.push_back({{"a", v.a}, {"b", v.b}, {"distance", v.distance}});
  }
  json prominence = json::array();
  for (const auto& v : r.prominence) {
    prominence.push_back({{"id", v.id}, {"areaRatio", v.area_ratio}});
  }
  return {{"satisfied", r.satisfied},
          {"congestion", std::move(congestion)},
          {"conflicts", std::move(conflicts)},
          {"proximity", std::move(proximity)},
          {"prominence", std::move(prominence)}};
}

}  // namespace

std::string SerializeChart(const GeneralizedChart& chart) {
  json elements = json::array();
  for (const Element& e : chart.elements) elements.push_back(ElementJson(e));
  json j = {{"target", {{"width", chart.target.width}, {"height", chart.target.height}}},
            {"visibleCount", chart.VisibleCount()},
            {"passes", chart.passes},
            {"exhausted", chart.exhausted},
            {"warnings", chart.warnings},
            {"report", ReportJson(chart.report)},
            {"log", LogJson(chart.log)},
            {"elements", std::move(elements)}};
  return j.dump(2);
}

std::string SerializeLog(std::span<const OperatorLogEntry> log) {
  return LogJson(log).dump();
}

std::string SerializeReport(const ConstraintReport& report) {
  return ReportJson(report).dump();
}

std::string SerializeMetrics(const ChartMetrics& m) {
  json layers = json::array();
  for (const LayerAreaRatio& l : m.layers) {
    layers.push_back({{"layer", ToString(l.layer)},
                      {"count", l.count},
                      {"areaRatio", l.area_ratio}});
  }
  json j = {{"target", {{"width", m.target.width}, {"height", m.target.height}}},
            {"grid",
             {{"columns", m.dims.columns},
              {"rows", m.dims.rows},
              {"maxCellDensity", m.max_cell_density},
              {"meanCellDensity", m.mean_cell_density}}},
            {"collisionArea", m.collision_area},
            {"visibleCount", m.visible},
            {"layers", std::move(layers)},
            {"report", ReportJson(m.report)}};
  return j.dump(2);
}

}  // namespace chartgen
