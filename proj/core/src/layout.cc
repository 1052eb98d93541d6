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

#include "chartgen/layout.h"

#include <algorithm>
#include <cmath>

namespace chartgen {

PlotMapping::PlotMapping(Rect plot, const DataDomain& domain)
    : plot_(plot),
      x_lo_(domain.x_min),
      x_hi_(domain.x_max),
      y_lo_(domain.y_min),
      y_hi_(domain.y_max) {
  if (!(x_hi_ > x_lo_)) {
    x_lo_ -= 1;
    x_hi_ += 1;
  }
  if (!(y_hi_ > y_lo_)) {
    y_lo_ -= 1;
    y_hi_ += 1;
  }
}

double PlotMapping::MapX(double x) const {
  return plot_.x + (x - x_lo_) / (x_hi_ - x_lo_) * plot_.width;
}

double PlotMapping::MapY(double y) const {
  return plot_.Bottom() - (y - y_lo_) / (y_hi_ - y_lo_) * plot_.height;
}

Point PlotMapping::Map(DataPoint p) const { return {MapX(p.x), MapY(p.y)}; }

double MarginFor(double extent) { return std::clamp(0.08 * extent, 4.0, 60.0); }

TextAnchor AnchorForSlot(LabelSlot slot) {
  switch (slot) {
    case LabelSlot::kNorthEast:
    case LabelSlot::kSouthEast: return TextAnchor::kStart;
    case LabelSlot::kNorthWest:
    case LabelSlot::kSouthWest: return TextAnchor::kEnd;
    case LabelSlot::kDefault: return TextAnchor::kMiddle;
  }
  return TextAnchor::kMiddle;
}

Rect LabelBoxForSlot(Point a, double width, double height, double gap, Size cell,
                     LabelSlot slot) {
  switch (slot) {
    case LabelSlot::kDefault:
      return {a.x - width / 2, a.y - gap - height, width, height};
    case LabelSlot::kNorthEast:
      return {a.x + cell.width, a.y - cell.height - height, width, height};
    case LabelSlot::kNorthWest:
      return {a.x - cell.width - width, a.y - cell.height - height, width, height};
    case LabelSlot::kSouthEast:
      return {a.x + cell.width, a.y + cell.height, width, height};
    case LabelSlot::kSouthWest:
      return {a.x - cell.width - width, a.y + cell.height, width, height};
  }
  return {};
}

Rect TextBoxAt(Point p, double width, const TextMetrics& text, TextAnchor anchor) {
  double left = p.x;
  if (anchor == TextAnchor::kMiddle) left = p.x - width / 2;
  if (anchor == TextAnchor::kEnd) left = p.x - width;
  return {left, p.y - text.Ascent(), width, text.LineHeight()};
}

Point TextAnchorPoint(const Rect& box, const TextMetrics& text, TextAnchor anchor) {
  double x = box.x;
  if (anchor == TextAnchor::kMiddle) x = box.x + box.width / 2;
  if (anchor == TextAnchor::kEnd) x = box.Right();
  return {x, box.y + text.Ascent()};
}

namespace {

Rect LineBox(Point a, Point b) { return Rect::FromCorners(a, b); }

void SetLine(Element& e, Point a, Point b) {
  e.vertices = {a, b};
  e.bbox = LineBox(a, b);
  e.anchor = e.bbox.Center();
}

void SetText(Element& e, const TextMetrics& m, Rect box, TextAnchor anchor) {
  e.font_size = m.font_size;
  e.bbox = box;
  e.text_anchor = anchor;
}

}  // namespace

LayoutResult LayoutElements(const ChartModel& model, Size target,
                            const TextMetrics& text) {
  if (!(target.width >= 2 && target.height >= 2)) {
    throw LayoutError("target " + std::to_string(target.width) + "x" +
                      std::to_string(target.height) +
                      " is smaller than 2x2 px");
  }
  LayoutResult out;
  out.canvas = {0, 0, target.width, target.height};
  out.text = text;

  double mx = MarginFor(target.width);
  double my = MarginFor(target.height);
  if (target.width - 2 * mx <= 0 || target.height - 2 * my <= 0) {
    out.warnings.push_back("target too small to host margins; using zero margins");
    mx = 0;
    my = 0;
  }
  const Rect plot{mx, my, target.width - 2 * mx, target.height - 2 * my};
  out.mapping = PlotMapping(plot, model.domain);
  const PlotMapping& map = out.mapping;

  const double f = text.font_size;
  const double lh = text.LineHeight();
  const double radius = std::max(0.5, RoundTo2(0.3 * f));
  const double tick_len = RoundTo2(0.4 * f);
  const double label_gap = radius + 2;
  const TextMetrics title = text.WithFontSize(RoundTo2(f * 1.25));

  out.elements = model.elements;
  for (Element& e : out.elements) {
    switch (e.layer) {
      case LayerKind::kDataLine: {
        e.vertices.clear();
        for (const DataPoint& p : e.data_vertices) e.vertices.push_back(map.Map(p));
        Rect hull{e.vertices.front().x, e.vertices.front().y, 0, 0};
        for (const Point& v : e.vertices) hull = Union(hull, {v.x, v.y, 0, 0});
        e.bbox = hull;
        e.anchor = hull.Center();
        break;
      }
      case LayerKind::kDataPoint: {
        e.anchor = map.Map(e.data);
        e.radius = radius;
        e.bbox = {e.anchor.x - radius, e.anchor.y - radius, 2 * radius, 2 * radius};
        break;
      }
      case LayerKind::kPointLabel:
      case LayerKind::kAnnotation: {
        e.anchor = map.Map(e.data);
        // Annotations stack above the value label of the same point.
        e.label_gap = e.layer == LayerKind::kAnnotation ? label_gap + lh + 1 : label_gap;
        e.slot = LabelSlot::kDefault;
        SetText(e, text,
                LabelBoxForSlot(e.anchor, text.Width(e.text), lh, e.label_gap, {},
                                LabelSlot::kDefault),
                TextAnchor::kMiddle);
        break;
      }
      case LayerKind::kAxisLine: {
        if (e.axis == AxisId::kX) {
          SetLine(e, {plot.Left(), plot.Bottom()}, {plot.Right(), plot.Bottom()});
        } else {
          SetLine(e, {plot.Left(), plot.Top()}, {plot.Left(), plot.Bottom()});
        }
        break;
      }
      case LayerKind::kTickMark: {
        if (e.axis == AxisId::kX) {
          double x = map.MapX(*e.value);
          SetLine(e, {x, plot.Bottom()}, {x, plot.Bottom() + tick_len});
        } else {
          double y = map.MapY(*e.value);
          SetLine(e, {plot.Left() - tick_len, y}, {plot.Left(), y});
        }
        break;
      }
      case LayerKind::kTickLabel: {
        const double w = text.Width(e.text);
        if (e.axis == AxisId::kX) {
          double x = map.MapX(*e.value);
          e.anchor = {x, plot.Bottom()};
          SetText(e, text, {x - w / 2, plot.Bottom() + tick_len + 2, w, lh},
                  TextAnchor::kMiddle);
        } else {
          double y = map.MapY(*e.value);
          e.anchor = {plot.Left(), y};
          SetText(e, text, {plot.Left() - tick_len - 2 - w, y - lh / 2, w, lh},
                  TextAnchor::kEnd);
        }
        break;
      }
      case LayerKind::kGridline: {
        double y = map.MapY(*e.value);
        SetLine(e, {plot.Left(), y}, {plot.Right(), y});
        break;
      }
      case LayerKind::kAxisTitle: {
        const double w = text.Width(e.text);
        if (e.axis == AxisId::kX) {
          double top = plot.Bottom() + tick_len + 2 + lh + 2;
          SetText(e, text, {plot.x + plot.width / 2 - w / 2, top, w, lh},
                  TextAnchor::kMiddle);
        } else {
          SetText(e, text, {plot.Left(), plot.Top() - 2 - lh, w, lh},
                  TextAnchor::kStart);
        }
        e.anchor = e.bbox.Center();
        break;
      }
      case LayerKind::kChartTitle: {
        const double w = title.Width(e.text);
        SetText(e, title, {target.width / 2 - w / 2, 2, w, title.LineHeight()},
                TextAnchor::kMiddle);
        e.anchor = e.bbox.Center();
        break;
      }
      case LayerKind::kReferenceLine:
        break;
    }
  }
  return out;
}

}  // namespace chartgen
