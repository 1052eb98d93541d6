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

#include "chartgen/svg.h"

#include <algorithm>
#include <cstdio>
#include <string_view>
#include <vector>

#include "chartgen/layout.h"
#include "chartgen/text_metrics.h"

namespace chartgen {
namespace {

int ZOrder(LayerKind layer) {
  switch (layer) {
    case LayerKind::kGridline: return 0;
    case LayerKind::kAxisLine:
    case LayerKind::kTickMark: return 1;
    case LayerKind::kReferenceLine: return 2;
    case LayerKind::kDataLine: return 3;
    case LayerKind::kDataPoint: return 4;
    default: return 5;
  }
}

constexpr std::string_view kGroupNames[] = {"gridlines", "axes", "reference",
                                            "data-lines", "data-points", "labels"};

void AppendEscaped(std::string& out, std::string_view text) {
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
}

std::string_view Anchor(TextAnchor a) {
  switch (a) {
    case TextAnchor::kStart: return "start";
    case TextAnchor::kEnd: return "end";
    case TextAnchor::kMiddle: return "middle";
  }
  return "middle";
}

void AppendElement(std::string& out, const Element& e) {
  const auto n = FormatCoordinate;
  switch (e.layer) {
    case LayerKind::kDataLine: {
      if (e.vertices.empty()) return;
      out += "<path d=\"";
      for (size_t i = 0; i < e.vertices.size(); ++i) {
        out += i == 0 ? "M" : " L";
        out += n(e.vertices[i].x) + " " + n(e.vertices[i].y);
      }
      out += "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
      return;
    }
    case LayerKind::kDataPoint:
      out += "<circle cx=\"" + n(e.anchor.x) + "\" cy=\"" + n(e.anchor.y) + "\" r=\"" +
             n(e.radius) + "\" fill=\"#1f77b4\"/>\n";
      return;
    case LayerKind::kGridline:
    case LayerKind::kAxisLine:
    case LayerKind::kTickMark:
    case LayerKind::kReferenceLine: {
      if (e.vertices.size() < 2) return;
      const char* stroke = e.layer == LayerKind::kGridline        ? "#e0e0e0"
                           : e.layer == LayerKind::kReferenceLine ? "#888888"
                                                                  : "#333333";
      out += "<line x1=\"" + n(e.vertices[0].x) + "\" y1=\"" + n(e.vertices[0].y) +
             "\" x2=\"" + n(e.vertices[1].x) + "\" y2=\"" + n(e.vertices[1].y) +
             "\" stroke=\"" + stroke + "\" stroke-width=\"1\"";
      if (e.layer == LayerKind::kReferenceLine) out += " stroke-dasharray=\"2 2\"";
      out += "/>\n";
      return;
    }
    default: {
      const TextMetrics text{e.font_size};
      const Point p = TextAnchorPoint(e.bbox, text, e.text_anchor);
      out += "<text x=\"" + n(p.x) + "\" y=\"" + n(p.y) + "\" font-family=\"sans-serif\"" +
             " font-size=\"" + n(e.font_size) + "\" text-anchor=\"" +
             std::string(Anchor(e.text_anchor)) + "\" fill=\"#222222\">";
      AppendEscaped(out, e.text);
      out += "</text>\n";
      return;
    }
  }
}

}  // namespace

std::string FormatCoordinate(double v) {
  double r = RoundTo2(v);
  if (r == 0) r = 0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", r);
  return buf;
}

std::string RenderSvg(std::span<const Element> elements, Size target) {
  std::vector<const Element*> visible;
  for (const Element& e : elements) {
    if (e.visible) visible.push_back(&e);
  }
  std::stable_sort(visible.begin(), visible.end(), [](const Element* a, const Element* b) {
    return ZOrder(a->layer) < ZOrder(b->layer);
  });

  const std::string w = FormatCoordinate(target.width);
  const std::string h = FormatCoordinate(target.height);
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w +
         "\" height=\"" + h + "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
  int open_group = -1;
  for (const Element* e : visible) {
    const int z = ZOrder(e->layer);
    if (z != open_group) {
      if (open_group >= 0) out += "</g>\n";
      out += "<g id=\"" + std::string(kGroupNames[z]) + "\">\n";
      open_group = z;
    }
    AppendElement(out, *e);
  }
  if (open_group >= 0) out += "</g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace chartgen
