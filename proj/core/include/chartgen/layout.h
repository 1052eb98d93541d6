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

#ifndef CHARTGEN_LAYOUT_H_
#define CHARTGEN_LAYOUT_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "chartgen/chart_model.h"
#include "chartgen/element.h"
#include "chartgen/geometry.h"
#include "chartgen/text_metrics.h"

namespace chartgen {

// Target cannot host a chart at all (smaller than 2x2 px).
class LayoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Linear data-to-pixel map into the plot area. y is flipped so larger data
// values sit higher on screen.
class PlotMapping {
 public:
  PlotMapping() = default;
  PlotMapping(Rect plot, const DataDomain& domain);

  Point Map(DataPoint p) const;
  double MapX(double x) const;
  double MapY(double y) const;
  const Rect& plot() const { return plot_; }

 private:
  Rect plot_;
  double x_lo_ = 0, x_hi_ = 1, y_lo_ = 0, y_hi_ = 1;
};

// 8% of each dimension, clamped to [4, 60] px.
double MarginFor(double extent);

struct LayoutResult {
  std::vector<Element> elements;
  Rect canvas;
  PlotMapping mapping;
  TextMetrics text;
  std::vector<std::string> warnings;
};

// Places every element of `model` at `target`. Deterministic. Throws
// LayoutError when the target is smaller than 2x2 px; a target too small for
// margins is laid out with zero margins and a warning.
LayoutResult LayoutElements(const ChartModel& model, Size target,
                            const TextMetrics& text);

// Box of a `width` x `height` label anchored at `anchor`. The default slot is
// centred above the anchor `gap` px away; diagonal slots put the box's near
// corner one `cell` diagonal away from the anchor.
Rect LabelBoxForSlot(Point anchor, double width, double height, double gap,
                     Size cell, LabelSlot slot);

// Text points away from the anchor: east slots start, west slots end.
TextAnchor AnchorForSlot(LabelSlot slot);

// Bounding box of a text line whose anchor point (SVG x, baseline y) is
// given. Inverse of the placement used by the renderer.
Rect TextBoxAt(Point anchor_point, double width, const TextMetrics& text,
               TextAnchor anchor);

// Anchor point (SVG x, baseline y) for a text box.
Point TextAnchorPoint(const Rect& box, const TextMetrics& text,
                      TextAnchor anchor);

}  // namespace chartgen

#endif  // CHARTGEN_LAYOUT_H_
