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

#ifndef CHARTGEN_ELEMENT_H_
#define CHARTGEN_ELEMENT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chartgen/chart_spec.h"
#include "chartgen/geometry.h"

namespace chartgen {

enum class LayerKind {
  kDataLine,
  kDataPoint,
  kPointLabel,
  kAnnotation,
  kAxisLine,
  kTickMark,
  kTickLabel,
  kAxisTitle,
  kChartTitle,
  kGridline,
  kReferenceLine,
};

enum class FeatureKind {
  kFirst,
  kLast,
  kGlobalMax,
  kGlobalMin,
  kLocalMax,
  kLocalMin,
  kIntermediate,
};

enum class TextAnchor { kStart, kMiddle, kEnd };

enum class AxisId { kX, kY };

// Candidate label positions around an anchor. The four diagonal slots sit one
// density-cell diagonal away from the anchor.
enum class LabelSlot { kDefault, kNorthWest, kNorthEast, kSouthWest, kSouthEast };

std::string_view ToString(LayerKind layer);
std::string_view ToString(FeatureKind kind);
std::string_view ToString(TextAnchor anchor);
std::string_view ToString(LabelSlot slot);

bool IsTextLayer(LayerKind layer);
// Layers whose members are checked for overlap conflicts: point labels,
// annotations and tick labels.
bool IsConflictLabelLayer(LayerKind layer);

// One positioned chart primitive. Data-space fields are filled when the
// element set is built; pixel geometry is filled by layout.
struct Element {
  int id = 0;
  LayerKind layer = LayerKind::kDataLine;
  double importance = 0;
  bool visible = true;

  // Pixel geometry.
  Rect bbox;
  Point anchor;
  // Polyline vertices for data/reference lines, or the two end points of
  // axis, tick and grid lines.
  std::vector<Point> vertices;
  double radius = 0;

  // Text payload.
  std::string text;
  double font_size = 0;
  TextAnchor text_anchor = TextAnchor::kMiddle;
  LabelSlot slot = LabelSlot::kDefault;
  double label_gap = 0;

  // Data linkage.
  int series = -1;
  int point_index = -1;
  std::optional<FeatureKind> feature;
  DataPoint data;
  std::vector<DataPoint> data_vertices;
  // Numeric value carried by a label (data y, tick value, extremum).
  std::optional<double> value;

  // Axis linkage.
  std::optional<AxisId> axis;
  int tick_index = -1;

  // Inserted by a semantic transition as a stand-in for removed elements.
  bool surrogate = false;
};

}  // namespace chartgen

#endif  // CHARTGEN_ELEMENT_H_
