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

#include "chartgen/element.h"

namespace chartgen {

std::string_view ToString(LayerKind layer) {
  switch (layer) {
    case LayerKind::kDataLine: return "DataLine";
    case LayerKind::kDataPoint: return "DataPoint";
    case LayerKind::kPointLabel: return "PointLabel";
    case LayerKind::kAnnotation: return "Annotation";
    case LayerKind::kAxisLine: return "AxisLine";
    case LayerKind::kTickMark: return "TickMark";
    case LayerKind::kTickLabel: return "TickLabel";
    case LayerKind::kAxisTitle: return "AxisTitle";
    case LayerKind::kChartTitle: return "ChartTitle";
    case LayerKind::kGridline: return "Gridline";
    case LayerKind::kReferenceLine: return "ReferenceLine";
  }
  return "?";
}

std::string_view ToString(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::kFirst: return "First";
    case FeatureKind::kLast: return "Last";
    case FeatureKind::kGlobalMax: return "GlobalMax";
    case FeatureKind::kGlobalMin: return "GlobalMin";
    case FeatureKind::kLocalMax: return "LocalMax";
    case FeatureKind::kLocalMin: return "LocalMin";
    case FeatureKind::kIntermediate: return "Intermediate";
  }
  return "?";
}

std::string_view ToString(TextAnchor anchor) {
  switch (anchor) {
    case TextAnchor::kStart: return "start";
    case TextAnchor::kMiddle: return "middle";
    case TextAnchor::kEnd: return "end";
  }
  return "?";
}

std::string_view ToString(LabelSlot slot) {
  switch (slot) {
    case LabelSlot::kDefault: return "default";
    case LabelSlot::kNorthWest: return "NW";
    case LabelSlot::kNorthEast: return "NE";
    case LabelSlot::kSouthWest: return "SW";
    case LabelSlot::kSouthEast: return "SE";
  }
  return "?";
}

bool IsTextLayer(LayerKind layer) {
  switch (layer) {
    case LayerKind::kPointLabel:
    case LayerKind::kAnnotation:
    case LayerKind::kTickLabel:
    case LayerKind::kAxisTitle:
    case LayerKind::kChartTitle:
      return true;
    default:
      return false;
  }
}

bool IsConflictLabelLayer(LayerKind layer) {
  return layer == LayerKind::kPointLabel || layer == LayerKind::kAnnotation ||
         layer == LayerKind::kTickLabel;
}

}  // namespace chartgen
