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

#ifndef CHARTGEN_CHART_MODEL_H_
#define CHARTGEN_CHART_MODEL_H_

#include <vector>

#include "chartgen/chart_spec.h"
#include "chartgen/element.h"
#include "chartgen/ticks.h"

namespace chartgen {

// Classifies every point of a series. Interior points are LocalMax/LocalMin
// only under strict inequality with both neighbours; the first occurrence of
// the global maximum/minimum overrides local kinds; First/Last override all.
std::vector<FeatureKind> ClassifyFeaturePoints(const Series& series);

// Default semantic importance per layer (and per feature kind for point
// labels and markers).
struct ImportanceTable {
  double data_line = 1.0;
  double endpoint_label = 0.9;
  double global_extremum_label = 0.9;
  double local_extremum_label = 0.75;
  double intermediate_label = 0.25;
  double endpoint_marker = 0.95;
  double global_extremum_marker = 0.95;
  double local_extremum_marker = 0.8;
  double intermediate_marker = 0.3;
  double annotation = 0.7;
  double chart_title = 0.65;
  double axis_line = 0.5;
  double axis_title = 0.45;
  double tick_label = 0.4;
  double tick_mark = 0.35;
  double gridline = 0.1;
  double transition = 0.85;

  double PointLabel(FeatureKind kind) const;
  double Marker(FeatureKind kind) const;
};

// The chart's element set in data space: ids are dense (elements[i].id == i)
// and every element carries its importance. Pixel geometry is left empty.
struct ChartModel {
  std::vector<Element> elements;
  DataDomain domain;
  TickSet x_ticks;
  TickSet y_ticks;
};

ChartModel AssignImportance(const ChartSpec& spec,
                            const ImportanceTable& table = {});

}  // namespace chartgen

#endif  // CHARTGEN_CHART_MODEL_H_
