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

#ifndef CHARTGEN_PIPELINE_H_
#define CHARTGEN_PIPELINE_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chartgen/chart_spec.h"
#include "chartgen/config.h"
#include "chartgen/element.h"
#include "chartgen/metrics.h"
#include "chartgen/operators.h"

namespace chartgen {

// Post-pipeline element set with its audit log.
struct GeneralizedChart {
  Size target;
  std::vector<Element> elements;
  std::vector<OperatorLogEntry> log;
  ConstraintReport report;
  // Constraints still fail and nothing eliminable is left.
  bool exhausted = false;
  int passes = 0;
  std::vector<std::string> warnings;
  // Wall time of Generalize. Not part of the serialized form.
  double elapsed_ms = 0;

  int VisibleCount() const;
};

// Lays out `spec` at `target` and runs the operator loop (simplify, merge
// ticks, jitter + eliminate, semantic transition) until the constraints hold,
// nothing changes, or config.max_passes is reached. Deterministic for fixed
// inputs. Throws LayoutError for targets below 2x2 px.
GeneralizedChart Generalize(const ChartSpec& spec, Size target,
                            const EngineConfig& config);

struct SweepEntry {
  Size target;
  std::optional<GeneralizedChart> chart;
  // Set when the target failed; the sweep carries on.
  std::string error;
};

std::vector<SweepEntry> SizeSweep(const ChartSpec& spec, std::span<const Size> targets,
                                  const EngineConfig& config);

struct LayerAreaRatio {
  LayerKind layer = LayerKind::kDataLine;
  int count = 0;
  // Summed bbox area of the layer's visible elements over the display area.
  double area_ratio = 0;
};

// Spatial metrics of the laid-out chart before any operator runs.
struct ChartMetrics {
  Size target;
  GridDims dims;
  double max_cell_density = 0;
  double mean_cell_density = 0;
  double collision_area = 0;
  std::vector<LayerAreaRatio> layers;
  ConstraintReport report;
  int visible = 0;
};

ChartMetrics ComputeMetrics(const ChartSpec& spec, Size target,
                            const EngineConfig& config);

}  // namespace chartgen

#endif  // CHARTGEN_PIPELINE_H_
