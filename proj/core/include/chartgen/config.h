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

#ifndef CHARTGEN_CONFIG_H_
#define CHARTGEN_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "chartgen/chart_model.h"
#include "chartgen/metrics.h"
#include "chartgen/operators.h"
#include "chartgen/quadtree.h"
#include "chartgen/text_metrics.h"

namespace chartgen {

// Every free parameter of the engine. Defaults are the documented values.
struct EngineConfig {
  ConstraintThresholds thresholds;
  double gap_min_px = 4;
  EliminationWeights weights;
  AnnealingParams annealing;
  EliminationOrder elimination_order = EliminationOrder::kHighestScoreFirst;
  double extrema_retention = 0.6;
  double sparkline_area_px = 150000;
  double cell_size_px = 32;
  QuadtreeParams quadtree;
  uint64_t seed = 42;
  int max_passes = 10;
  Typography typography;
  ImportanceTable importance;
};

// Parses a JSON config document; every field is optional. Throws ParseError
// on unknown keys, wrong types or invalid values.
EngineConfig ParseEngineConfig(std::string_view document);

// Applies a (possibly partial) JSON object on top of `base`. Same errors as
// ParseEngineConfig, with paths prefixed by `path_prefix`.
EngineConfig ApplyConfigOverrides(const EngineConfig& base, std::string_view document,
                                  std::string_view path_prefix = "");

// Throws ParseError when a value is out of range.
void ValidateEngineConfig(const EngineConfig& config);

// JSON form of `config`, accepted by ParseEngineConfig.
std::string SerializeEngineConfig(const EngineConfig& config);

}  // namespace chartgen

#endif  // CHARTGEN_CONFIG_H_
