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

#include "chartgen/config.h"

#include <algorithm>
#include <cmath>
#include <initializer_list>

#include "json.hpp"

namespace chartgen {
namespace {

using nlohmann::json;

std::string Field(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

// Reads the members of one JSON object, rejecting keys nobody asked for.
class ObjectReader {
 public:
  ObjectReader(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
    if (!obj_.is_object()) throw ParseError(path_, "expected object");
  }

  // Rejects keys that no reader call asked for.
  void Finish() const {
    for (const auto& [key, value] : obj_.items()) {
      if (std::find(seen_.begin(), seen_.end(), key) == seen_.end()) {
        throw ParseError(Field(path_, key), "unknown key");
      }
    }
  }

  const json* Get(std::string_view key) {
    seen_.emplace_back(key);
    auto it = obj_.find(std::string(key));
    return it == obj_.end() ? nullptr : &*it;
  }

  void Number(std::string_view key, double& out) {
    if (const json* v = Get(key)) {
      if (!v->is_number() || !std::isfinite(v->get<double>())) {
        throw ParseError(Field(path_, key), "expected finite number");
      }
      out = v->get<double>();
    }
  }

  void Integer(std::string_view key, int& out) {
    if (const json* v = Get(key)) {
      if (!v->is_number_integer()) throw ParseError(Field(path_, key), "expected integer");
      out = v->get<int>();
    }
  }

  void Unsigned(std::string_view key, uint64_t& out) {
    if (const json* v = Get(key)) {
      if (!v->is_number_unsigned()) {
        throw ParseError(Field(path_, key), "expected non-negative integer");
      }
      out = v->get<uint64_t>();
    }
  }

  template <typename F>
  void Object(std::string_view key, F&& read) {
    if (const json* v = Get(key)) {
      ObjectReader nested(*v, Field(path_, key));
      read(nested);
      nested.Finish();
    }
  }

  std::string path(std::string_view key) const { return Field(path_, key); }

 private:
  const json& obj_;
  std::string path_;
  std::vector<std::string> seen_;
};

void Read(ObjectReader& r, EngineConfig& c) {
  r.Object("thresholds", [&](ObjectReader& t) {
    t.Number("densityPerCell", c.thresholds.max_cell_density);
    t.Number("minFontPx", c.thresholds.min_font_px);
    t.Number("gapMinPx", c.gap_min_px);
    t.Number("minAnchorDistanceEm", c.thresholds.min_anchor_distance_em);
  });
  r.Object("weights", [&](ObjectReader& w) {
    w.Number("importance", c.weights.importance);
    w.Number("density", c.weights.density);
    w.Number("overlap", c.weights.overlap);
  });
  r.Object("annealing", [&](ObjectReader& a) {
    a.Number("initialTemperature", c.annealing.initial_temperature);
    a.Number("decay", c.annealing.decay);
    a.Integer("iterations", c.annealing.iterations);
  });
  r.Number("extremaRetention", c.extrema_retention);
  r.Number("sparklineAreaPx", c.sparkline_area_px);
  r.Number("cellSizePx", c.cell_size_px);
  r.Object("quadtree", [&](ObjectReader& q) {
    q.Integer("bucketSize", c.quadtree.bucket_size);
    q.Integer("maxDepth", c.quadtree.max_depth);
  });
  r.Unsigned("seed", c.seed);
  r.Integer("maxPasses", c.max_passes);
  if (const json* v = r.Get("eliminationOrder")) {
    const std::string order = v->is_string() ? v->get<std::string>() : "";
    if (order == "highestScoreFirst") {
      c.elimination_order = EliminationOrder::kHighestScoreFirst;
    } else if (order == "lowestScoreFirst") {
      c.elimination_order = EliminationOrder::kLowestScoreFirst;
    } else {
      throw ParseError(r.path("eliminationOrder"),
                       "expected \"highestScoreFirst\" or \"lowestScoreFirst\"");
    }
  }
  r.Object("typography", [&](ObjectReader& t) {
    t.Number("fontScale", c.typography.font_scale);
    t.Number("maxFontPx", c.typography.max_font_px);
  });
}

void RequirePositive(double v, const char* path) {
  if (!(v > 0)) throw ParseError(path, "must be > 0");
}

}  // namespace

EngineConfig ApplyConfigOverrides(const EngineConfig& base, std::string_view document,
                                  std::string_view path_prefix) {
  json root;
  try {
    root = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(path_prefix), std::string("malformed JSON: ") + e.what());
  }
  EngineConfig config = base;
  {
    ObjectReader reader(root, std::string(path_prefix));
    Read(reader, config);
    reader.Finish();
  }
  try {
    ValidateEngineConfig(config);
  } catch (const ParseError& e) {
    if (path_prefix.empty()) throw;
    const std::string message = std::string(e.what()).substr(e.path().size() + 2);
    throw ParseError(Field(std::string(path_prefix), e.path()), message);
  }
  return config;
}

EngineConfig ParseEngineConfig(std::string_view document) {
  return ApplyConfigOverrides(EngineConfig{}, document);
}

void ValidateEngineConfig(const EngineConfig& c) {
  RequirePositive(c.thresholds.max_cell_density, "thresholds.densityPerCell");
  RequirePositive(c.thresholds.min_font_px, "thresholds.minFontPx");
  RequirePositive(c.gap_min_px, "thresholds.gapMinPx");
  RequirePositive(c.thresholds.min_anchor_distance_em, "thresholds.minAnchorDistanceEm");
  try {
    (void)c.weights.Normalized();
  } catch (const std::invalid_argument& e) {
    throw ParseError("weights", e.what());
  }
  RequirePositive(c.annealing.initial_temperature, "annealing.initialTemperature");
  if (!(c.annealing.decay > 0 && c.annealing.decay <= 1)) {
    throw ParseError("annealing.decay", "must lie in (0, 1]");
  }
  if (c.annealing.iterations < 0) {
    throw ParseError("annealing.iterations", "must be >= 0");
  }
  if (!(c.extrema_retention >= 0 && c.extrema_retention <= 1)) {
    throw ParseError("extremaRetention", "must lie in [0, 1]");
  }
  RequirePositive(c.sparkline_area_px, "sparklineAreaPx");
  RequirePositive(c.cell_size_px, "cellSizePx");
  if (c.quadtree.bucket_size < 1) throw ParseError("quadtree.bucketSize", "must be >= 1");
  if (c.quadtree.max_depth < 0) throw ParseError("quadtree.maxDepth", "must be >= 0");
  if (c.max_passes < 1) throw ParseError("maxPasses", "must be >= 1");
  RequirePositive(c.typography.font_scale, "typography.fontScale");
  RequirePositive(c.typography.max_font_px, "typography.maxFontPx");
}

std::string SerializeEngineConfig(const EngineConfig& c) {
  json j = {
      {"thresholds",
       {{"densityPerCell", c.thresholds.max_cell_density},
        {"minFontPx", c.thresholds.min_font_px},
        {"gapMinPx", c.gap_min_px},
        {"minAnchorDistanceEm", c.thresholds.min_anchor_distance_em}}},
      {"weights",
       {{"importance", c.weights.importance},
        {"density", c.weights.density},
        {"overlap", c.weights.overlap}}},
      {"annealing",
       {{"initialTemperature", c.annealing.initial_temperature},
        {"decay", c.annealing.decay},
        {"iterations", c.annealing.iterations}}},
      {"extremaRetention", c.extrema_retention},
      {"sparklineAreaPx", c.sparkline_area_px},
      {"cellSizePx", c.cell_size_px},
      {"quadtree",
       {{"bucketSize", c.quadtree.bucket_size}, {"maxDepth", c.quadtree.max_depth}}},
      {"seed", c.seed},
      {"maxPasses", c.max_passes},
      {"eliminationOrder", c.elimination_order == EliminationOrder::kHighestScoreFirst
                               ? "highestScoreFirst"
                               : "lowestScoreFirst"},
      {"typography",
       {{"fontScale", c.typography.font_scale}, {"maxFontPx", c.typography.max_font_px}}},
  };
  return j.dump(2);
}

}  // namespace chartgen
