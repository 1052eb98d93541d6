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

#include "chartgen/chart_spec.h"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <string>

#include "json.hpp"

namespace chartgen {
namespace {

using nlohmann::json;

std::string Index(const std::string& path, size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

std::string Field(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

void RejectUnknownKeys(const json& obj, const std::string& path,
                       std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ParseError(Field(path, key), "unknown key");
    }
  }
}

const json& RequireObject(const json& v, const std::string& path) {
  if (!v.is_object()) throw ParseError(path, "expected object");
  return v;
}

const json& Require(const json& obj, const std::string& path,
                    std::string_view key) {
  auto it = obj.find(std::string(key));
  if (it == obj.end()) throw ParseError(Field(path, key), "missing field");
  return *it;
}

double ReadNumber(const json& v, const std::string& path) {
  if (!v.is_number()) throw ParseError(path, "expected number");
  double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(path, "expected finite number");
  return d;
}

std::string ReadString(const json& v, const std::string& path) {
  if (!v.is_string()) throw ParseError(path, "expected string");
  return v.get<std::string>();
}

AxisSpec ReadAxis(const json& v, const std::string& path) {
  RequireObject(v, path);
  RejectUnknownKeys(v, path, {"title", "type", "tickCount"});
  AxisSpec axis;
  if (auto it = v.find("title"); it != v.end()) {
    axis.title = ReadString(*it, Field(path, "title"));
  }
  if (auto it = v.find("type"); it != v.end()) {
    std::string type = ReadString(*it, Field(path, "type"));
    if (type == "linear") {
      axis.type = AxisType::kLinear;
    } else if (type == "time") {
      axis.type = AxisType::kTime;
    } else {
      throw ParseError(Field(path, "type"), "expected \"linear\" or \"time\"");
    }
  }
  if (auto it = v.find("tickCount"); it != v.end()) {
    if (!it->is_number_integer() || it->get<int>() < 2) {
      throw ParseError(Field(path, "tickCount"), "expected integer >= 2");
    }
    axis.tick_count = it->get<int>();
  }
  return axis;
}

}  // namespace

ChartSpec ParseChartSpec(std::string_view document) {
  json root;
  try {
    root = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
  RequireObject(root, "");
  RejectUnknownKeys(root, "",
                    {"title", "series", "xAxis", "yAxis", "annotations",
                     "originalSize"});

  ChartSpec spec;
  if (auto it = root.find("title"); it != root.end()) {
    spec.title = ReadString(*it, "title");
  }

  const json& series = Require(root, "", "series");
  if (!series.is_array()) throw ParseError("series", "expected array");
  for (size_t s = 0; s < series.size(); ++s) {
    const std::string spath = Index("series", s);
    const json& sj = RequireObject(series[s], spath);
    RejectUnknownKeys(sj, spath, {"name", "points"});
    Series out;
    if (auto it = sj.find("name"); it != sj.end()) {
      out.name = ReadString(*it, Field(spath, "name"));
    }
    const std::string ppath = Field(spath, "points");
    const json& points = Require(sj, spath, "points");
    if (!points.is_array()) throw ParseError(ppath, "expected array");
    for (size_t i = 0; i < points.size(); ++i) {
      const std::string path = Index(ppath, i);
      const json& pj = RequireObject(points[i], path);
      RejectUnknownKeys(pj, path, {"x", "y"});
      out.points.push_back({ReadNumber(Require(pj, path, "x"), Field(path, "x")),
                            ReadNumber(Require(pj, path, "y"), Field(path, "y"))});
    }
    spec.series.push_back(std::move(out));
  }

  if (auto it = root.find("xAxis"); it != root.end()) {
    spec.x_axis = ReadAxis(*it, "xAxis");
  }
  if (auto it = root.find("yAxis"); it != root.end()) {
    spec.y_axis = ReadAxis(*it, "yAxis");
  }

  if (auto it = root.find("annotations"); it != root.end()) {
    if (!it->is_array()) throw ParseError("annotations", "expected array");
    for (size_t a = 0; a < it->size(); ++a) {
      const std::string path = Index("annotations", a);
      const json& aj = RequireObject((*it)[a], path);
      RejectUnknownKeys(aj, path, {"x", "y", "text", "importance"});
      Annotation note;
      note.anchor = {ReadNumber(Require(aj, path, "x"), Field(path, "x")),
                     ReadNumber(Require(aj, path, "y"), Field(path, "y"))};
      note.text = ReadString(Require(aj, path, "text"), Field(path, "text"));
      if (auto imp = aj.find("importance"); imp != aj.end()) {
        note.importance = ReadNumber(*imp, Field(path, "importance"));
      }
      spec.annotations.push_back(std::move(note));
    }
  }

  if (auto it = root.find("originalSize"); it != root.end()) {
    const json& sz = RequireObject(*it, "originalSize");
    RejectUnknownKeys(sz, "originalSize", {"width", "height"});
    spec.original_size = {
        ReadNumber(Require(sz, "originalSize", "width"), "originalSize.width"),
        ReadNumber(Require(sz, "originalSize", "height"),
                   "originalSize.height")};
  }

  ValidateChartSpec(spec);
  return spec;
}

void ValidateChartSpec(const ChartSpec& spec) {
  if (spec.series.empty()) throw ParseError("series", "no series");
  for (size_t s = 0; s < spec.series.size(); ++s) {
    const auto& pts = spec.series[s].points;
    const std::string ppath = Index("series", s) + ".points";
    if (pts.empty()) throw ParseError(ppath, "empty series");
    if (pts.size() < 2) throw ParseError(ppath, "series needs at least 2 points");
    for (size_t i = 1; i < pts.size(); ++i) {
      if (!(pts[i].x > pts[i - 1].x)) {
        throw ParseError(Index(ppath, i) + ".x", "non-increasing x");
      }
    }
  }
  if (!(spec.original_size.width > 0)) {
    throw ParseError("originalSize.width", "must be > 0");
  }
  if (!(spec.original_size.height > 0)) {
    throw ParseError("originalSize.height", "must be > 0");
  }
  DataDomain d = ComputeDomain(spec);
  for (size_t a = 0; a < spec.annotations.size(); ++a) {
    const auto& note = spec.annotations[a];
    const std::string path = Index("annotations", a);
    if (note.anchor.x < d.x_min || note.anchor.x > d.x_max ||
        note.anchor.y < d.y_min || note.anchor.y > d.y_max) {
      throw ParseError(path, "anchor outside the data domain");
    }
    if (note.importance && (*note.importance < 0 || *note.importance > 1)) {
      throw ParseError(path + ".importance", "must lie in [0, 1]");
    }
  }
}

DataDomain ComputeDomain(const ChartSpec& spec) {
  DataDomain d{std::numeric_limits<double>::infinity(),
               -std::numeric_limits<double>::infinity(),
               std::numeric_limits<double>::infinity(),
               -std::numeric_limits<double>::infinity()};
  for (const auto& series : spec.series) {
    for (const auto& p : series.points) {
      d.x_min = std::min(d.x_min, p.x);
      d.x_max = std::max(d.x_max, p.x);
      d.y_min = std::min(d.y_min, p.y);
      d.y_max = std::max(d.y_max, p.y);
    }
  }
  return d;
}

}  // namespace chartgen
