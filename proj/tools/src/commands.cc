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

#include "chartgen_tools/commands.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "chartgen/chart_spec.h"
#include "chartgen/layout.h"
#include "chartgen/pipeline.h"
#include "chartgen/serialize.h"
#include "chartgen/svg.h"

namespace chartgen::tools {
namespace {

namespace fs = std::filesystem;

void WriteFile(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  f << content;
  if (!f) throw std::runtime_error("cannot write " + path.string());
}

bool ValidSize(double w, double h, std::ostream& err) {
  if (w > 0 && h > 0) return true;
  err << "error: --width and --height must be positive (got " << w << "x" << h << ")\n";
  return false;
}

// Runs `body` translating engine exceptions into exit codes.
template <typename F>
int Guard(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const LayoutError& e) {
    err << "error: layout failed: " << e.what() << "\n";
    return kExitLayout;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

std::string ReadFile(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("", "cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

EngineConfig LoadConfig(const std::optional<std::string>& path) {
  std::optional<std::string> source = path;
  if (!source) {
    if (const char* env = std::getenv("CHARTGEN_CONFIG"); env != nullptr && *env != 0) {
      source = env;
    }
  }
  if (!source) return EngineConfig{};
  try {
    return ParseEngineConfig(ReadFile(*source));
  } catch (const ParseError& e) {
    throw ParseError(e.path(), std::string("config ") + *source + ": " +
                                   (e.path().empty() ? e.what()
                                                     : std::string(e.what()).substr(
                                                           e.path().size() + 2)));
  }
}

int RunGeneralize(const GeneralizeOptions& o, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    ChartSpec spec = ParseChartSpec(ReadFile(o.input));
    EngineConfig config = LoadConfig(o.config);
    if (o.seed) config.seed = *o.seed;
    if (!ValidSize(o.width, o.height, err)) return kExitLayout;
    GeneralizedChart chart = Generalize(spec, {o.width, o.height}, config);
    const std::string svg = RenderSvg(chart);
    if (o.output.empty()) {
      out << svg;
      return kExitOk;
    }
    fs::path svg_path(o.output);
    fs::path json_path = svg_path;
    json_path.replace_extension(".json");
    WriteFile(svg_path, svg);
    WriteFile(json_path, SerializeChart(chart) + "\n");
    return kExitOk;
  });
}

int RunMetrics(const MetricsOptions& o, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    ChartSpec spec = ParseChartSpec(ReadFile(o.input));
    EngineConfig config = LoadConfig(o.config);
    if (!ValidSize(o.width, o.height, err)) return kExitLayout;
    out << SerializeMetrics(ComputeMetrics(spec, {o.width, o.height}, config)) << "\n";
    return kExitOk;
  });
}

std::vector<Size> ParseSizeList(const std::string& text) {
  std::vector<Size> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const size_t x = item.find('x');
    Size s;
    try {
      if (x == std::string::npos) throw std::invalid_argument(item);
      size_t used_w = 0;
      size_t used_h = 0;
      s.width = std::stod(item.substr(0, x), &used_w);
      s.height = std::stod(item.substr(x + 1), &used_h);
      if (used_w != x || used_h != item.size() - x - 1) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("sizes", "expected WxH, got \"" + item + "\"");
    }
    sizes.push_back(s);
  }
  if (sizes.empty()) throw ParseError("sizes", "no sizes given");
  return sizes;
}

int RunSweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    ChartSpec spec = ParseChartSpec(ReadFile(o.input));
    EngineConfig config = LoadConfig(o.config);
    if (o.seed) config.seed = *o.seed;
    const std::string stem = fs::path(o.input).stem().string();
    int status = kExitOk;
    for (const SweepEntry& entry : SizeSweep(spec, o.targets, config)) {
      std::ostringstream name;
      name << stem << "_" << entry.target.width << "x" << entry.target.height;
      if (!entry.chart) {
        err << "error: " << name.str() << ": " << entry.error << "\n";
        status = kExitLayout;
        continue;
      }
      const GeneralizedChart& chart = *entry.chart;
      out << name.str() << " visible=" << chart.VisibleCount()
          << " satisfied=" << (chart.report.satisfied ? "true" : "false")
          << " passes=" << chart.passes << " operators=" << chart.log.size() << "\n";
      if (!o.output_dir.empty()) {
        fs::create_directories(o.output_dir);
        WriteFile(fs::path(o.output_dir) / (name.str() + ".svg"), RenderSvg(chart));
        WriteFile(fs::path(o.output_dir) / (name.str() + ".json"),
                  SerializeChart(chart) + "\n");
      }
    }
    return status;
  });
}

}  // namespace chartgen::tools
