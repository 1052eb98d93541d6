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

#ifndef CHARTGEN_TOOLS_COMMANDS_H_
#define CHARTGEN_TOOLS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "chartgen/config.h"
#include "chartgen/geometry.h"

namespace chartgen::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitLayout = 3;

// Reads a whole file. Throws ParseError (empty path) when it cannot be read.
std::string ReadFile(const std::string& path);

// Config from `path`, else from $CHARTGEN_CONFIG, else defaults. Throws
// ParseError.
EngineConfig LoadConfig(const std::optional<std::string>& path);

struct GeneralizeOptions {
  std::string input;
  double width = 0;
  double height = 0;
  std::optional<std::string> config;
  // SVG path; the chart JSON goes next to it with a .json extension. Empty
  // writes the SVG to `out`.
  std::string output;
  std::optional<uint64_t> seed;
};

int RunGeneralize(const GeneralizeOptions& options, std::ostream& out, std::ostream& err);

struct MetricsOptions {
  std::string input;
  double width = 0;
  double height = 0;
  std::optional<std::string> config;
};

int RunMetrics(const MetricsOptions& options, std::ostream& out, std::ostream& err);

struct SweepOptions {
  std::string input;
  std::vector<Size> targets;
  std::optional<std::string> config;
  // Directory receiving <stem>_<w>x<h>.svg/.json; empty writes nothing.
  std::string output_dir;
  std::optional<uint64_t> seed;
};

// Parses "WxH[,WxH...]". Throws ParseError.
std::vector<Size> ParseSizeList(const std::string& text);

int RunSweep(const SweepOptions& options, std::ostream& out, std::ostream& err);

}  // namespace chartgen::tools

#endif  // CHARTGEN_TOOLS_COMMANDS_H_
