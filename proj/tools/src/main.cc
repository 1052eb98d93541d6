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

#include <iostream>

#include "CLI11.hpp"
#include "chartgen_tools/commands.h"
#include "chartgen_tools/service.h"

int main(int argc, char** argv) {
  using namespace chartgen::tools;
  CLI::App app{"chartgen: resize-aware line chart generalization"};
  app.require_subcommand(1);

  GeneralizeOptions gen;
  auto* generalize = app.add_subcommand("generalize", "Generalize a chart for a target size");
  generalize->add_option("input", gen.input, "Chart spec JSON")->required();
  generalize->add_option("--width", gen.width, "Target width in px")->required();
  generalize->add_option("--height", gen.height, "Target height in px")->required();
  generalize->add_option("--config", gen.config, "Engine config JSON");
  generalize->add_option("--out", gen.output, "SVG output path (JSON written alongside)");
  generalize->add_option("--seed", gen.seed, "Override the config seed");

  MetricsOptions met;
  auto* metrics = app.add_subcommand("metrics", "Print spatial metrics without generalizing");
  metrics->add_option("input", met.input, "Chart spec JSON")->required();
  metrics->add_option("--width", met.width, "Target width in px")->required();
  metrics->add_option("--height", met.height, "Target height in px")->required();
  metrics->add_option("--config", met.config, "Engine config JSON");

  SweepOptions sweep;
  std::string sizes = "6307x3220,1536x2048,750x1334,324x394";
  auto* sweep_cmd = app.add_subcommand("sweep", "Generalize for several target sizes");
  sweep_cmd->add_option("input", sweep.input, "Chart spec JSON")->required();
  sweep_cmd->add_option("--sizes", sizes, "Comma-separated WxH list")->capture_default_str();
  sweep_cmd->add_option("--config", sweep.config, "Engine config JSON");
  sweep_cmd->add_option("--out-dir", sweep.output_dir, "Directory for SVG/JSON outputs");
  sweep_cmd->add_option("--seed", sweep.seed, "Override the config seed");

  std::string host = "127.0.0.1";
  int port = 8080;
  std::optional<std::string> serve_config;
  auto* serve = app.add_subcommand("serve", "Serve POST /generalize and GET /health");
  serve->add_option("--port", port, "TCP port")->capture_default_str();
  serve->add_option("--host", host, "Bind address")->capture_default_str();
  serve->add_option("--config", serve_config, "Engine config JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version are reported as "errors" with a zero code.
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*generalize) return RunGeneralize(gen, std::cout, std::cerr);
  if (*metrics) return RunMetrics(met, std::cout, std::cerr);
  if (*sweep_cmd) {
    try {
      sweep.targets = ParseSizeList(sizes);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitParse;
    }
    return RunSweep(sweep, std::cout, std::cerr);
  }
  if (*serve) {
    chartgen::EngineConfig config;
    try {
      config = LoadConfig(serve_config);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitParse;
    }
    std::cerr << "listening on " << host << ":" << port << "\n";
    if (!Serve(host, port, config)) {
      std::cerr << "error: cannot listen on " << host << ":" << port << "\n";
      return kExitUsage;
    }
    return kExitOk;
  }
  return kExitUsage;
}
