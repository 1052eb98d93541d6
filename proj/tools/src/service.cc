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

#include "chartgen_tools/service.h"

#include "chartgen/chart_spec.h"
#include "chartgen/layout.h"
#include "chartgen/pipeline.h"
#include "chartgen/serialize.h"
#include "chartgen/svg.h"
#include "httplib.h"
#include "json.hpp"

namespace chartgen::tools {
namespace {

using json = nlohmann::ordered_json;

HttpReply Error(int status, const std::string& path, const std::string& message) {
  return {status, json{{"error", message}, {"path", path}}.dump()};
}

double ReadDimension(const json& body, const char* key) {
  auto it = body.find(key);
  if (it == body.end()) throw ParseError(key, "missing field");
  if (!it->is_number()) throw ParseError(key, "expected number");
  return it->get<double>();
}

}  // namespace

HttpReply HandleGeneralize(std::string_view body, const EngineConfig& base) {
  try {
    json root;
    try {
      root = json::parse(body);
    } catch (const json::parse_error& e) {
      return Error(400, "", std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) return Error(400, "", "expected object");
    for (const auto& [key, value] : root.items()) {
      if (key != "spec" && key != "width" && key != "height" && key != "configOverrides") {
        return Error(400, key, "unknown key");
      }
    }
    auto spec_it = root.find("spec");
    if (spec_it == root.end()) return Error(400, "spec", "missing field");
    ChartSpec spec;
    try {
      spec = ParseChartSpec(spec_it->dump());
    } catch (const ParseError& e) {
      const std::string message =
          e.path().empty() ? e.what() : std::string(e.what()).substr(e.path().size() + 2);
      return Error(400, e.path().empty() ? "spec" : "spec." + e.path(), message);
    }
    const double width = ReadDimension(root, "width");
    const double height = ReadDimension(root, "height");
    EngineConfig config = base;
    if (auto it = root.find("configOverrides"); it != root.end()) {
      config = ApplyConfigOverrides(base, it->dump(), "configOverrides");
    }
    GeneralizedChart chart = Generalize(spec, {width, height}, config);
    json reply = {{"svg", RenderSvg(chart)},
                  {"log", json::parse(SerializeLog(chart.log))},
                  {"report", json::parse(SerializeReport(chart.report))},
                  {"elapsedMs", chart.elapsed_ms}};
    return {200, reply.dump()};
  } catch (const ParseError& e) {
    const std::string message =
        e.path().empty() ? e.what() : std::string(e.what()).substr(e.path().size() + 2);
    return Error(400, e.path(), message);
  } catch (const LayoutError& e) {
    return Error(422, "", e.what());
  }
}

void RegisterRoutes(httplib::Server& server, const EngineConfig& base) {
  server.Post("/generalize", [base](const httplib::Request& req, httplib::Response& res) {
    HttpReply reply = HandleGeneralize(req.body, base);
    res.status = reply.status;
    res.set_content(reply.body, "application/json");
  });
  server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
    res.status = 200;
    res.set_content(R"({"status":"ok"})", "application/json");
  });
}

bool Serve(const std::string& host, int port, const EngineConfig& base) {
  httplib::Server server;
  RegisterRoutes(server, base);
  return server.listen(host, port);
}

}  // namespace chartgen::tools
