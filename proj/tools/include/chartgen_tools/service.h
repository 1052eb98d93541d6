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

#ifndef CHARTGEN_TOOLS_SERVICE_H_
#define CHARTGEN_TOOLS_SERVICE_H_

#include <string>
#include <string_view>

#include "chartgen/config.h"

namespace httplib {
class Server;
}

namespace chartgen::tools {

struct HttpReply {
  int status = 200;
  std::string body;
};

// POST /generalize: body {spec, width, height, configOverrides?}. Replies
// {svg, log, report, elapsedMs}; 400 with {error, path} on a malformed body,
// 422 on layout failure.
HttpReply HandleGeneralize(std::string_view body, const EngineConfig& base);

// Registers /generalize and /health on `server`.
void RegisterRoutes(httplib::Server& server, const EngineConfig& base);

// Blocks serving on host:port. Returns false if the port cannot be bound.
bool Serve(const std::string& host, int port, const EngineConfig& base);

}  // namespace chartgen::tools

#endif  // CHARTGEN_TOOLS_SERVICE_H_
