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

#include "chartgen/serialize.h"

#include <gtest/gtest.h>

#include "json.hpp"
#include "support/corpus.h"

namespace chartgen {
namespace {

using nlohmann::json;

TEST(SerializeChartTest, StableKeysAndNoWallClock) {
  GeneralizedChart chart =
      Generalize(testing_support::LoadCorpus("annotated"), testing_support::kPhone, {});
  chart.elapsed_ms = 12345;
  const std::string a = SerializeChart(chart);
  chart.elapsed_ms = 1;
  EXPECT_EQ(SerializeChart(chart), a);
  EXPECT_EQ(a.find("elapsed"), std::string::npos);

  nlohmann::ordered_json ordered = nlohmann::ordered_json::parse(a);
  std::vector<std::string> keys;
  for (auto it = ordered.begin(); it != ordered.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"target", "visibleCount", "passes", "exhausted",
                                            "warnings", "report", "log", "elements"}));
  json j = json::parse(a);
  EXPECT_EQ(j["visibleCount"], chart.VisibleCount());
  EXPECT_EQ(j["elements"].size(), chart.elements.size());
  EXPECT_EQ(j["log"].size(), chart.log.size());
  EXPECT_EQ(j["report"]["satisfied"], chart.report.satisfied);
}

TEST(SerializeChartTest, GeometryRoundedToTwoDecimals) {
  GeneralizedChart chart =
      Generalize(testing_support::LoadCorpus("sine_wave"), testing_support::kWatch, {});
  json j = json::parse(SerializeChart(chart));
  for (const json& e : j["elements"]) {
    for (const char* k : {"x", "y", "width", "height"}) {
      const double v = e["bbox"][k].get<double>();
      EXPECT_NEAR(v * 100, std::round(v * 100), 1e-6);
    }
  }
}

TEST(SerializeChartTest, IdenticalRunsGiveIdenticalBytes) {
  ChartSpec spec = testing_support::LoadCorpus("stock_daily");
  EXPECT_EQ(SerializeChart(Generalize(spec, testing_support::kPhone, {})),
            SerializeChart(Generalize(spec, testing_support::kPhone, {})));
}

TEST(SerializeLogTest, EntryShape) {
  OperatorLogEntry entry;
  entry.kind = OperatorKind::kMergeTicks;
  entry.element_ids = {3, 4};
  entry.params = {{"axis", std::string("x")}, {"stride", 2.0}};
  entry.delta = {10, 5, 2, 1};
  std::vector<OperatorLogEntry> log = {entry};
  json j = json::parse(SerializeLog(log));
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["operator"], "MergeTicks");
  EXPECT_EQ(j[0]["elementIds"], json::array({3, 4}));
  EXPECT_EQ(j[0]["params"]["axis"], "x");
  EXPECT_EQ(j[0]["params"]["stride"], 2.0);
  EXPECT_EQ(j[0]["delta"]["collisionBefore"], 10.0);
  EXPECT_EQ(j[0]["delta"]["congestedCellsAfter"], 1);
}

TEST(SerializeReportTest, ListsEveryViolationKind) {
  ConstraintReport r;
  r.conflicts.push_back({1, 2, 3.5});
  r.prominence.push_back({4, 0.001});
  r.satisfied = false;
  json j = json::parse(SerializeReport(r));
  EXPECT_EQ(j["satisfied"], false);
  EXPECT_EQ(j["conflicts"][0]["overlap"], 3.5);
  EXPECT_EQ(j["prominence"][0]["id"], 4);
  EXPECT_TRUE(j["congestion"].empty());
  EXPECT_TRUE(j["proximity"].empty());
}

TEST(SerializeMetricsTest, ParsesBack) {
  ChartMetrics m =
      ComputeMetrics(testing_support::LoadCorpus("sparse_ten"), testing_support::kPhone, {});
  json j = json::parse(SerializeMetrics(m));
  EXPECT_EQ(j["target"]["width"], 750.0);
  EXPECT_EQ(j["grid"]["columns"], m.dims.columns);
  EXPECT_EQ(SerializeMetrics(m), SerializeMetrics(m));
}

}  // namespace
}  // namespace chartgen
