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

#include "chartgen/geometry.h"

#include <gtest/gtest.h>

#include "chartgen/text_metrics.h"

namespace chartgen {
namespace {

TEST(GeometryTest, OverlapOfDisjointAndTouchingBoxesIsZero) {
  EXPECT_EQ(OverlapArea({0, 0, 10, 10}, {20, 20, 5, 5}), 0);
  EXPECT_EQ(OverlapArea({0, 0, 10, 10}, {10, 0, 5, 5}), 0);
}

TEST(GeometryTest, OverlapOfIntersectingBoxes) {
  EXPECT_DOUBLE_EQ(OverlapArea({0, 0, 10, 10}, {5, 5, 10, 10}), 25);
  EXPECT_DOUBLE_EQ(OverlapArea({0, 0, 10, 10}, {2, 2, 3, 3}), 9);
}

TEST(GeometryTest, TouchesIsClosed) {
  EXPECT_TRUE(Rect({0, 0, 10, 10}).Touches({10, 10, 1, 1}));
  EXPECT_FALSE(Rect({0, 0, 10, 10}).Touches({10.01, 0, 1, 1}));
  EXPECT_TRUE(Rect({5, 5, 0, 0}).Touches({0, 0, 10, 10}));
}

TEST(GeometryTest, UnionAndCorners) {
  Rect u = Union({0, 0, 2, 2}, {5, -1, 1, 1});
  EXPECT_EQ(u, (Rect{0, -1, 6, 3}));
  EXPECT_EQ(Rect::FromCorners({4, 4}, {1, 2}), (Rect{1, 2, 3, 2}));
}

TEST(GeometryTest, DistanceAndDiagonal) {
  EXPECT_DOUBLE_EQ(Distance({0, 0}, {3, 4}), 5);
  EXPECT_DOUBLE_EQ((Size{3, 4}).Diagonal(), 5);
}

TEST(TextMetricsTest, WidthFollowsGlyphAdvance) {
  TextMetrics m{10};
  EXPECT_DOUBLE_EQ(m.Width("2020"), 24);
  EXPECT_DOUBLE_EQ(m.Width(""), 0);
  EXPECT_DOUBLE_EQ(m.LineHeight(), 12);
}

TEST(TextMetricsTest, CountsCodePointsNotBytes) {
  EXPECT_EQ(TextMetrics::GlyphCount("\xc3\xa9t\xc3\xa9"), 3u);
}

TEST(TextMetricsTest, WidthMonotoneInLengthAndFont) {
  TextMetrics m{8};
  std::string s;
  double prev = 0;
  for (int i = 0; i < 20; ++i) {
    s += "x";
    EXPECT_GE(m.Width(s), prev);
    prev = m.Width(s);
    EXPECT_LE(m.Width(s), m.WithFontSize(9).Width(s));
  }
}

TEST(TextMetricsTest, FontScalesWithTargetAndIsCapped) {
  Typography t;
  EXPECT_DOUBLE_EQ(TextMetricsForTarget({6307, 3220}, t).font_size, 16);
  EXPECT_DOUBLE_EQ(TextMetricsForTarget({1536, 2048}, t).font_size, 16);
  EXPECT_DOUBLE_EQ(TextMetricsForTarget({750, 1334}, t).font_size, 12);
  EXPECT_LT(TextMetricsForTarget({324, 394}, t).font_size, 7);
}

}  // namespace
}  // namespace chartgen
