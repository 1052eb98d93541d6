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

#ifndef CHARTGEN_TEXT_METRICS_H_
#define CHARTGEN_TEXT_METRICS_H_

#include <algorithm>
#include <cmath>
#include <string_view>

#include "chartgen/geometry.h"

namespace chartgen {

// Monospace text model: every glyph advances `advance_ratio * font_size`.
// Lets label boxes be computed without a rendering engine.
struct TextMetrics {
  double font_size = 10;
  double advance_ratio = 0.6;
  double line_height_ratio = 1.2;

  // Counts UTF-8 code points, not bytes.
  static size_t GlyphCount(std::string_view text) {
    size_t n = 0;
    for (unsigned char c : text) {
      if ((c & 0xC0) != 0x80) ++n;
    }
    return n;
  }

  double Width(std::string_view text) const {
    return static_cast<double>(GlyphCount(text)) * advance_ratio * font_size;
  }
  double LineHeight() const { return line_height_ratio * font_size; }
  // Baseline sits one em below the top of the line box.
  double Ascent() const { return font_size; }

  TextMetrics WithFontSize(double size) const {
    TextMetrics m = *this;
    m.font_size = size;
    return m;
  }
};

// Scales body text with the display: font = scale * sqrt(area), capped.
struct Typography {
  double font_scale = 0.012;
  double max_font_px = 16;
  double advance_ratio = 0.6;
  double line_height_ratio = 1.2;
  double title_ratio = 1.25;
};

// Rounds to two decimals, the precision used for serialized geometry.
inline double RoundTo2(double v) { return std::round(v * 100) / 100; }

inline TextMetrics TextMetricsForTarget(Size target, const Typography& t) {
  double size = std::min(t.max_font_px,
                         t.font_scale * std::sqrt(std::max(0.0, target.Area())));
  return {RoundTo2(size), t.advance_ratio, t.line_height_ratio};
}

}  // namespace chartgen

#endif  // CHARTGEN_TEXT_METRICS_H_
