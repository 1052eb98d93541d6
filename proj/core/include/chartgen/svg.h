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

#ifndef CHARTGEN_SVG_H_
#define CHARTGEN_SVG_H_

#include <span>
#include <string>

#include "chartgen/element.h"
#include "chartgen/pipeline.h"

namespace chartgen {

// Standalone SVG of the visible elements. Layers stack gridlines, axes,
// reference lines, data lines, data points, then text. Coordinates carry two
// decimals; output bytes depend only on the input.
std::string RenderSvg(std::span<const Element> elements, Size target);

inline std::string RenderSvg(const GeneralizedChart& chart) {
  return RenderSvg(chart.elements, chart.target);
}

// Fixed two-decimal text of `v`, without a negative zero.
std::string FormatCoordinate(double v);

}  // namespace chartgen

#endif  // CHARTGEN_SVG_H_
