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

#ifndef CHARTGEN_SIMPLIFY_H_
#define CHARTGEN_SIMPLIFY_H_

#include <span>
#include <vector>

#include "chartgen/element.h"
#include "chartgen/geometry.h"

namespace chartgen {

// Distance from `p` to the infinite line through `a` and `b`; the distance
// to `a` when the two coincide.
double PerpendicularDistance(Point p, Point a, Point b);

// Douglas-Peucker. Returns the ascending indices of the kept vertices: both
// endpoints plus, recursively, the vertex farthest from the current chord
// whenever its distance exceeds `epsilon` (first one wins on ties).
std::vector<size_t> SimplifyLineIndices(std::span<const Point> polyline,
                                        double epsilon);

std::vector<Point> SimplifyLine(std::span<const Point> polyline, double epsilon);

// Largest epsilon from the sweep 0.5, 1, 2, 4, ... px (capped at 1% of the
// target diagonal, the cap itself included) whose simplification keeps every
// First/Last/GlobalMax/GlobalMin vertex and at least ceil(retention * n) of
// the n local extrema. 0 when no sweep value qualifies.
double FeaturePreservingEpsilon(std::span<const Point> polyline,
                                std::span<const FeatureKind> kinds, Size target,
                                double retention);

}  // namespace chartgen

#endif  // CHARTGEN_SIMPLIFY_H_
