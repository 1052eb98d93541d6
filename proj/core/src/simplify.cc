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

#include "chartgen/simplify.h"

#include <algorithm>
#include <cmath>
#include <utility>

namespace chartgen {

double PerpendicularDistance(Point p, Point a, Point b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len = std::hypot(dx, dy);
  if (len == 0) return Distance(p, a);
  return std::abs(dy * (p.x - a.x) - dx * (p.y - a.y)) / len;
}

std::vector<size_t> SimplifyLineIndices(std::span<const Point> polyline,
                                        double epsilon) {
  const size_t n = polyline.size();
  if (n <= 2) {
    std::vector<size_t> all(n);
    for (size_t i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<bool> keep(n, false);
  keep.front() = true;
  keep.back() = true;
  // Explicit stack of [first, last] spans instead of recursion.
  std::vector<std::pair<size_t, size_t>> stack = {{0, n - 1}};
  while (!stack.empty()) {
    auto [first, last] = stack.back();
    stack.pop_back();
    double max_dist = 0;
    size_t index = first;
    for (size_t i = first + 1; i < last; ++i) {
      double d = PerpendicularDistance(polyline[i], polyline[first], polyline[last]);
      if (d > max_dist) {
        max_dist = d;
        index = i;
      }
    }
    if (index != first && max_dist > epsilon) {
      keep[index] = true;
      stack.push_back({first, index});
      stack.push_back({index, last});
    }
  }
  std::vector<size_t> out;
  for (size_t i = 0; i < n; ++i) {
    if (keep[i]) out.push_back(i);
  }
  return out;
}

std::vector<Point> SimplifyLine(std::span<const Point> polyline, double epsilon) {
  std::vector<Point> out;
  for (size_t i : SimplifyLineIndices(polyline, epsilon)) out.push_back(polyline[i]);
  return out;
}

namespace {

bool PreservesFeatures(std::span<const size_t> kept,
                       std::span<const FeatureKind> kinds, size_t required_local) {
  std::vector<bool> is_kept(kinds.size(), false);
  for (size_t i : kept) is_kept[i] = true;
  size_t local = 0;
  for (size_t i = 0; i < kinds.size(); ++i) {
    switch (kinds[i]) {
      case FeatureKind::kFirst:
      case FeatureKind::kLast:
      case FeatureKind::kGlobalMax:
      case FeatureKind::kGlobalMin:
        if (!is_kept[i]) return false;
        break;
      case FeatureKind::kLocalMax:
      case FeatureKind::kLocalMin:
        if (is_kept[i]) ++local;
        break;
      case FeatureKind::kIntermediate:
        break;
    }
  }
  return local >= required_local;
}

}  // namespace

double FeaturePreservingEpsilon(std::span<const Point> polyline,
                                std::span<const FeatureKind> kinds, Size target,
                                double retention) {
  const double cap = 0.01 * target.Diagonal();
  size_t local_count = 0;
  for (FeatureKind k : kinds) {
    if (k == FeatureKind::kLocalMax || k == FeatureKind::kLocalMin) ++local_count;
  }
  const auto required = static_cast<size_t>(
      std::ceil(retention * static_cast<double>(local_count) - 1e-12));

  std::vector<double> sweep;
  for (double eps = 0.5; eps < cap; eps *= 2) sweep.push_back(eps);
  sweep.push_back(cap);

  double best = 0;
  for (double eps : sweep) {
    auto kept = SimplifyLineIndices(polyline, eps);
    if (PreservesFeatures(kept, kinds, required)) best = std::max(best, eps);
  }
  return best;
}

}  // namespace chartgen
