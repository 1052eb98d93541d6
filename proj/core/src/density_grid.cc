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

#include "chartgen/density_grid.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace chartgen {

GridDims DimsForTarget(Size target, double cell_px) {
  auto cells = [cell_px](double extent) {
    return std::max(3, static_cast<int>(std::ceil(extent / cell_px)));
  };
  return {cells(target.width), cells(target.height)};
}

DensityGrid::DensityGrid(Size target, GridDims dims)
    : dims_{std::max(1, dims.columns), std::max(1, dims.rows)},
      cell_{target.width / std::max(1, dims.columns),
            target.height / std::max(1, dims.rows)},
      counts_(static_cast<size_t>(dims_.columns) * dims_.rows, 0) {}

double DensityGrid::MaxDensity() const {
  int max = 0;
  for (int c : counts_) max = std::max(max, c);
  return max / cell_area();
}

double DensityGrid::MeanDensity() const {
  return static_cast<double>(TotalCount()) / counts_.size() / cell_area();
}

long DensityGrid::TotalCount() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0L);
}

CellIndex DensityGrid::CellOf(Point p) const {
  int c = static_cast<int>(std::floor(p.x / cell_.width));
  int r = static_cast<int>(std::floor(p.y / cell_.height));
  return {std::clamp(c, 0, dims_.columns - 1), std::clamp(r, 0, dims_.rows - 1)};
}

CellRange DensityGrid::CellsFor(const Rect& box, Point anchor) const {
  if (!(box.width > 0 && box.height > 0)) {
    CellIndex c = CellOf(anchor);
    return {c.column, c.column, c.row, c.row};
  }
  auto span = [](double lo, double hi, double cell, int count) {
    int first = static_cast<int>(std::floor(lo / cell));
    int last = static_cast<int>(std::ceil(hi / cell)) - 1;
    first = std::clamp(first, 0, count - 1);
    last = std::clamp(last, 0, count - 1);
    return std::pair{first, std::max(first, last)};
  };
  auto [c0, c1] = span(box.x, box.Right(), cell_.width, dims_.columns);
  auto [r0, r1] = span(box.y, box.Bottom(), cell_.height, dims_.rows);
  return {c0, c1, r0, r1};
}

void DensityGrid::Add(const Rect& box, Point anchor, int delta) {
  CellRange r = CellsFor(box, anchor);
  for (int row = r.first_row; row <= r.last_row; ++row) {
    for (int col = r.first_column; col <= r.last_column; ++col) {
      counts_[Offset(col, row)] += delta;
    }
  }
}

void DensityGrid::Add(const Element& e, int delta) { Add(e.bbox, e.anchor, delta); }

DensityGrid BuildDensityGrid(std::span<const Element> elements, Size target,
                             GridDims dims) {
  DensityGrid grid(target, dims);
  for (const Element& e : elements) {
    if (e.visible) grid.Add(e);
  }
  return grid;
}

QuadrantSums ComputeQuadrantSums(const DensityGrid& grid, CellIndex anchor,
                                 std::optional<double> boundary_penalty) {
  const double penalty = boundary_penalty.value_or(grid.MaxDensity());
  auto block = [&](int c0, int r0) {
    double sum = 0;
    for (int r = r0; r < r0 + 3; ++r) {
      for (int c = c0; c < c0 + 3; ++c) {
        sum += grid.InGrid(c, r) ? grid.Density(c, r) : penalty;
      }
    }
    return sum;
  };
  const int i = anchor.column;
  const int j = anchor.row;
  return {block(i - 3, j - 3), block(i + 1, j - 3), block(i - 3, j + 1),
          block(i + 1, j + 1)};
}

Quadrant MinDensityQuadrant(const QuadrantSums& s) {
  Quadrant best = Quadrant::kNorthWest;
  double value = s.nw;
  if (s.ne < value) {
    best = Quadrant::kNorthEast;
    value = s.ne;
  }
  if (s.sw < value) {
    best = Quadrant::kSouthWest;
    value = s.sw;
  }
  if (s.se < value) best = Quadrant::kSouthEast;
  return best;
}

double SumFor(const QuadrantSums& s, Quadrant q) {
  switch (q) {
    case Quadrant::kNorthWest: return s.nw;
    case Quadrant::kNorthEast: return s.ne;
    case Quadrant::kSouthWest: return s.sw;
    case Quadrant::kSouthEast: return s.se;
  }
  return 0;
}

}  // namespace chartgen
