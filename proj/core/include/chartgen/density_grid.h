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

#ifndef CHARTGEN_DENSITY_GRID_H_
#define CHARTGEN_DENSITY_GRID_H_

#include <optional>
#include <span>
#include <vector>

#include "chartgen/element.h"
#include "chartgen/geometry.h"

namespace chartgen {

struct GridDims {
  int columns = 3;
  int rows = 3;
};

// Cells of about `cell_px` square, never fewer than 3x3.
GridDims DimsForTarget(Size target, double cell_px);

struct CellIndex {
  int column = 0;
  int row = 0;

  friend bool operator==(const CellIndex&, const CellIndex&) = default;
};

// Inclusive range of cells.
struct CellRange {
  int first_column = 0;
  int last_column = 0;
  int first_row = 0;
  int last_row = 0;
};

// Uniform grid over the display holding, per cell, the number of elements
// touching it and the information density count / cell pixel area.
class DensityGrid {
 public:
  DensityGrid(Size target, GridDims dims);

  int columns() const { return dims_.columns; }
  int rows() const { return dims_.rows; }
  const Size& cell_size() const { return cell_; }
  double cell_area() const { return cell_.Area(); }

  bool InGrid(int column, int row) const {
    return column >= 0 && column < dims_.columns && row >= 0 && row < dims_.rows;
  }
  int Count(int column, int row) const { return counts_[Offset(column, row)]; }
  double Density(int column, int row) const {
    return Count(column, row) / cell_area();
  }
  double MaxDensity() const;
  double MeanDensity() const;
  long TotalCount() const;

  // Cell containing `p`, clamped into the grid.
  CellIndex CellOf(Point p) const;

  // Cells an element contributes to: those its box overlaps with positive
  // area, or the anchor's cell when the box has zero area. Off-canvas boxes
  // clamp to the nearest border cells.
  CellRange CellsFor(const Rect& box, Point anchor) const;
  CellRange CellsFor(const Element& e) const { return CellsFor(e.bbox, e.anchor); }

  void Add(const Element& e, int delta = 1);
  void Add(const Rect& box, Point anchor, int delta = 1);

 private:
  size_t Offset(int column, int row) const {
    return static_cast<size_t>(row) * dims_.columns + column;
  }

  GridDims dims_;
  Size cell_;
  std::vector<int> counts_;
};

// Counts every visible element of `elements`.
DensityGrid BuildDensityGrid(std::span<const Element> elements, Size target,
                             GridDims dims);

// Density sums over the four 3x3 blocks diagonally adjacent to a cell.
struct QuadrantSums {
  double nw = 0;
  double ne = 0;
  double sw = 0;
  double se = 0;
};

enum class Quadrant { kNorthWest, kNorthEast, kSouthWest, kSouthEast };

// Out-of-grid cells contribute `boundary_penalty` each; by default the
// grid's maximum cell density.
QuadrantSums ComputeQuadrantSums(const DensityGrid& grid, CellIndex anchor,
                                 std::optional<double> boundary_penalty = {});

// Direction of the smallest sum; ties resolve NW, NE, SW, SE in that order.
Quadrant MinDensityQuadrant(const QuadrantSums& sums);

double SumFor(const QuadrantSums& sums, Quadrant q);

}  // namespace chartgen

#endif  // CHARTGEN_DENSITY_GRID_H_
