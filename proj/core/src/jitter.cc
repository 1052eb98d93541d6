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

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "chartgen/operators.h"

namespace chartgen {
namespace {

constexpr std::array<LabelSlot, 5> kSlots = {
    LabelSlot::kDefault, LabelSlot::kNorthWest, LabelSlot::kNorthEast,
    LabelSlot::kSouthWest, LabelSlot::kSouthEast};

// Off-canvas area costs more than overlap so labels stay on the display.
constexpr double kOffCanvasWeight = 4.0;

bool IsJitterable(const Element& e) {
  return e.visible && !e.surrogate &&
         (e.layer == LayerKind::kPointLabel || e.layer == LayerKind::kAnnotation);
}

bool IsObstacle(const Element& e) {
  return e.visible &&
         (IsConflictLabelLayer(e.layer) || e.layer == LayerKind::kDataPoint);
}

LabelSlot SlotFor(Quadrant q) {
  switch (q) {
    case Quadrant::kNorthWest: return LabelSlot::kNorthWest;
    case Quadrant::kNorthEast: return LabelSlot::kNorthEast;
    case Quadrant::kSouthWest: return LabelSlot::kSouthWest;
    case Quadrant::kSouthEast: return LabelSlot::kSouthEast;
  }
  return LabelSlot::kDefault;
}

// Cell-bucketed index of obstacle boxes supporting moves.
class BucketIndex {
 public:
  BucketIndex(const DensityGrid& grid, size_t id_count)
      : grid_(grid),
        buckets_(static_cast<size_t>(grid.columns()) * grid.rows()),
        stamp_(id_count, 0) {}

  void Insert(int id, const Rect& box) {
    ForCells(box, [&](std::vector<int>& b) { b.push_back(id); });
  }

  void Remove(int id, const Rect& box) {
    ForCells(box, [&](std::vector<int>& b) {
      auto it = std::find(b.begin(), b.end(), id);
      if (it != b.end()) b.erase(it);
    });
  }

  template <typename F>
  void ForEachNear(const Rect& box, F&& f) {
    ++epoch_;
    ForCells(box, [&](std::vector<int>& b) {
      for (int id : b) {
        if (stamp_[id] == epoch_) continue;
        stamp_[id] = epoch_;
        f(id);
      }
    });
  }

 private:
  template <typename F>
  void ForCells(const Rect& box, F&& f) {
    CellRange r = grid_.CellsFor(box, box.Center());
    for (int row = r.first_row; row <= r.last_row; ++row) {
      for (int col = r.first_column; col <= r.last_column; ++col) {
        f(buckets_[static_cast<size_t>(row) * grid_.columns() + col]);
      }
    }
  }

  const DensityGrid& grid_;
  std::vector<std::vector<int>> buckets_;
  std::vector<uint32_t> stamp_;
  uint32_t epoch_ = 0;
};

class Annealer {
 public:
  Annealer(std::vector<Element>& elements, const DensityGrid& grid, Size target)
      : elements_(elements),
        grid_(grid),
        canvas_{0, 0, target.width, target.height},
        index_(grid, elements.size()) {
    for (const Element& e : elements_) {
      if (IsObstacle(e)) index_.Insert(e.id, e.bbox);
    }
  }

  Rect BoxFor(const Element& e, LabelSlot slot) const {
    return LabelBoxForSlot(e.anchor, e.bbox.width, e.bbox.height, e.label_gap,
                           grid_.cell_size(), slot);
  }

  double Cost(int id, const Rect& box) {
    double cost = 0;
    index_.ForEachNear(box, [&](int other) {
      if (other != id) cost += OverlapArea(box, elements_[other].bbox);
    });
    cost += std::max(0.0, box.Area() - OverlapArea(box, canvas_)) * kOffCanvasWeight;
    return cost;
  }

  bool HitsDataPoint(const Rect& box) {
    bool hit = false;
    index_.ForEachNear(box, [&](int other) {
      const Element& o = elements_[other];
      if (o.layer == LayerKind::kDataPoint && OverlapArea(box, o.bbox) > 0) hit = true;
    });
    return hit;
  }

  bool OnCanvas(const Rect& box) const {
    return box.x >= canvas_.x && box.y >= canvas_.y &&
           box.Right() <= canvas_.Right() && box.Bottom() <= canvas_.Bottom();
  }

  void MoveTo(int id, LabelSlot slot) {
    Element& e = elements_[id];
    if (e.slot == slot) return;
    index_.Remove(id, e.bbox);
    e.bbox = BoxFor(e, slot);
    e.slot = slot;
    e.text_anchor = AnchorForSlot(slot);
    index_.Insert(id, e.bbox);
  }

  double Total(const std::vector<int>& labels) {
    double total = 0;
    for (int id : labels) total += Cost(id, elements_[id].bbox);
    return total;
  }

 private:
  std::vector<Element>& elements_;
  const DensityGrid& grid_;
  Rect canvas_;
  BucketIndex index_;
};

double Uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

JitterResult JitterLabels(std::vector<Element> elements, const DensityGrid& grid,
                          const OperatorContext& ctx,
                          const AnnealingParams& annealing, uint64_t seed) {
  JitterResult result;
  result.log.kind = OperatorKind::kJitter;

  std::vector<int> labels;
  for (const ConflictViolation& c : FindConflicts(elements, ctx.quadtree)) {
    if (IsJitterable(elements[c.a])) labels.push_back(c.a);
    if (IsJitterable(elements[c.b])) labels.push_back(c.b);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  const ClutterMeasure before = MeasureClutter(elements, ctx);
  std::vector<LabelSlot> initial;
  for (int id : labels) initial.push_back(elements[id].slot);

  int iterations = 0;
  double cost_before = 0;
  double cost_after = 0;
  if (!labels.empty()) {
    Annealer annealer(elements, grid, ctx.target);
    cost_before = annealer.Total(labels);
    double best_total = cost_before;
    std::vector<LabelSlot> best = initial;

    // Heuristic placement: lowest-density quadrant whose slot is on canvas
    // and clear of data points, else the lowest-density quadrant.
    for (int id : labels) {
      const Element& e = elements[id];
      QuadrantSums sums = ComputeQuadrantSums(grid, grid.CellOf(e.anchor));
      std::array<Quadrant, 4> order = {Quadrant::kNorthWest, Quadrant::kNorthEast,
                                       Quadrant::kSouthWest, Quadrant::kSouthEast};
      std::stable_sort(order.begin(), order.end(), [&](Quadrant a, Quadrant b) {
        return SumFor(sums, a) < SumFor(sums, b);
      });
      LabelSlot chosen = SlotFor(order.front());
      for (Quadrant q : order) {
        Rect box = annealer.BoxFor(e, SlotFor(q));
        if (annealer.OnCanvas(box) && !annealer.HitsDataPoint(box)) {
          chosen = SlotFor(q);
          break;
        }
      }
      annealer.MoveTo(id, chosen);
    }

    auto snapshot = [&]() {
      std::vector<LabelSlot> s;
      for (int id : labels) s.push_back(elements[id].slot);
      return s;
    };
    double total = annealer.Total(labels);
    if (total < best_total) {
      best_total = total;
      best = snapshot();
    }

    std::mt19937_64 rng(seed);
    double temperature = annealing.initial_temperature;
    for (; iterations < annealing.iterations && total > 0; ++iterations) {
      for (int id : labels) {
        const Element& e = elements[id];
        const double current = annealer.Cost(id, e.bbox);
        if (current <= 0) continue;
        // One of the four slots other than the current one.
        size_t pick = static_cast<size_t>(rng() % (kSlots.size() - 1));
        size_t cur = static_cast<size_t>(
            std::find(kSlots.begin(), kSlots.end(), e.slot) - kSlots.begin());
        if (pick >= cur) ++pick;
        const LabelSlot proposal = kSlots[pick];
        const double proposed = annealer.Cost(id, annealer.BoxFor(e, proposal));
        const double area = std::max(e.bbox.Area(), 1.0);
        const double delta = (proposed - current) / area;
        const double u = Uniform(rng);
        if (delta <= 0 || u < std::exp(-delta / temperature)) {
          annealer.MoveTo(id, proposal);
        }
      }
      total = annealer.Total(labels);
      if (total < best_total) {
        best_total = total;
        best = snapshot();
      }
      temperature *= annealing.decay;
    }

    for (size_t k = 0; k < labels.size(); ++k) annealer.MoveTo(labels[k], best[k]);
    cost_after = best_total;
  }

  for (size_t k = 0; k < labels.size(); ++k) {
    if (elements[labels[k]].slot != initial[k]) {
      result.log.element_ids.push_back(labels[k]);
      ++result.moves;
    }
  }
  const ClutterMeasure after = MeasureClutter(elements, ctx);
  result.log.params = {{"labels", static_cast<double>(labels.size())},
                       {"moves", static_cast<double>(result.moves)},
                       {"iterations", static_cast<double>(iterations)},
                       {"overlapCostBefore", cost_before},
                       {"overlapCostAfter", cost_after},
                       {"seed", static_cast<double>(seed)}};
  result.log.delta = {before.collision_area, after.collision_area,
                      before.congested_cells, after.congested_cells};
  result.elements = std::move(elements);
  return result;
}

}  // namespace chartgen
