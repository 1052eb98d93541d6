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

#include "chartgen/quadtree.h"

#include <algorithm>

namespace chartgen {

Quadtree::Quadtree(Rect region, QuadtreeParams params) : params_(params) {
  nodes_.push_back(Node{region, 0, {-1, -1, -1, -1}, {}});
}

Quadtree Quadtree::Build(std::span<const Item> items, QuadtreeParams params) {
  Rect bounds;
  if (!items.empty()) {
    bounds = items.front().box;
    for (const Item& item : items) bounds = Union(bounds, item.box);
  }
  Quadtree tree(bounds, params);
  for (const Item& item : items) tree.Insert(item.id, item.box);
  return tree;
}

void Quadtree::Insert(int id, const Rect& box) {
  ++size_;
  const Rect& root = nodes_[0].region;
  bool inside = box.x >= root.x && box.Right() <= root.Right() &&
                box.y >= root.y && box.Bottom() <= root.Bottom();
  if (!inside) {
    nodes_[0].items.push_back({id, box});
    return;
  }
  InsertAt(0, {id, box});
}

int Quadtree::ChildFor(const Node& node, const Rect& box) const {
  const double mx = node.region.x + node.region.width / 2;
  const double my = node.region.y + node.region.height / 2;
  int col;
  if (box.Right() < mx) {
    col = 0;
  } else if (box.x > mx) {
    col = 1;
  } else {
    return -1;
  }
  int row;
  if (box.Bottom() < my) {
    row = 0;
  } else if (box.y > my) {
    row = 1;
  } else {
    return -1;
  }
  return row * 2 + col;
}

void Quadtree::InsertAt(int index, Item item) {
  while (true) {
    Node& node = nodes_[index];
    if (node.leaf()) {
      node.items.push_back(item);
      if (static_cast<int>(node.items.size()) > params_.bucket_size &&
          node.depth < params_.max_depth) {
        Split(index);
      }
      return;
    }
    int child = ChildFor(node, item.box);
    if (child < 0) {
      node.items.push_back(item);
      return;
    }
    index = node.children[child];
  }
}

void Quadtree::Split(int index) {
  const Rect r = nodes_[index].region;
  const int depth = nodes_[index].depth + 1;
  const double hw = r.width / 2;
  const double hh = r.height / 2;
  const std::array<Rect, 4> quads = {Rect{r.x, r.y, hw, hh},
                                     Rect{r.x + hw, r.y, hw, hh},
                                     Rect{r.x, r.y + hh, hw, hh},
                                     Rect{r.x + hw, r.y + hh, hw, hh}};
  for (int q = 0; q < 4; ++q) {
    nodes_[index].children[q] = static_cast<int>(nodes_.size());
    nodes_.push_back(Node{quads[q], depth, {-1, -1, -1, -1}, {}});
  }
  std::vector<Item> items = std::move(nodes_[index].items);
  nodes_[index].items.clear();
  for (const Item& item : items) {
    int child = ChildFor(nodes_[index], item.box);
    if (child < 0) {
      nodes_[index].items.push_back(item);
    } else {
      // Children are fresh leaves; this may split them in turn.
      InsertAt(nodes_[index].children[child], item);
    }
  }
}

std::vector<int> Quadtree::Query(const Rect& region) const {
  std::vector<int> out;
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    const Node& node = nodes_[stack.back()];
    const bool is_root = stack.back() == 0;
    stack.pop_back();
    if (!is_root && !node.region.Touches(region)) continue;
    for (const Item& item : node.items) {
      if (item.box.Touches(region)) out.push_back(item.id);
    }
    if (!node.leaf()) {
      for (int child : node.children) stack.push_back(child);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Quadtree::depth() const {
  int d = 0;
  for (const Node& n : nodes_) d = std::max(d, n.depth);
  return d;
}

}  // namespace chartgen
