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

#ifndef CHARTGEN_QUADTREE_H_
#define CHARTGEN_QUADTREE_H_

#include <array>
#include <span>
#include <vector>

#include "chartgen/geometry.h"

namespace chartgen {

struct QuadtreeParams {
  int bucket_size = 8;
  int max_depth = 8;
};

// Region quadtree over boxes. A leaf splits once it holds more than
// `bucket_size` items and is shallower than `max_depth`; items that straddle
// a split line stay in the inner node. Items outside the root region are kept
// at the root and are always examined.
class Quadtree {
 public:
  struct Item {
    int id;
    Rect box;
  };

  explicit Quadtree(Rect region, QuadtreeParams params = {});

  // Root region sized to the union of `items`.
  static Quadtree Build(std::span<const Item> items, QuadtreeParams params = {});

  void Insert(int id, const Rect& box);

  // Ids of items whose box touches `region` (closed test), ascending.
  std::vector<int> Query(const Rect& region) const;

  size_t size() const { return size_; }
  int depth() const;
  size_t node_count() const { return nodes_.size(); }

 private:
  struct Node {
    Rect region;
    int depth = 0;
    std::array<int, 4> children = {-1, -1, -1, -1};
    std::vector<Item> items;

    bool leaf() const { return children[0] < 0; }
  };

  void InsertAt(int node, Item item);
  void Split(int node);
  int ChildFor(const Node& node, const Rect& box) const;

  QuadtreeParams params_;
  std::vector<Node> nodes_;
  size_t size_ = 0;
};

}  // namespace chartgen

#endif  // CHARTGEN_QUADTREE_H_
