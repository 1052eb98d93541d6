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

#ifndef CHARTGEN_GEOMETRY_H_
#define CHARTGEN_GEOMETRY_H_

#include <algorithm>
#include <cmath>

namespace chartgen {

// Pixel-space point. Screen convention: origin top-left, y grows downward.
struct Point {
  double x = 0;
  double y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

struct Size {
  double width = 0;
  double height = 0;

  double Area() const { return width * height; }
  double Diagonal() const { return std::hypot(width, height); }

  friend bool operator==(const Size&, const Size&) = default;
};

// Axis-aligned box, origin top-left.
struct Rect {
  double x = 0;
  double y = 0;
  double width = 0;
  double height = 0;

  double Left() const { return x; }
  double Top() const { return y; }
  double Right() const { return x + width; }
  double Bottom() const { return y + height; }
  double Area() const { return width * height; }
  Point Center() const { return {x + width / 2, y + height / 2}; }

  // Closed-interval test; zero-size rects touching a boundary intersect.
  bool Touches(const Rect& o) const {
    return x <= o.Right() && o.x <= Right() && y <= o.Bottom() &&
           o.y <= Bottom();
  }

  bool Contains(Point p) const {
    return p.x >= x && p.x <= Right() && p.y >= y && p.y <= Bottom();
  }

  static Rect FromCorners(Point a, Point b) {
    double l = std::min(a.x, b.x);
    double t = std::min(a.y, b.y);
    return {l, t, std::max(a.x, b.x) - l, std::max(a.y, b.y) - t};
  }

  friend bool operator==(const Rect&, const Rect&) = default;
};

// Area of the intersection of two boxes; 0 when they only touch.
inline double OverlapArea(const Rect& a, const Rect& b) {
  double w = std::min(a.Right(), b.Right()) - std::max(a.x, b.x);
  double h = std::min(a.Bottom(), b.Bottom()) - std::max(a.y, b.y);
  if (w <= 0 || h <= 0) return 0;
  return w * h;
}

inline Rect Union(const Rect& a, const Rect& b) {
  return Rect::FromCorners({std::min(a.x, b.x), std::min(a.y, b.y)},
                           {std::max(a.Right(), b.Right()),
                            std::max(a.Bottom(), b.Bottom())});
}

inline double Distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace chartgen

#endif  // CHARTGEN_GEOMETRY_H_
