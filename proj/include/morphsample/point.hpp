// Copyright 2026 The Morphsample Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MORPHSAMPLE_POINT_HPP_
#define MORPHSAMPLE_POINT_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace morphsample {

// An integer grid position with 1 to 4 coordinates.  The capacity of 4
// covers base images up to 3 dimensions plus the extra value axis that
// umbra sets append.
class Point {
 public:
  static constexpr int kMaxDim = 4;

  Point() : dim_(0), coords_{} {}

  Point(std::initializer_list<int> coords);

  // A point of `dim` zeros, the grid origin.
  static Point Zero(int dim);

  int dim() const { return dim_; }

  int operator[](int axis) const { return coords_[static_cast<size_t>(axis)]; }
  int& operator[](int axis) { return coords_[static_cast<size_t>(axis)]; }

  // A copy with one more trailing coordinate, used to lift a base point
  // into umbra space.
  Point Extended(int last) const;

  // A copy without the last coordinate, the inverse of Extended.
  Point Truncated() const;

  Point operator+(const Point& o) const;
  Point operator-(const Point& o) const;
  Point operator-() const;

  friend bool operator==(const Point& a, const Point& b) = default;
  // Lexicographic order; used for deterministic iteration and witnesses.
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) = default;

 private:
  int dim_;
  std::array<int, kMaxDim> coords_;
};

struct PointHash {
  size_t operator()(const Point& p) const {
    uint64_t h = 0xcbf29ce484222325u;
    for (int i = 0; i < p.dim(); ++i) {
      h ^= static_cast<uint64_t>(static_cast<uint32_t>(p[i]));
      h *= 0x100000001b3u;
    }
    h ^= static_cast<uint64_t>(p.dim());
    h *= 0x100000001b3u;
    return static_cast<size_t>(h);
  }
};

using PointSet = std::unordered_set<Point, PointHash>;

template <typename V>
using PointMap = std::unordered_map<Point, V, PointHash>;

// Formats a point as "(a,b,...)".
std::string ToString(const Point& p);

}  // namespace morphsample

#endif  // MORPHSAMPLE_POINT_HPP_
