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

#ifndef MORPHSAMPLE_GRID_HPP_
#define MORPHSAMPLE_GRID_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "morphsample/point.hpp"

namespace morphsample {

inline constexpr int kDefaultCeiling = 255;

// A finite set of grid points, all of the same dimension.  Doubles as the
// domain mask of a grey image and as a flat structuring element.
class BinaryImage {
 public:
  explicit BinaryImage(int dim);
  BinaryImage(int dim, std::initializer_list<Point> points);

  int dim() const { return dim_; }
  size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool contains(const Point& p) const { return points_.count(p) != 0; }

  // Inserts a point.  The point's dimension must match the image's.
  void insert(const Point& p);
  void erase(const Point& p) { points_.erase(p); }

  const PointSet& points() const { return points_; }

  friend bool operator==(const BinaryImage& a, const BinaryImage& b) {
    return a.dim_ == b.dim_ && a.points_ == b.points_;
  }

 private:
  int dim_;
  PointSet points_;
};

// A grey-value image: an integer-valued partial function on the grid.
// Values live in [0, ceiling].  The domain is the set of points that carry
// a value; positions outside the domain are simply absent, not zero.
class GreyImage {
 public:
  explicit GreyImage(int dim, int ceiling = kDefaultCeiling);

  int dim() const { return dim_; }
  int ceiling() const { return ceiling_; }
  size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  bool contains(const Point& p) const { return values_.count(p) != 0; }

  // Value at a domain point.  The point must be in the domain.
  int at(const Point& p) const;

  // Sets f(p) = v.  Requires 0 <= v <= ceiling and matching dimension.
  void set(const Point& p, int v);

  const PointMap<int>& values() const { return values_; }

  BinaryImage domain() const;

  friend bool operator==(const GreyImage& a, const GreyImage& b) {
    return a.dim_ == b.dim_ && a.ceiling_ == b.ceiling_ &&
           a.values_ == b.values_;
  }

 private:
  int dim_;
  int ceiling_;
  PointMap<int> values_;
};

// A sampling lattice: x is a member iff every coordinate x_i is a multiple
// of spacing_i.  Such lattices are subgroups, so S dilated by S equals S
// and S is symmetric about the origin.
class Sieve {
 public:
  explicit Sieve(std::vector<int> spacing);

  int dim() const { return static_cast<int>(spacing_.size()); }
  const std::vector<int>& spacing() const { return spacing_; }
  bool contains(const Point& p) const;

 private:
  std::vector<int> spacing_;
};

// An axis-aligned box, inclusive on both ends.
struct Box {
  Point lo;
  Point hi;

  bool contains(const Point& p) const;
  // Calls fn for every point of the box in row-major order.
  void ForEach(const std::function<void(const Point&)>& fn) const;
  // The box grown by `margin` grid units on every side.
  Box Grown(int margin) const;
};

// Smallest box containing all points; nullopt for the empty image.
std::optional<Box> BoundingBox(const BinaryImage& a);
std::optional<Box> BoundingBox(const GreyImage& f);

// Points in ascending lexicographic order, for deterministic iteration.
std::vector<Point> SortedPoints(const BinaryImage& a);
std::vector<Point> SortedPoints(const GreyImage& f);

// The translation { a + x : a in A }.
BinaryImage Translate(const BinaryImage& a, const Point& x);

// The reflection { -a : a in A }.
BinaryImage Reflect(const BinaryImage& a);

// The spatially reflected image x -> f(-x) on the reflected domain.
// Values are carried unchanged.
GreyImage Reflect(const GreyImage& f);

// F intersected with the sieve, original coordinates kept.
BinaryImage Restrict(const BinaryImage& a, const Sieve& s);
GreyImage Restrict(const GreyImage& f, const Sieve& s);

// True iff every point of a is in b.
bool IsSubset(const BinaryImage& a, const BinaryImage& b);

// Order on grey images: f <= g iff the domain of f is contained in the
// domain of g and f(x) <= g(x) on that domain.  Ceilings must match.
bool Le(const GreyImage& f, const GreyImage& g);

// The negative image x -> ceiling - f(x) on the same domain.  Together
// with Reflect this pairs opening with closing (see
// CheckClosingDuality in grey_morph.hpp).
GreyImage Negate(const GreyImage& f);

}  // namespace morphsample

#endif  // MORPHSAMPLE_GRID_HPP_
