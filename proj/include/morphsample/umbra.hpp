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

#ifndef MORPHSAMPLE_UMBRA_HPP_
#define MORPHSAMPLE_UMBRA_HPP_

#include "morphsample/grid.hpp"

namespace morphsample {

// A finite subset of the slab grid x value-axis, with values in
// [0, ceiling].  Grey morphology becomes binary morphology on such sets
// one dimension up; this type is the brute-force oracle behind the fast
// value-formula implementations and is meant for desk-scale inputs.
//
// Points are stored lifted: a pair (x, y) of base point x and value y is
// the (N+1)-dimensional point whose last coordinate is y.  Sets here are
// not required to be column-downward-closed; reflection produces
// upward-closed columns on purpose.
class UmbraSet {
 public:
  UmbraSet(int base_dim, int ceiling);

  int base_dim() const { return base_dim_; }
  int ceiling() const { return ceiling_; }
  size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  bool contains(const Point& base, int value) const;
  bool contains(const Point& lifted) const { return points_.count(lifted) != 0; }

  // Inserts the pair (base, value).  The value must lie in [0, ceiling].
  void insert(const Point& base, int value);
  void insert(const Point& lifted);

  const PointSet& points() const { return points_; }

  friend bool operator==(const UmbraSet& a, const UmbraSet& b) {
    return a.base_dim_ == b.base_dim_ && a.ceiling_ == b.ceiling_ &&
           a.points_ == b.points_;
  }

 private:
  int base_dim_;
  int ceiling_;
  PointSet points_;  // lifted points, dimension base_dim_ + 1
};

// The filled region below the graph of f: every (x, y) with x in the
// domain of f and 0 <= y <= f(x).
UmbraSet Umbra(const GreyImage& f);

// Column maxima: domain is the set of base points with at least one
// member, the value the largest one.  The empty set gives an empty image.
GreyImage TopSurface(const UmbraSet& a);

// Shifts a by x0 in the base grid and lifts values by y0 >= 0.  Points
// pushed above the ceiling are dropped, so the result stays in the slab.
UmbraSet UmbraTranslate(const UmbraSet& a, const Point& x0, int y0);

// The value-axis reflection: for each base point x with -x occupied in a,
// the column from ceiling - top(-x) up to ceiling.  Columns come out
// upward-closed.  The input must be nonempty.
UmbraSet UmbraReflect(const UmbraSet& a);

// Union of clamped translates of a, one per point of b.
UmbraSet UmbraDilate(const UmbraSet& a, const UmbraSet& b);

// Literal binary erosion of the lifted point sets, restricted to the
// slab.  b must be nonempty.
UmbraSet UmbraErode(const UmbraSet& a, const UmbraSet& b);

}  // namespace morphsample

#endif  // MORPHSAMPLE_UMBRA_HPP_
