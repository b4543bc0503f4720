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

#include "morphsample/grid.hpp"

#include <algorithm>
#include <sstream>

#include "morphsample/errors.hpp"

namespace morphsample {

namespace {

void CheckDim(int want, int got, const char* what) {
  if (want != got) {
    std::ostringstream os;
    os << what << ": dimension mismatch (" << want << " vs " << got << ")";
    throw PreconditionError(os.str());
  }
}

}  // namespace

Point::Point(std::initializer_list<int> coords) : dim_(0), coords_{} {
  if (coords.size() < 1 || coords.size() > kMaxDim) {
    throw PreconditionError("point dimension must be between 1 and 4");
  }
  for (int c : coords) coords_[static_cast<size_t>(dim_++)] = c;
}

Point Point::Zero(int dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw PreconditionError("point dimension must be between 1 and 4");
  }
  Point p;
  p.dim_ = dim;
  return p;
}

Point Point::Extended(int last) const {
  if (dim_ >= kMaxDim) {
    throw PreconditionError("cannot extend a point of maximum dimension");
  }
  Point p = *this;
  p.coords_[static_cast<size_t>(p.dim_++)] = last;
  return p;
}

Point Point::Truncated() const {
  if (dim_ <= 1) {
    throw PreconditionError("cannot truncate a one-dimensional point");
  }
  Point p = *this;
  p.coords_[static_cast<size_t>(--p.dim_)] = 0;
  return p;
}

Point Point::operator+(const Point& o) const {
  CheckDim(dim_, o.dim_, "point addition");
  Point p = *this;
  for (int i = 0; i < dim_; ++i) p[i] += o[i];
  return p;
}

Point Point::operator-(const Point& o) const {
  CheckDim(dim_, o.dim_, "point subtraction");
  Point p = *this;
  for (int i = 0; i < dim_; ++i) p[i] -= o[i];
  return p;
}

Point Point::operator-() const {
  Point p = *this;
  for (int i = 0; i < dim_; ++i) p[i] = -p[i];
  return p;
}

std::string ToString(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < p.dim(); ++i) {
    if (i > 0) os << ',';
    os << p[i];
  }
  os << ')';
  return os.str();
}

BinaryImage::BinaryImage(int dim) : dim_(dim) {
  if (dim < 1 || dim > Point::kMaxDim) {
    throw PreconditionError("image dimension must be between 1 and 4");
  }
}

BinaryImage::BinaryImage(int dim, std::initializer_list<Point> points)
    : BinaryImage(dim) {
  for (const Point& p : points) insert(p);
}

void BinaryImage::insert(const Point& p) {
  CheckDim(dim_, p.dim(), "binary image insert");
  points_.insert(p);
}

GreyImage::GreyImage(int dim, int ceiling) : dim_(dim), ceiling_(ceiling) {
  if (dim < 1 || dim > Point::kMaxDim) {
    throw PreconditionError("image dimension must be between 1 and 4");
  }
  if (ceiling <= 0) {
    throw PreconditionError("grey ceiling must be positive");
  }
}

int GreyImage::at(const Point& p) const {
  auto it = values_.find(p);
  if (it == values_.end()) {
    throw PreconditionError("value lookup outside image domain at " +
                            ToString(p));
  }
  return it->second;
}

void GreyImage::set(const Point& p, int v) {
  CheckDim(dim_, p.dim(), "grey image set");
  if (v < 0 || v > ceiling_) {
    std::ostringstream os;
    os << "grey value " << v << " outside [0, " << ceiling_ << "] at "
       << ToString(p);
    throw PreconditionError(os.str());
  }
  values_[p] = v;
}

BinaryImage GreyImage::domain() const {
  BinaryImage d(dim_);
  for (const auto& [p, v] : values_) d.insert(p);
  return d;
}

Sieve::Sieve(std::vector<int> spacing) : spacing_(std::move(spacing)) {
  if (spacing_.empty() || spacing_.size() > Point::kMaxDim) {
    throw PreconditionError("sieve dimension must be between 1 and 4");
  }
  for (int s : spacing_) {
    if (s < 1) throw PreconditionError("sieve spacing must be positive");
  }
}

bool Sieve::contains(const Point& p) const {
  if (p.dim() != dim()) return false;
  for (int i = 0; i < dim(); ++i) {
    if (p[i] % spacing_[static_cast<size_t>(i)] != 0) return false;
  }
  return true;
}

bool Box::contains(const Point& p) const {
  for (int i = 0; i < p.dim(); ++i) {
    if (p[i] < lo[i] || p[i] > hi[i]) return false;
  }
  return true;
}

void Box::ForEach(const std::function<void(const Point&)>& fn) const {
  Point p = lo;
  const int dim = lo.dim();
  while (true) {
    fn(p);
    int axis = dim - 1;
    while (axis >= 0) {
      if (p[axis] < hi[axis]) {
        ++p[axis];
        break;
      }
      p[axis] = lo[axis];
      --axis;
    }
    if (axis < 0) return;
  }
}

Box Box::Grown(int margin) const {
  Box b = *this;
  for (int i = 0; i < lo.dim(); ++i) {
    b.lo[i] -= margin;
    b.hi[i] += margin;
  }
  return b;
}

namespace {

template <typename Iter>
std::optional<Box> BoundingBoxOf(Iter begin, Iter end, int dim) {
  if (begin == end) return std::nullopt;
  Box b{Point::Zero(dim), Point::Zero(dim)};
  bool first = true;
  for (Iter it = begin; it != end; ++it) {
    const Point& p = *it;
    if (first) {
      b.lo = b.hi = p;
      first = false;
      continue;
    }
    for (int i = 0; i < dim; ++i) {
      b.lo[i] = std::min(b.lo[i], p[i]);
      b.hi[i] = std::max(b.hi[i], p[i]);
    }
  }
  return b;
}

}  // namespace

std::optional<Box> BoundingBox(const BinaryImage& a) {
  return BoundingBoxOf(a.points().begin(), a.points().end(), a.dim());
}

std::optional<Box> BoundingBox(const GreyImage& f) {
  std::vector<Point> pts;
  pts.reserve(f.size());
  for (const auto& [p, v] : f.values()) pts.push_back(p);
  return BoundingBoxOf(pts.begin(), pts.end(), f.dim());
}

std::vector<Point> SortedPoints(const BinaryImage& a) {
  std::vector<Point> pts(a.points().begin(), a.points().end());
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<Point> SortedPoints(const GreyImage& f) {
  std::vector<Point> pts;
  pts.reserve(f.size());
  for (const auto& [p, v] : f.values()) pts.push_back(p);
  std::sort(pts.begin(), pts.end());
  return pts;
}

BinaryImage Translate(const BinaryImage& a, const Point& x) {
  CheckDim(a.dim(), x.dim(), "translate");
  BinaryImage out(a.dim());
  for (const Point& p : a.points()) out.insert(p + x);
  return out;
}

BinaryImage Reflect(const BinaryImage& a) {
  BinaryImage out(a.dim());
  for (const Point& p : a.points()) out.insert(-p);
  return out;
}

GreyImage Reflect(const GreyImage& f) {
  GreyImage out(f.dim(), f.ceiling());
  for (const auto& [p, v] : f.values()) out.set(-p, v);
  return out;
}

BinaryImage Restrict(const BinaryImage& a, const Sieve& s) {
  CheckDim(a.dim(), s.dim(), "restrict");
  BinaryImage out(a.dim());
  for (const Point& p : a.points()) {
    if (s.contains(p)) out.insert(p);
  }
  return out;
}

GreyImage Restrict(const GreyImage& f, const Sieve& s) {
  CheckDim(f.dim(), s.dim(), "restrict");
  GreyImage out(f.dim(), f.ceiling());
  for (const auto& [p, v] : f.values()) {
    if (s.contains(p)) out.set(p, v);
  }
  return out;
}

bool IsSubset(const BinaryImage& a, const BinaryImage& b) {
  CheckDim(a.dim(), b.dim(), "subset test");
  if (a.size() > b.size()) return false;
  for (const Point& p : a.points()) {
    if (!b.contains(p)) return false;
  }
  return true;
}

bool Le(const GreyImage& f, const GreyImage& g) {
  CheckDim(f.dim(), g.dim(), "grey order test");
  if (f.ceiling() != g.ceiling()) {
    throw PreconditionError("grey order test: ceiling mismatch");
  }
  for (const auto& [p, v] : f.values()) {
    auto it = g.values().find(p);
    if (it == g.values().end() || v > it->second) return false;
  }
  return true;
}

GreyImage Negate(const GreyImage& f) {
  GreyImage out(f.dim(), f.ceiling());
  for (const auto& [p, v] : f.values()) out.set(p, f.ceiling() - v);
  return out;
}

}  // namespace morphsample
