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

#include "morphsample/umbra.hpp"

#include <algorithm>

#include "morphsample/binary_morph.hpp"
#include "morphsample/errors.hpp"

namespace morphsample {

namespace {

void CheckPair(const UmbraSet& a, const UmbraSet& b, const char* what,
               bool require_nonempty_b) {
  if (a.base_dim() != b.base_dim()) {
    throw PreconditionError(std::string(what) + ": dimension mismatch");
  }
  if (a.ceiling() != b.ceiling()) {
    throw PreconditionError(std::string(what) + ": ceiling mismatch");
  }
  if (require_nonempty_b && b.empty()) {
    throw PreconditionError(std::string(what) +
                            ": empty structuring set not allowed");
  }
}

}  // namespace

UmbraSet::UmbraSet(int base_dim, int ceiling)
    : base_dim_(base_dim), ceiling_(ceiling) {
  if (base_dim < 1 || base_dim >= Point::kMaxDim) {
    throw PreconditionError("umbra base dimension must be between 1 and 3");
  }
  if (ceiling <= 0) {
    throw PreconditionError("umbra ceiling must be positive");
  }
}

bool UmbraSet::contains(const Point& base, int value) const {
  return contains(base.Extended(value));
}

void UmbraSet::insert(const Point& base, int value) {
  insert(base.Extended(value));
}

void UmbraSet::insert(const Point& lifted) {
  if (lifted.dim() != base_dim_ + 1) {
    throw PreconditionError("umbra insert: dimension mismatch");
  }
  const int value = lifted[base_dim_];
  if (value < 0 || value > ceiling_) {
    throw PreconditionError("umbra insert: value outside slab at " +
                            ToString(lifted));
  }
  points_.insert(lifted);
}

UmbraSet Umbra(const GreyImage& f) {
  UmbraSet u(f.dim(), f.ceiling());
  for (const auto& [p, v] : f.values()) {
    for (int y = 0; y <= v; ++y) u.insert(p, y);
  }
  return u;
}

GreyImage TopSurface(const UmbraSet& a) {
  GreyImage f(a.base_dim(), a.ceiling());
  PointMap<int> best;
  for (const Point& lifted : a.points()) {
    const int value = lifted[a.base_dim()];
    const Point base = lifted.Truncated();
    auto [it, fresh] = best.emplace(base, value);
    if (!fresh) it->second = std::max(it->second, value);
  }
  for (const auto& [p, v] : best) f.set(p, v);
  return f;
}

UmbraSet UmbraTranslate(const UmbraSet& a, const Point& x0, int y0) {
  if (y0 < 0) {
    throw PreconditionError("umbra translate: negative value shift");
  }
  if (x0.dim() != a.base_dim()) {
    throw PreconditionError("umbra translate: dimension mismatch");
  }
  UmbraSet out(a.base_dim(), a.ceiling());
  const Point shift = x0.Extended(y0);
  for (const Point& lifted : a.points()) {
    const Point moved = lifted + shift;
    if (moved[a.base_dim()] <= a.ceiling()) out.insert(moved);
  }
  return out;
}

UmbraSet UmbraReflect(const UmbraSet& a) {
  if (a.empty()) {
    throw PreconditionError("umbra reflect: empty input");
  }
  const GreyImage top = TopSurface(a);
  UmbraSet out(a.base_dim(), a.ceiling());
  for (const auto& [p, t] : top.values()) {
    for (int v = a.ceiling() - t; v <= a.ceiling(); ++v) out.insert(-p, v);
  }
  return out;
}

UmbraSet UmbraDilate(const UmbraSet& a, const UmbraSet& b) {
  CheckPair(a, b, "umbra dilation", false);
  UmbraSet out(a.base_dim(), a.ceiling());
  for (const Point& lifted : b.points()) {
    const int yb = lifted[b.base_dim()];
    const Point xb = lifted.Truncated();
    const UmbraSet moved = UmbraTranslate(a, xb, yb);
    for (const Point& p : moved.points()) out.insert(p);
  }
  return out;
}

UmbraSet UmbraErode(const UmbraSet& a, const UmbraSet& b) {
  CheckPair(a, b, "umbra erosion", true);
  const int lifted_dim = a.base_dim() + 1;
  BinaryImage lifted_a(lifted_dim);
  for (const Point& p : a.points()) lifted_a.insert(p);
  BinaryImage lifted_b(lifted_dim);
  for (const Point& p : b.points()) lifted_b.insert(p);

  UmbraSet out(a.base_dim(), a.ceiling());
  const BinaryImage eroded = Erode(lifted_a, lifted_b);
  for (const Point& p : eroded.points()) {
    const int value = p[a.base_dim()];
    if (value >= 0 && value <= a.ceiling()) out.insert(p);
  }
  return out;
}

}  // namespace morphsample
