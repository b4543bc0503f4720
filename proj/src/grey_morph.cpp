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

#include "morphsample/grey_morph.hpp"

#include <algorithm>
#include <vector>

#include "morphsample/binary_morph.hpp"
#include "morphsample/errors.hpp"
#include "morphsample/umbra.hpp"

namespace morphsample {

namespace {

void CheckPair(const GreyImage& f, const GreyImage& k, const char* what) {
  if (f.dim() != k.dim()) {
    throw PreconditionError(std::string(what) + ": dimension mismatch");
  }
  if (f.ceiling() != k.ceiling()) {
    throw PreconditionError(std::string(what) + ": ceiling mismatch");
  }
  if (k.empty()) {
    throw PreconditionError(std::string(what) +
                            ": empty structuring element not allowed");
  }
}

enum class ErosionFloor { kDrop, kClampToZero };

GreyImage ErodeImpl(const GreyImage& f, const GreyImage& k,
                    ErosionFloor floor) {
  CheckPair(f, k, "grey erosion");
  GreyImage out(f.dim(), f.ceiling());
  const BinaryImage domain = Erode(f.domain(), k.domain());
  for (const Point& x : domain.points()) {
    int worst = f.ceiling();
    for (const auto& [u, kv] : k.values()) {
      worst = std::min(worst, f.at(x + u) - kv);
    }
    if (worst >= 0) {
      out.set(x, worst);
    } else if (floor == ErosionFloor::kClampToZero) {
      out.set(x, 0);
    }
  }
  return out;
}

bool UmbraSubset(const UmbraSet& a, const UmbraSet& b) {
  for (const Point& p : a.points()) {
    if (!b.contains(p)) return false;
  }
  return true;
}

}  // namespace

GreyImage Dilate(const GreyImage& f, const GreyImage& k) {
  CheckPair(f, k, "grey dilation");
  GreyImage out(f.dim(), f.ceiling());
  const BinaryImage domain = Dilate(f.domain(), k.domain());
  for (const Point& x : domain.points()) {
    int best = -1;
    for (const auto& [u, kv] : k.values()) {
      auto it = f.values().find(x - u);
      if (it != f.values().end()) best = std::max(best, it->second + kv);
    }
    out.set(x, std::min(best, f.ceiling()));
  }
  return out;
}

GreyImage Erode(const GreyImage& f, const GreyImage& k) {
  return ErodeImpl(f, k, ErosionFloor::kDrop);
}

GreyImage ErodeClamped(const GreyImage& f, const GreyImage& k) {
  return ErodeImpl(f, k, ErosionFloor::kClampToZero);
}

GreyImage Open(const GreyImage& f, const GreyImage& k) {
  return Dilate(Erode(f, k), k);
}

GreyImage Close(const GreyImage& f, const GreyImage& k) {
  return Erode(Dilate(f, k), k);
}

GreyImage OpenReference(const GreyImage& f, const GreyImage& k) {
  CheckPair(f, k, "grey opening");
  const UmbraSet uf = Umbra(f);
  const UmbraSet uk = Umbra(k);
  UmbraSet acc(f.dim(), f.ceiling());
  // A fitting translate's base footprint satisfies x + K inside F.
  const BinaryImage footprints = Erode(f.domain(), k.domain());
  for (const Point& x : footprints.points()) {
    for (int y = f.ceiling(); y >= 0; --y) {
      const UmbraSet moved = UmbraTranslate(uk, x, y);
      if (moved.empty() || !UmbraSubset(moved, uf)) continue;
      // Lower lifts of the same translate sit strictly below this one,
      // so the highest fit decides every column it touches.
      for (const Point& p : moved.points()) acc.insert(p);
      break;
    }
  }
  return TopSurface(acc);
}

GreyImage CloseReference(const GreyImage& f, const GreyImage& k) {
  CheckPair(f, k, "grey closing");
  GreyImage out(f.dim(), f.ceiling());
  if (f.empty()) return out;
  const UmbraSet uf = Umbra(f);
  const UmbraSet uk = Umbra(k);
  const int l = f.ceiling();

  // Survivors lie within the bounding box of F: covering witnesses with
  // the extreme offset of K per axis rule everything else out.
  const Box candidates = *BoundingBox(f.domain());
  const Box kbox = *BoundingBox(k.domain());
  Box shifts{candidates.lo, candidates.hi};
  for (int i = 0; i < f.dim(); ++i) {
    shifts.lo[i] = -(candidates.hi[i] + kbox.hi[i]);
    shifts.hi[i] = -(candidates.lo[i] + kbox.lo[i]);
  }

  // Precompute every covering witness: the reflected lifted translates
  // of the umbra of k, each with a flag for whether it meets the umbra
  // of f.  Witnesses that meet it never veto anything.
  std::vector<UmbraSet> vetoes;
  shifts.ForEach([&](const Point& x0) {
    for (int y0 = 0; y0 <= l; ++y0) {
      const UmbraSet moved = UmbraTranslate(uk, x0, y0);
      if (moved.empty()) continue;
      UmbraSet tilde = UmbraReflect(moved);
      bool meets = false;
      for (const Point& p : tilde.points()) {
        if (uf.contains(p)) {
          meets = true;
          break;
        }
      }
      if (!meets) vetoes.push_back(std::move(tilde));
    }
  });

  candidates.ForEach([&](const Point& x) {
    for (int y = l; y >= 0; --y) {
      bool vetoed = false;
      for (const UmbraSet& veto : vetoes) {
        if (veto.contains(x, y)) {
          vetoed = true;
          break;
        }
      }
      // Veto sets are upward-closed per column, so the first clear level
      // is the column's top surface value.
      if (!vetoed) {
        out.set(x, y);
        break;
      }
    }
  });
  return out;
}

bool CheckClosingDuality(const GreyImage& f, const GreyImage& k) {
  CheckPair(f, k, "closing duality check");
  const GreyImage lhs = Close(f, k);
  const GreyImage rhs = Negate(Open(Negate(f), Reflect(k)));

  const BinaryImage kdom = k.domain();
  const BinaryImage interior =
      Erode(Erode(f.domain(), Reflect(kdom)), kdom);
  for (const Point& x : interior.points()) {
    if (!lhs.contains(x) || !rhs.contains(x)) return false;
    if (lhs.at(x) != rhs.at(x)) return false;
  }
  return true;
}

}  // namespace morphsample
