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

#include "morphsample/binary_morph.hpp"

#include "morphsample/errors.hpp"

namespace morphsample {

namespace {

void CheckArgs(const BinaryImage& a, const BinaryImage& b, const char* what,
               bool require_nonempty_b) {
  if (a.dim() != b.dim()) {
    throw PreconditionError(std::string(what) + ": dimension mismatch");
  }
  if (require_nonempty_b && b.empty()) {
    throw PreconditionError(std::string(what) +
                            ": empty structuring set not allowed");
  }
}

}  // namespace

BinaryImage Dilate(const BinaryImage& a, const BinaryImage& b) {
  CheckArgs(a, b, "binary dilation", false);
  BinaryImage out(a.dim());
  for (const Point& pa : a.points()) {
    for (const Point& pb : b.points()) out.insert(pa + pb);
  }
  return out;
}

BinaryImage Erode(const BinaryImage& a, const BinaryImage& b) {
  CheckArgs(a, b, "binary erosion", true);
  BinaryImage out(a.dim());
  const Point anchor = *b.points().begin();
  // Each surviving x satisfies x + anchor in A, so x ranges over the
  // translate of A by -anchor.
  for (const Point& pa : a.points()) {
    const Point x = pa - anchor;
    bool fits = true;
    for (const Point& pb : b.points()) {
      if (!a.contains(x + pb)) {
        fits = false;
        break;
      }
    }
    if (fits) out.insert(x);
  }
  return out;
}

BinaryImage Open(const BinaryImage& a, const BinaryImage& b) {
  return Dilate(Erode(a, b), b);
}

BinaryImage Close(const BinaryImage& a, const BinaryImage& b) {
  return Erode(Dilate(a, b), b);
}

BinaryImage OpenReference(const BinaryImage& a, const BinaryImage& b) {
  CheckArgs(a, b, "binary opening", true);
  BinaryImage out(a.dim());
  // Any fitting translate position y satisfies y + pb in A for all pb,
  // so y lies in A dilated by reflect(B).
  const BinaryImage candidates = Dilate(a, Reflect(b));
  for (const Point& y : candidates.points()) {
    bool fits = true;
    for (const Point& pb : b.points()) {
      if (!a.contains(y + pb)) {
        fits = false;
        break;
      }
    }
    if (!fits) continue;
    for (const Point& pb : b.points()) out.insert(y + pb);
  }
  return out;
}

BinaryImage CloseReference(const BinaryImage& a, const BinaryImage& b) {
  CheckArgs(a, b, "binary closing", true);
  BinaryImage out(a.dim());
  if (a.empty()) return out;
  const BinaryImage dilated = Dilate(a, b);
  // Candidates outside the bounding box of A never survive: picking the
  // extreme offset of B per axis pushes x + pb past every point of
  // A dilated by B.
  BoundingBox(a)->ForEach([&](const Point& x) {
    // Translates of reflect(B) covering x are positioned at y = x + pb.
    for (const Point& pb : b.points()) {
      const Point y = x + pb;
      // reflect(B) translated to y meets A iff y lies in A dilated by B.
      if (!dilated.contains(y)) return;
    }
    out.insert(x);
  });
  return out;
}

bool CheckErosionDuality(const BinaryImage& a, const BinaryImage& b,
                         const Box& window) {
  CheckArgs(a, b, "erosion duality check", true);
  for (const Point& p : a.points()) {
    if (!window.contains(p)) {
      throw PreconditionError(
          "erosion duality check: window does not contain the image");
    }
  }
  const BinaryImage eroded = Erode(a, b);
  const BinaryImage reflected = Reflect(b);

  // Complement of A within the window.
  BinaryImage complement(a.dim());
  window.ForEach([&](const Point& p) {
    if (!a.contains(p)) complement.insert(p);
  });
  const BinaryImage rhs = Dilate(complement, reflected);

  bool ok = true;
  window.ForEach([&](const Point& x) {
    if (!ok) return;
    // Only interior points, whose B-translates stay inside the window,
    // are free of boundary effects.
    for (const Point& pb : b.points()) {
      if (!window.contains(x + pb)) return;
    }
    const bool lhs_member = !eroded.contains(x);
    if (lhs_member != rhs.contains(x)) ok = false;
  });
  return ok;
}

}  // namespace morphsample
