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

#ifndef MORPHSAMPLE_BINARY_MORPH_HPP_
#define MORPHSAMPLE_BINARY_MORPH_HPP_

#include "morphsample/grid.hpp"

namespace morphsample {

// Minkowski sum { a + b : a in A, b in B }.
BinaryImage Dilate(const BinaryImage& a, const BinaryImage& b);

// { x : translate(B, x) is contained in A }.  B must be nonempty; eroding
// by the empty set would yield the whole grid, which is not representable.
BinaryImage Erode(const BinaryImage& a, const BinaryImage& b);

// Erosion followed by dilation with the same structuring set.
BinaryImage Open(const BinaryImage& a, const BinaryImage& b);

// Dilation followed by erosion with the same structuring set.
BinaryImage Close(const BinaryImage& a, const BinaryImage& b);

// Reference forms computed from first principles rather than by composing
// Erode and Dilate.  Intended for small inputs and cross-checking.
//
// OpenReference unions every translate of B that fits inside A.
BinaryImage OpenReference(const BinaryImage& a, const BinaryImage& b);

// CloseReference keeps x iff every translate of reflect(B) that covers x
// also meets A.
BinaryImage CloseReference(const BinaryImage& a, const BinaryImage& b);

// Verifies the complement identity: eroding A and complementing equals
// dilating the complement of A by reflect(B).  Complements are taken
// within `window`, and the two sides are compared on the window's
// interior, the points whose B-translates stay inside the window, where
// boundary effects cannot reach.  A must lie inside the window.
bool CheckErosionDuality(const BinaryImage& a, const BinaryImage& b,
                         const Box& window);

}  // namespace morphsample

#endif  // MORPHSAMPLE_BINARY_MORPH_HPP_
