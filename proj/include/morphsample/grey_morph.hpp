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

#ifndef MORPHSAMPLE_GREY_MORPH_HPP_
#define MORPHSAMPLE_GREY_MORPH_HPP_

#include "morphsample/grid.hpp"

namespace morphsample {

// Grey-value morphology on partial images.  A structuring element is just
// a small GreyImage, typically containing the origin.  Operands must
// share a ceiling; the structuring element must be nonempty.
//
// Values clamp at the ceiling on dilation.  Erosion comes in two
// flavours; see Erode and ErodeClamped.

// (f (+) k)(x) = min(ceiling, max { f(x-u) + k(u) : u in K, x-u in F })
// on the domain F (+) K.
GreyImage Dilate(const GreyImage& f, const GreyImage& k);

// (f (-) k)(x) = min { f(x+u) - k(u) : u in K } on the positions of
// F (-) K where that minimum is nonnegative.  Positions with a negative
// minimum are dropped from the domain rather than floored; the sampling
// reconstruction identities in this library are exact only under this
// reading.  ErodeClamped keeps such positions at zero instead.
GreyImage Erode(const GreyImage& f, const GreyImage& k);

// Same minimum as Erode, but every position of F (-) K stays in the
// domain with value max(0, minimum).
GreyImage ErodeClamped(const GreyImage& f, const GreyImage& k);

// Erode then Dilate, and Dilate then Erode, with the same element.
GreyImage Open(const GreyImage& f, const GreyImage& k);
GreyImage Close(const GreyImage& f, const GreyImage& k);

// Reference forms computed through explicit umbra sets rather than the
// value formulas.  Desk-scale inputs only.
//
// OpenReference unions every lifted translate of the umbra of k that
// fits inside the umbra of f, then takes the top surface.
GreyImage OpenReference(const GreyImage& f, const GreyImage& k);

// CloseReference keeps the lifted points hit by no empty witness: a
// point survives iff every reflected translate of the umbra of k that
// covers it also meets the umbra of f.
GreyImage CloseReference(const GreyImage& f, const GreyImage& k);

// Verifies Close(f,k) = Negate(Open(Negate(f), Reflect(k))) on the
// interior where every contributing window lies fully inside F, that is
// on (F eroded by reflect(K)) eroded by K.  Outside that region the two
// sides genuinely differ for partial images: an absent neighbour acts as
// minus infinity for dilation but plus infinity for erosion, and
// negation swaps the two roles.  Exact as long as dilation of f never
// hits the ceiling there.
bool CheckClosingDuality(const GreyImage& f, const GreyImage& k);

}  // namespace morphsample

#endif  // MORPHSAMPLE_GREY_MORPH_HPP_
