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

#ifndef MORPHSAMPLE_POOLING_HPP_
#define MORPHSAMPLE_POOLING_HPP_

#include "morphsample/grid.hpp"
#include "morphsample/sampling.hpp"

namespace morphsample {

// Generalized max-pooling: dilate by the filter, then keep only sieve
// points.  With a flat square filter whose radius matches the stride
// this is classic strided max-pooling.  Requires a valid spec and
// matching ceilings.
GreyImage Sigma(const GreyImage& f, const FilterSpec& spec);

// Reconstructing operator: the closing of a pooled image by the filter.
// g must live on the sieve (PreconditionError otherwise).
GreyImage SigmaDot(const GreyImage& g, const FilterSpec& spec);

// One pooling/reconstruction cycle, SigmaDot(Sigma(f)).  Bounds f from
// above wherever f is defined.
GreyImage Rho(const GreyImage& f, const FilterSpec& spec);

// The coarser upper reconstruction: Sigma(f) dilated by the filter.
// Rho(f) <= Delta(f) always.
GreyImage Delta(const GreyImage& f, const FilterSpec& spec);

// True iff (Sigma(f) <= g) and (f <= SigmaDot(g)) agree for this pair.
// The two directions are equivalent for every pair when pooling stays
// below the ceiling; clamping can break the right-to-left direction.
// g must live on the sieve.
bool AdjunctionHolds(const GreyImage& f, const GreyImage& g,
                     const FilterSpec& spec);

// How pooling and reconstruction interact with dilation, erosion,
// opening and closing by a sampled element c (nonempty, domain inside
// the sieve, PreconditionError otherwise).  One check per relation:
//
//   sigma_dilate_commute   Sigma(f + c) equals Sigma(f) + c (exact)
//   sigma_erode_lower      Sigma(f - c)        <= Sigma(f) - c
//   sigma_erode_upper      Sigma(f) - c        <= Sigma((f + k) - c)
//   sigma_open_lower       Sigma(f open c)     <= Sigma(f) open c
//   sigma_open_upper       Sigma(f) open c     <= Sigma((f + k) open c)
//   sigma_close_lower      Sigma(f close c)    <= Sigma(f) close c
//   sigma_close_upper      Sigma(f) close c    <= Sigma((f + k) close c)
//   rho_dilate_bound       Rho(f) + c          <= Rho(f + c)
//   rho_erode_lower        Rho(f - c)          <= Rho(f) - c
//   rho_erode_upper        Rho(f) - c          <= Rho((f + k) - c)
//   rho_open_bound         Rho(f) open c       <= Rho((f + k) open c)
//   rho_close_bound        Rho(f) close c      <= Rho((f + k) close c)
//
// where + and - abbreviate dilation and erosion by c (k inside Sigma and
// Rho).  The chains assume value headroom; near the ceiling the erosion
// bounds can break, so callers keep max(f) + max(k) + max(c) within the
// ceiling when exactness matters.
Report PoolingOpRelations(const GreyImage& f, const GreyImage& c,
                   const FilterSpec& spec);

}  // namespace morphsample

#endif  // MORPHSAMPLE_POOLING_HPP_
