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

#include "morphsample/pooling.hpp"

#include "morphsample/errors.hpp"
#include "morphsample/grey_morph.hpp"

namespace morphsample {

namespace {

void RequireOnSieve(const GreyImage& g, const Sieve& s, const char* what) {
  for (const auto& [p, v] : g.values()) {
    if (!s.contains(p)) {
      throw PreconditionError(std::string(what) + " has the off-sieve point " +
                              ToString(p));
    }
  }
}

}  // namespace

GreyImage Sigma(const GreyImage& f, const FilterSpec& spec) {
  spec.Require();
  return Restrict(Dilate(f, spec.filter()), spec.sieve());
}

GreyImage SigmaDot(const GreyImage& g, const FilterSpec& spec) {
  spec.Require();
  RequireOnSieve(g, spec.sieve(), "pooled image");
  return Close(g, spec.filter());
}

GreyImage Rho(const GreyImage& f, const FilterSpec& spec) {
  return SigmaDot(Sigma(f, spec), spec);
}

GreyImage Delta(const GreyImage& f, const FilterSpec& spec) {
  spec.Require();
  return Dilate(Sigma(f, spec), spec.filter());
}

bool AdjunctionHolds(const GreyImage& f, const GreyImage& g,
                     const FilterSpec& spec) {
  const bool pooled_below = Le(Sigma(f, spec), g);
  const bool below_reconstruction = Le(f, SigmaDot(g, spec));
  return pooled_below == below_reconstruction;
}

Report PoolingOpRelations(const GreyImage& f, const GreyImage& c,
                   const FilterSpec& spec) {
  spec.Require();
  if (c.empty()) {
    throw PreconditionError("empty pooled structuring element");
  }
  RequireOnSieve(c, spec.sieve(), "structuring element");

  const GreyImage& k = spec.filter();
  const GreyImage pooled = Sigma(f, spec);
  const GreyImage cycled = Rho(f, spec);
  const GreyImage lifted = Dilate(f, k);
  Report r;

  CheckGreyEq(r, "pool_relations.sigma_dilate_commute", Sigma(Dilate(f, c), spec),
              Dilate(pooled, c));
  CheckLe(r, "pool_relations.sigma_erode_lower", Sigma(Erode(f, c), spec),
          Erode(pooled, c));
  CheckLe(r, "pool_relations.sigma_erode_upper", Erode(pooled, c),
          Sigma(Erode(lifted, c), spec));
  CheckLe(r, "pool_relations.sigma_open_lower", Sigma(Open(f, c), spec),
          Open(pooled, c));
  CheckLe(r, "pool_relations.sigma_open_upper", Open(pooled, c),
          Sigma(Open(lifted, c), spec));
  CheckLe(r, "pool_relations.sigma_close_lower", Sigma(Close(f, c), spec),
          Close(pooled, c));
  CheckLe(r, "pool_relations.sigma_close_upper", Close(pooled, c),
          Sigma(Close(lifted, c), spec));
  CheckLe(r, "pool_relations.rho_dilate_bound", Dilate(cycled, c),
          Rho(Dilate(f, c), spec));
  CheckLe(r, "pool_relations.rho_erode_lower", Rho(Erode(f, c), spec),
          Erode(cycled, c));
  CheckLe(r, "pool_relations.rho_erode_upper", Erode(cycled, c),
          Rho(Erode(lifted, c), spec));
  CheckLe(r, "pool_relations.rho_open_bound", Open(cycled, c),
          Rho(Open(lifted, c), spec));
  CheckLe(r, "pool_relations.rho_close_bound", Close(cycled, c),
          Rho(Close(lifted, c), spec));

  return r;
}

}  // namespace morphsample
