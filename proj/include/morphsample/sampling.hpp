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

#ifndef MORPHSAMPLE_SAMPLING_HPP_
#define MORPHSAMPLE_SAMPLING_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "morphsample/grid.hpp"

namespace morphsample {

// Outcome of a single named check.  Premised checks report kPremiseUnmet
// instead of failing when their premise does not hold for the given
// inputs; only kFail means a claimed relation was violated.
enum class CheckStatus { kPass, kFail, kPremiseUnmet };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  // Fail: the first violating point with both side values.  Premise
  // unmet: which premise.  Empty on pass.
  std::string witness;
};

struct Report {
  std::vector<CheckResult> checks;

  void Add(std::string name, CheckStatus status, std::string witness = "");
  void Append(const Report& other);
  // True when every check passed (premise-unmet counts as not passed).
  bool AllPass() const;
  // True when no check failed; premise-unmet checks are tolerated.
  bool NoFailures() const;
  const CheckResult* Find(const std::string& name) const;
};

// One line per check: `RESULT <name> <pass|fail|premise-unmet> [witness ..]`.
std::string RenderLine(const CheckResult& r);
std::string Render(const Report& r);

// Report builders: each appends one named check to r, with a witness
// naming the lexicographically first offending point on failure.
void CheckSubset(Report& r, std::string name, const BinaryImage& lhs,
                 const BinaryImage& rhs);
void CheckSetEq(Report& r, std::string name, const BinaryImage& lhs,
                const BinaryImage& rhs);
// Le as in grid.hpp: lhs's domain inside rhs's, values pointwise <=.
void CheckLe(Report& r, std::string name, const GreyImage& lhs,
             const GreyImage& rhs);
// Same domain and equal values everywhere (ceilings not compared).
void CheckGreyEq(Report& r, std::string name, const GreyImage& lhs,
                 const GreyImage& rhs);

// Checks that the filter support and sieve can carry sampling:
//
//   sieve_closed_under_sum    the sieve is closed under addition
//   sieve_symmetric           the sieve is symmetric about the origin
//   filter_meets_sieve_only_at_origin
//   filter_symmetric          the support equals its reflection
//   filter_translates_overlap_on_sieve
//                             for every offset d in the support and every
//                             residue class r of the sieve there is a
//                             support point on r whose shift by d stays
//                             in the support
//   sieve_filter_cover        the support alone reaches every residue
//                             class, so its sieve translates tile the grid
//
// The first two hold for every Sieve by construction and are reported for
// completeness.  The overlap check enumerates residue classes rather than
// support pairs, which decides the translate property exactly: whether a
// sieve point serves a pair of translates depends only on the offset
// between them and on the residue of their base point.
Report ValidateBinaryConditions(const BinaryImage& support, const Sieve& s);

// The binary checks on the filter's domain, plus the value-level ones:
//
//   filter_values_symmetric   k(-x) = k(x)
//   filter_subadditive        k(a) <= k(a-b) + k(b) whenever a, b and
//                             a-b all lie in the support
//   filter_zero_at_origin     k(0) = 0
Report ValidateGreyConditions(const GreyImage& k, const Sieve& s);

// A sampling filter paired with its sieve.  Construction runs
// ValidateGreyConditions; operations that need a working spec call
// Require() and throw PreconditionError when validation failed.
class FilterSpec {
 public:
  FilterSpec(GreyImage k, Sieve sieve);

  const GreyImage& filter() const { return k_; }
  const Sieve& sieve() const { return sieve_; }
  int ceiling() const { return k_.ceiling(); }
  bool valid() const { return valid_; }
  const Report& validation() const { return validation_; }
  void Require() const;

 private:
  GreyImage k_;
  Sieve sieve_;
  Report validation_;
  bool valid_;
};

// Reconstructions of a sampled image g (domain inside the sieve, else
// PreconditionError): the dilation by k bounds the original from above,
// the closing by k from below.
GreyImage MaxReconstruct(const GreyImage& g, const FilterSpec& spec);
GreyImage MinReconstruct(const GreyImage& g, const FilterSpec& spec);

// The sampling-theorem suite for binary images.  Writing |S for
// restriction to the sieve, the checks are
//
//   restrict_close_fixpoint   F|S = (Close(F|S, K))|S
//   restrict_dilate_fixpoint  F|S = (Dilate(F|S, K))|S
//   min_reconstruct_bound     Close(F|S, K)  is a subset of Close(F, K)
//   max_reconstruct_bound     Open(F, K)     is a subset of Dilate(F|S, K)
//   sandwich                  Close(F|S, K) <= F <= Dilate(F|S, K),
//                             premised on F = Open(F,K) = Close(F,K)
//   unique_max                any K-open A agreeing with F on the sieve
//                             and containing Dilate(F|S, K) equals it
//   unique_min                any K-closed A agreeing with F on the sieve
//                             and contained in Close(F|S, K) equals it
//
// unique_max/unique_min quantify over all candidates A, which is not
// enumerable; the suite instead tests the implication on the canonical
// candidate and on seeded random perturbations of it, skipping perturbed
// candidates that break a premise.
Report CheckBinarySampling(const BinaryImage& f, const BinaryImage& filter,
                           const Sieve& s, uint64_t seed);

// The grey-value analogue, same check names with values compared
// pointwise and bounds meaning domain containment plus <=.
Report CheckGreySampling(const GreyImage& f, const FilterSpec& spec,
                         uint64_t seed);

// Relation predicates.  Each one states a sampling identity or bound
// whose two sides are built by composing the morphology operations along
// different routes; the report carries one check per clause.  Premised
// predicates (those that need b to be open with respect to the filter,
// or a reconstruction fixpoint) verify the premise on the given inputs
// and report premise-unmet instead of evaluating when it is violated.
// An empty structuring element, or one whose sieve restriction is empty,
// also counts as premise-unmet since erosion by nothing is undefined.

// Dilation on the sieve is bounded by sampled dilation; erosion on the
// sieve dominates sampled erosion.
Report SampledOpBounds(const BinaryImage& f, const BinaryImage& b,
                       const Sieve& s);
Report SampledOpBounds(const GreyImage& f, const GreyImage& b,
                       const FilterSpec& spec);

// With the element already restricted to the sieve, operating then
// sampling equals operating on the sampled image.
Report SampledSeCommute(const BinaryImage& f, const BinaryImage& b,
                        const Sieve& s);
Report SampledSeCommute(const GreyImage& f, const GreyImage& b,
                        const FilterSpec& spec);

// Dilating the minimal reconstruction by b stays below dilating the
// maximal reconstruction by the sampled b.
Report ReconstructDilateBound(const BinaryImage& f, const BinaryImage& b,
                              const BinaryImage& filter, const Sieve& s);
Report ReconstructDilateBound(const GreyImage& f, const GreyImage& b,
                              const FilterSpec& spec);

// Dilation in the sampled domain equals sampling after dilating the
// minimal reconstruction.
Report SampleDilation(const BinaryImage& f, const BinaryImage& b,
                      const BinaryImage& filter, const Sieve& s);
Report SampleDilation(const GreyImage& f, const GreyImage& b,
                      const FilterSpec& spec);

// Erosion in the sampled domain equals sampling after eroding the
// maximal reconstruction.
Report SampleErosion(const BinaryImage& f, const BinaryImage& b,
                     const BinaryImage& filter, const Sieve& s);
Report SampleErosion(const GreyImage& f, const GreyImage& b,
                     const FilterSpec& spec);

// Opening (closing) by the sampled element commutes with sampling.
Report SampledOpeningCommute(const BinaryImage& f, const BinaryImage& b,
                             const Sieve& s);
Report SampledOpeningCommute(const GreyImage& f, const GreyImage& b,
                             const FilterSpec& spec);
Report SampledClosingCommute(const BinaryImage& f, const BinaryImage& b,
                             const Sieve& s);
Report SampledClosingCommute(const GreyImage& f, const GreyImage& b,
                             const FilterSpec& spec);

// Opening and closing in the sampled domain are sandwiched between the
// sampled operations on reconstructions of image respectively element.
Report OpenCloseBounds(const BinaryImage& f, const BinaryImage& b,
                       const BinaryImage& filter, const Sieve& s);
Report OpenCloseBounds(const GreyImage& f, const GreyImage& b,
                       const FilterSpec& spec);

// Under reconstruction fixpoints the sandwich collapses to equality.
// The two clauses carry different fixpoint premises on f (dilation for
// the opening clause, closing for the closing clause) and are premise
// checked independently.
Report OpenCloseExact(const BinaryImage& f, const BinaryImage& b,
                      const BinaryImage& filter, const Sieve& s);
Report OpenCloseExact(const GreyImage& f, const GreyImage& b,
                      const FilterSpec& spec);

// For every sample point s of f and offsets u, z in the support with
// u - z also in the support: f(s) - k(z) <= (f|S dilated by k)(s-z+u)
// - k(u).  Follows from subadditivity of k, so it needs no premise on f
// beyond having at least one sample; the right side is defined at every
// compared point by construction.  Exact while the dilation stays below
// the ceiling.
Report ShiftDiffBound(const GreyImage& f, const FilterSpec& spec);

}  // namespace morphsample

#endif  // MORPHSAMPLE_SAMPLING_HPP_
