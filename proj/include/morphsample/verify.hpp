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

#ifndef MORPHSAMPLE_VERIFY_HPP_
#define MORPHSAMPLE_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morphsample/grid.hpp"
#include "morphsample/sampling.hpp"

namespace morphsample {

// Randomized verification harness.  A suite is a named recipe that draws
// inputs honoring the premises of one identity (or one family of
// identities), evaluates it, and reports per-check pass / fail /
// premise-unmet counts.  Everything is driven by a single 64-bit seed;
// trial i uses seed + i, so any trial can be replayed in isolation and
// trials can run on any number of threads without changing the report.

// The structuring element handed to suites that take one, beyond the
// sampling filter itself.
enum class SeChoice {
  kFlatB,         // the built-in flat 5x5 element without its corners
  kB2,            // the built-in weighted 5x5 element
  kRandomOpened,  // a random 5x5 element, opened by the filter
};

// Accepts "flat5", "b2", or "random".  Unknown names throw
// PreconditionError.
SeChoice SeChoiceFromName(const std::string& name);

struct TrialConfig {
  explicit TrialConfig(FilterSpec filter_spec) : spec(std::move(filter_spec)) {}

  FilterSpec spec;
  uint64_t seed = 0;
  int trials = 0;
  int rows = 0;
  int cols = 0;
  // Largest value drawn for image pixels.  RunSuite requires
  // value_max + max(filter) + max(element) <= ceiling so that one
  // dilation chain cannot clamp; deeper derived chains may still touch
  // the ceiling, which the order checks tolerate by design.
  int value_max = 0;
  SeChoice se_choice = SeChoice::kFlatB;
  std::vector<std::string> suites;
  // Random images drop each pixel with probability 1/10 to exercise
  // partial domains; set false for full-rectangle pipelines.
  bool holes = true;
};

struct CheckStats {
  std::string name;
  int pass = 0;
  int fail = 0;
  int premise_unmet = 0;
};

struct Counterexample {
  int trial = 0;
  std::string check;
  std::string witness;
  // The drawn inputs as labelled SEM blocks, enough to replay the
  // failure by hand.  Binary inputs serialize with all values 1.
  std::string inputs;
};

// Aggregated outcome of a run.  Checks appear in first-evaluation order;
// the counterexample is the first failure in (suite, trial) order.
// wall_ms is measured and therefore excluded from Render(), which is
// byte-identical for a fixed (seed, config).
struct TrialReport {
  int trials = 0;
  std::vector<CheckStats> checks;
  std::optional<Counterexample> counterexample;
  long long wall_ms = 0;

  bool FailureFree() const;
  const CheckStats* Find(const std::string& name) const;
  std::string Render() const;
};

// All registered suite names, in registry order.
std::vector<std::string> SuiteNames();

// The largest value_max RunSuite accepts for this configuration: the
// ceiling minus the filter's and the element choice's largest values,
// shrunk further when `suites` includes the umbra oracle (which draws
// its own elements and needs headroom below the ceiling).  Never
// negative.
int DefaultValueMax(const FilterSpec& spec, SeChoice se_choice,
                    const std::vector<std::string>& suites);

// Runs config.trials trials of every suite in config.suites and
// aggregates.  Unknown suite names, invalid specs, or value budgets that
// can clamp throw PreconditionError.  Parallelism is capped by the
// MORPHSAMPLE_THREADS environment variable (default: hardware threads);
// the report does not depend on it.
TrialReport RunSuite(const TrialConfig& config);

// Exhaustive enumeration for desk-scale universal checks.  Every image
// assignment within the bounds is evaluated; the documented limit is
// 20,000,000 evaluations, beyond which PreconditionError is thrown.
// Empty bounds give an empty report.
struct ExhaustiveBounds {
  explicit ExhaustiveBounds(FilterSpec filter_spec)
      : spec(std::move(filter_spec)) {}

  FilterSpec spec;
  int rows = 0;
  int cols = 0;
  int value_max = 0;  // ignored by the binary enumeration
};

// Suites accepted by ExhaustiveSmall.
std::vector<std::string> ExhaustiveNames();

TrialReport ExhaustiveSmall(const std::string& suite,
                            const ExhaustiveBounds& bounds);

}  // namespace morphsample

#endif  // MORPHSAMPLE_VERIFY_HPP_
