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

// Acceptance gate: eleven release criteria, each printed as one
// CRITERION line with its wall time and budget.  All comparisons are
// exact integer comparisons; equalities marked byte-identical are
// compared on the serialized text of both sides, each side computed by
// an independent operator composition.
//
// Canonical configuration unless a criterion states otherwise: 24x24
// images, values <= 63, ceiling 255, spacing (2,2), 3x3 box filter,
// seed 7, 200 trials.
//
// Usage: acceptance [criterion-number...]; no arguments runs all.
// Exit code: the number of failed criteria.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "morphsample/builtin_se.hpp"
#include "morphsample/grey_morph.hpp"
#include "morphsample/grid.hpp"
#include "morphsample/image_io.hpp"
#include "morphsample/pooling.hpp"
#include "morphsample/sampling.hpp"
#include "morphsample/verify.hpp"

namespace morphsample {
namespace {

constexpr uint64_t kSeed = 7;
constexpr int kTrials = 200;
constexpr int kRows = 24;
constexpr int kCols = 24;
constexpr int kValueMax = 63;

// Collects failure descriptions for one criterion.
struct Judge {
  std::vector<std::string> problems;

  void Expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

Sieve Stride2() { return Sieve({2, 2}); }

FilterSpec FlatSpec() { return FilterSpec(BuiltinSe("flat3"), Stride2()); }

FilterSpec RingSpec() { return FilterSpec(BuiltinSe("k2"), Stride2()); }

// Canonical random image: one in ten pixels is a hole.
GreyImage DrawImage(uint64_t trial) {
  std::mt19937_64 rng(kSeed + trial);
  GreyImage f(2, kDefaultCeiling);
  for (int r = 0; r < kRows; ++r) {
    for (int c = 0; c < kCols; ++c) {
      if (rng() % 10 == 0) continue;
      f.set(Point{r, c}, static_cast<int>(rng() % (kValueMax + 1)));
    }
  }
  if (f.empty()) f.set(Point{0, 0}, 0);
  return f;
}

std::string SemString(const GreyImage& f) {
  std::ostringstream out;
  WriteSem(f, out);
  return out.str();
}

TrialConfig CanonicalConfig(FilterSpec spec,
                            std::vector<std::string> suites) {
  TrialConfig cfg{std::move(spec)};
  cfg.seed = kSeed;
  cfg.trials = kTrials;
  cfg.rows = kRows;
  cfg.cols = kCols;
  cfg.value_max = kValueMax;
  cfg.suites = std::move(suites);
  return cfg;
}

// Runs a suite and requires zero failures plus genuine coverage: every
// check must pass at least `min_pass` times.
void ExpectSuite(Judge& judge, const TrialConfig& cfg,
                 const std::string& label, int min_pass) {
  const TrialReport report = RunSuite(cfg);
  if (!report.FailureFree()) {
    std::string detail = label + ": failures";
    if (report.counterexample.has_value()) {
      detail += " (first: " + report.counterexample->check + " trial " +
                std::to_string(report.counterexample->trial) + ")";
    }
    judge.problems.push_back(detail);
    return;
  }
  for (const CheckStats& check : report.checks) {
    judge.Expect(check.fail == 0, label + ": " + check.name + " failed");
    judge.Expect(check.pass >= min_pass,
                 label + ": " + check.name + " passed only " +
                     std::to_string(check.pass) + " times");
  }
}

// ---- criterion bodies ------------------------------------------------

void Criterion1(Judge& judge) {
  const Sieve s = Stride2();
  const Report flat = ValidateGreyConditions(BuiltinSe("flat3"), s);
  judge.Expect(flat.AllPass(), "flat 3x3 filter fails a condition");
  const Report ring = ValidateGreyConditions(BuiltinSe("k2"), s);
  judge.Expect(ring.AllPass(), "weighted 3x3 filter fails a condition");

  GreyImage box5(2, kDefaultCeiling);
  for (int r = -2; r <= 2; ++r) {
    for (int c = -2; c <= 2; ++c) box5.set(Point{r, c}, 0);
  }
  const Report wide = ValidateGreyConditions(box5, s);
  const CheckResult* meets = wide.Find("filter_meets_sieve_only_at_origin");
  judge.Expect(meets != nullptr && meets->status == CheckStatus::kFail,
               "5x5 box not rejected by the origin-meeting condition");
  judge.Expect(meets != nullptr && !meets->witness.empty(),
               "5x5 box rejection carries no witness");
}

void Criterion2(Judge& judge) {
  for (const auto& [label, spec] :
       {std::pair{"flat", FlatSpec()}, std::pair{"ring", RingSpec()}}) {
    TrialConfig cfg = CanonicalConfig(spec, {"grey-sampling"});
    const TrialReport report = RunSuite(cfg);
    judge.Expect(report.FailureFree(),
                 std::string(label) + ": grey sampling suite failures");
    for (const CheckStats& check : report.checks) {
      judge.Expect(check.fail == 0,
                   std::string(label) + ": " + check.name + " failed");
      // The fixpoint and bound results hold for every draw; the
      // premise-guarded results get a qualifying input at least on the
      // injected trials (every fifth).
      const bool premised = check.name.find("sandwich") != std::string::npos ||
                            check.name.find("unique") != std::string::npos;
      const int floor = premised ? kTrials / 5 : kTrials;
      judge.Expect(check.pass >= floor,
                   std::string(label) + ": " + check.name +
                       " passed only " + std::to_string(check.pass));
    }
  }
}

void Criterion3(Judge& judge) {
  TrialConfig cfg = CanonicalConfig(FlatSpec(), {"bin-sampling"});
  const TrialReport report = RunSuite(cfg);
  judge.Expect(report.FailureFree(), "binary sampling suite failures");
  for (const CheckStats& check : report.checks) {
    judge.Expect(check.fail == 0, check.name + " failed");
    const bool premised = check.name.find("sandwich") != std::string::npos ||
                          check.name.find("unique") != std::string::npos;
    const int floor = premised ? kTrials / 5 : kTrials;
    judge.Expect(check.pass >= floor,
                 check.name + " passed only " + std::to_string(check.pass));
  }
}

void Criterion4(Judge& judge) {
  struct Pair {
    const char* label;
    FilterSpec spec;
    GreyImage element;
  };
  const std::vector<Pair> pairs = {
      {"flat", FlatSpec(), Open(BuiltinSe("flat5"), BuiltinSe("flat3"))},
      {"ring", RingSpec(), Open(BuiltinSe("b2"), BuiltinSe("k2"))},
  };
  for (const Pair& pair : pairs) {
    const GreyImage& k = pair.spec.filter();
    const Sieve& s = pair.spec.sieve();
    const GreyImage& b = pair.element;
    const GreyImage bs = Restrict(b, s);
    judge.Expect(b == Open(b, k), std::string(pair.label) +
                                      ": element is not open by the filter");
    judge.Expect(!bs.empty(),
                 std::string(pair.label) + ": element misses the grid");
    for (int trial = 0; trial < kTrials; ++trial) {
      const GreyImage fs = Restrict(DrawImage(trial), s);
      const std::string dilate_lhs = SemString(Dilate(fs, bs));
      const std::string dilate_rhs =
          SemString(Restrict(Dilate(Close(fs, k), b), s));
      if (dilate_lhs != dilate_rhs) {
        judge.problems.push_back(std::string(pair.label) +
                                 ": dilation sides differ at trial " +
                                 std::to_string(trial));
        return;
      }
      const std::string erode_lhs = SemString(Erode(fs, bs));
      const std::string erode_rhs =
          SemString(Restrict(Erode(Dilate(fs, k), b), s));
      if (erode_lhs != erode_rhs) {
        judge.problems.push_back(std::string(pair.label) +
                                 ": erosion sides differ at trial " +
                                 std::to_string(trial));
        return;
      }
    }
  }
}

void Criterion5(Judge& judge) {
  struct Pair {
    const char* label;
    FilterSpec spec;
    GreyImage open_element;  // fixed under opening by the filter
  };
  const std::vector<Pair> pairs = {
      {"flat", FlatSpec(), Open(BuiltinSe("flat5"), BuiltinSe("flat3"))},
      {"ring", RingSpec(), Open(BuiltinSe("b2"), BuiltinSe("k2"))},
  };
  for (const Pair& pair : pairs) {
    const GreyImage& k = pair.spec.filter();
    const Sieve& s = pair.spec.sieve();
    // The exactness theorem wants an element that is the dilation of
    // its own samples.
    const GreyImage b_exact = Dilate(Restrict(pair.open_element, s), k);
    for (int trial = 0; trial < kTrials; ++trial) {
      const GreyImage f = DrawImage(trial);
      const Report bounds = OpenCloseBounds(f, pair.open_element, pair.spec);
      if (!bounds.AllPass()) {
        judge.problems.push_back(std::string(pair.label) +
                                 ": bound violated at trial " +
                                 std::to_string(trial));
        return;
      }
      const GreyImage gs = Restrict(f, s);
      const Report open_exact =
          OpenCloseExact(Dilate(gs, k), b_exact, pair.spec);
      const CheckResult* open_check =
          open_exact.Find("grey_open_close_exact.open");
      if (open_check == nullptr || open_check->status != CheckStatus::kPass) {
        judge.problems.push_back(std::string(pair.label) +
                                 ": opening exactness not established at "
                                 "trial " +
                                 std::to_string(trial));
        return;
      }
      const Report close_exact =
          OpenCloseExact(Close(gs, k), b_exact, pair.spec);
      const CheckResult* close_check =
          close_exact.Find("grey_open_close_exact.close");
      if (close_check == nullptr ||
          close_check->status != CheckStatus::kPass) {
        judge.problems.push_back(std::string(pair.label) +
                                 ": closing exactness not established at "
                                 "trial " +
                                 std::to_string(trial));
        return;
      }
    }
  }
}

void Criterion6(Judge& judge) {
  struct Pair {
    const char* label;
    FilterSpec spec;
    GreyImage element;       // any element works for the bounds
    GreyImage open_element;  // the reconstruct-dilate bound premise
  };
  const std::vector<Pair> pairs = {
      {"flat", FlatSpec(), BuiltinSe("flat5"),
       Open(BuiltinSe("flat5"), BuiltinSe("flat3"))},
      {"ring", RingSpec(), BuiltinSe("b2"),
       Open(BuiltinSe("b2"), BuiltinSe("k2"))},
  };
  for (const Pair& pair : pairs) {
    for (int trial = 0; trial < kTrials; ++trial) {
      const GreyImage f = DrawImage(trial);
      Report all;
      all.Append(SampledOpBounds(f, pair.element, pair.spec));
      all.Append(SampledSeCommute(f, pair.element, pair.spec));
      all.Append(SampledOpeningCommute(f, pair.element, pair.spec));
      all.Append(SampledClosingCommute(f, pair.element, pair.spec));
      all.Append(ReconstructDilateBound(f, pair.open_element, pair.spec));
      all.Append(ShiftDiffBound(f, pair.spec));
      if (!all.AllPass()) {
        for (const CheckResult& check : all.checks) {
          if (check.status != CheckStatus::kPass) {
            judge.problems.push_back(std::string(pair.label) + ": " +
                                     check.name + " at trial " +
                                     std::to_string(trial));
          }
        }
        return;
      }
    }
  }
}

void Criterion7(Judge& judge) {
  TrialConfig cfg{FilterSpec(BuiltinSe("flat3", 15), Stride2())};
  cfg.seed = kSeed;
  cfg.trials = 50;
  cfg.rows = 8;
  cfg.cols = 8;
  cfg.value_max = 11;  // ceiling 15 minus the oracle element headroom
  cfg.suites = {"umbra-oracle"};
  const TrialReport report = RunSuite(cfg);
  judge.Expect(report.FailureFree(), "umbra oracle disagreement");
  judge.Expect(report.checks.size() == 6, "umbra oracle check set changed");
  for (const CheckStats& check : report.checks) {
    judge.Expect(check.pass == 50,
                 check.name + " passed only " + std::to_string(check.pass));
  }
}

void Criterion8(Judge& judge) {
  // Exhaustive adjunction over the tiny window.
  ExhaustiveBounds bounds{FilterSpec(BuiltinSe("flat3", 3), Stride2())};
  bounds.rows = 2;
  bounds.cols = 2;
  bounds.value_max = 3;
  const TrialReport adjunction = ExhaustiveSmall("pool-adjunction", bounds);
  judge.Expect(adjunction.FailureFree(), "adjunction counterexample found");
  judge.Expect(adjunction.trials == 1024,
               "adjunction enumeration covered " +
                   std::to_string(adjunction.trials) + " pairs, wanted 1024");

  // Reconstruction bounds on canonical draws.
  for (const auto& [label, spec] :
       {std::pair{"flat", FlatSpec()}, std::pair{"ring", RingSpec()}}) {
    ExpectSuite(judge, CanonicalConfig(spec, {"pool-reconstruct-bounds"}),
                std::string(label) + " pooling bounds", kTrials);
  }

  // Operator relations, with the commuting one byte-identical.
  GreyImage flat_c(2, kDefaultCeiling);
  for (int r = -2; r <= 2; r += 2) {
    for (int c = -2; c <= 2; c += 2) flat_c.set(Point{r, c}, 0);
  }
  struct Pair {
    const char* label;
    FilterSpec spec;
    GreyImage pool_element;
  };
  const std::vector<Pair> pairs = {
      {"flat", FlatSpec(), flat_c},
      {"ring", RingSpec(), BuiltinSe("c2")},
  };
  for (const Pair& pair : pairs) {
    for (int trial = 0; trial < kTrials; ++trial) {
      const GreyImage f = DrawImage(trial);
      const std::string commute_lhs =
          SemString(Sigma(Dilate(f, pair.pool_element), pair.spec));
      const std::string commute_rhs =
          SemString(Dilate(Sigma(f, pair.spec), pair.pool_element));
      if (commute_lhs != commute_rhs) {
        judge.problems.push_back(
            std::string(pair.label) +
            ": pooled dilation not byte-identical at trial " +
            std::to_string(trial));
        return;
      }
      const Report relations =
          PoolingOpRelations(f, pair.pool_element, pair.spec);
      if (!relations.AllPass()) {
        judge.problems.push_back(std::string(pair.label) +
                                 ": relation violated at trial " +
                                 std::to_string(trial));
        return;
      }
    }
  }
}

void Criterion9(Judge& judge) {
  for (const auto& [label, spec, choice] :
       {std::tuple{"flat", FlatSpec(), SeChoice::kFlatB},
        std::tuple{"ring", RingSpec(), SeChoice::kB2}}) {
    TrialConfig cfg = CanonicalConfig(spec, {"op-laws"});
    cfg.se_choice = choice;
    ExpectSuite(judge, cfg, std::string(label) + " order laws", kTrials);
  }
}

void Criterion10(Judge& judge) {
  for (const auto& [label, spec] :
       {std::pair{"flat", FlatSpec()}, std::pair{"ring", RingSpec()}}) {
    ExpectSuite(judge, CanonicalConfig(spec, {"closing-duality"}),
                std::string(label) + " duality", kTrials);
  }
}

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) return "<unreadable: " + path.string() + ">";
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void Criterion11(Judge& judge) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::current_path() / "acceptance_scratch";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto run = [&](const std::string& args) {
    const std::string cmd = std::string(MORPHSAMPLE_CLI_PATH) + " " + args +
                            " > " + (dir / "run.log").string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };

  const GreyImage f = DrawImage(0);
  GreyImage full(2, kDefaultCeiling);  // PGM needs a total rectangle
  for (int r = 0; r < kRows; ++r) {
    for (int c = 0; c < kCols; ++c) {
      full.set(Point{r, c}, f.contains(Point{r, c}) ? f.at(Point{r, c}) : 0);
    }
  }
  WritePgm(full, (dir / "f.pgm").string());
  WriteSem(f, (dir / "f.sem").string());

  judge.Expect(run("sample --image " + (dir / "f.pgm").string() +
                   " --spacing 1,1 --compact --out " +
                   (dir / "rt.pgm").string()) == 0,
               "PGM round trip did not exit cleanly");
  judge.Expect(Slurp(dir / "f.pgm") == Slurp(dir / "rt.pgm"),
               "PGM round trip not byte-identical");
  judge.Expect(run("sample --image " + (dir / "f.sem").string() +
                   " --spacing 1,1 --out " + (dir / "rt.sem").string()) == 0,
               "SEM round trip did not exit cleanly");
  judge.Expect(Slurp(dir / "f.sem") == Slurp(dir / "rt.sem"),
               "SEM round trip not byte-identical");

  const fs::path figs = dir / "figs";
  judge.Expect(run("demo figures --image " + (dir / "f.pgm").string() +
                   " --outdir " + figs.string()) == 0,
               "demo figures did not exit cleanly");
  judge.Expect(Slurp(figs / "dilate-samples.sem") ==
                   Slurp(figs / "close-dilate-sample.sem"),
               "sample-dilation figure pair differs");
  judge.Expect(Slurp(figs / "erode-samples.sem") ==
                   Slurp(figs / "dilate-erode-sample.sem"),
               "sample-erosion figure pair differs");
}

struct Criterion {
  int number;
  const char* label;
  long long budget_ms;
  std::function<void(Judge&)> run;
};

const std::vector<Criterion>& Criteria() {
  static const std::vector<Criterion> all = {
      {1, "condition validators accept both filters, reject the 5x5 box",
       1000, Criterion1},
      {2, "grey sampling suite, 200 trials per filter", 30000, Criterion2},
      {3, "binary sampling suite, 200 trials", 10000, Criterion3},
      {4, "sample dilation and erosion byte-identical, 200 trials per pair",
       30000, Criterion4},
      {5, "opening/closing bounds and exactness under fixpoint premises",
       60000, Criterion5},
      {6, "sampled operator bound and commutation pack, 200 trials", 30000,
       Criterion6},
      {7, "umbra oracle equivalence, 50 trials at 8x8 ceiling 15", 120000,
       Criterion7},
      {8, "pooling: exhaustive adjunction, cycle bounds, operator relations",
       60000, Criterion8},
      {9, "order laws for dilation, erosion, opening, closing", 30000,
       Criterion9},
      {10, "closing equals the negated opening of the negative", 30000,
       Criterion10},
      {11, "CLI round trips and identical demo figure pairs", 10000,
       Criterion11},
  };
  return all;
}

int RunAll(const std::vector<int>& only) {
  int failed = 0;
  for (const Criterion& criterion : Criteria()) {
    if (!only.empty() &&
        std::find(only.begin(), only.end(), criterion.number) == only.end()) {
      continue;
    }
    Judge judge;
    const auto start = std::chrono::steady_clock::now();
    criterion.run(judge);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    if (elapsed > criterion.budget_ms) {
      judge.problems.push_back("over budget: " + std::to_string(elapsed) +
                               " ms > " + std::to_string(criterion.budget_ms) +
                               " ms");
    }
    const bool pass = judge.problems.empty();
    std::cout << "CRITERION " << criterion.number << ' '
              << (pass ? "PASS" : "FAIL") << "  (" << elapsed << " ms, budget "
              << criterion.budget_ms << " ms)  " << criterion.label << "\n";
    for (const std::string& problem : judge.problems) {
      std::cout << "  - " << problem << "\n";
    }
    if (!pass) ++failed;
  }
  return failed;
}

}  // namespace
}  // namespace morphsample

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  return morphsample::RunAll(only);
}
