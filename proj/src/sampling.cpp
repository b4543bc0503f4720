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

#include "morphsample/sampling.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <utility>

#include "morphsample/binary_morph.hpp"
#include "morphsample/errors.hpp"
#include "morphsample/grey_morph.hpp"

namespace morphsample {

void Report::Add(std::string name, CheckStatus status, std::string witness) {
  checks.push_back({std::move(name), status, std::move(witness)});
}

void Report::Append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool Report::AllPass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::kPass;
  });
}

bool Report::NoFailures() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.status == CheckStatus::kFail;
  });
}

const CheckResult* Report::Find(const std::string& name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

const char* Token(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kPremiseUnmet:
      return "premise-unmet";
  }
  return "unknown";
}

}  // namespace

std::string RenderLine(const CheckResult& r) {
  std::string line = "RESULT " + r.name + " " + Token(r.status);
  if (!r.witness.empty()) line += " " + r.witness;
  return line;
}

std::string Render(const Report& r) {
  std::string out;
  for (const CheckResult& c : r.checks) {
    out += RenderLine(c);
    out += '\n';
  }
  return out;
}

namespace {

// Lexicographically first point of a that is missing from b.
std::optional<Point> FirstExtra(const BinaryImage& a, const BinaryImage& b) {
  std::optional<Point> best;
  for (const Point& p : a.points()) {
    if (b.contains(p)) continue;
    if (!best.has_value() || p < *best) best = p;
  }
  return best;
}

std::string ValueToken(const GreyImage& f, const Point& p) {
  return f.contains(p) ? std::to_string(f.at(p)) : "absent";
}

// Empty when f <= g, else a witness naming the first offending point.
std::optional<std::string> LeWitness(const GreyImage& f, const GreyImage& g) {
  std::optional<Point> best;
  for (const Point& p : SortedPoints(f)) {
    if (!g.contains(p) || f.at(p) > g.at(p)) {
      best = p;
      break;
    }
  }
  if (!best.has_value()) return std::nullopt;
  return "x=" + ToString(*best) + " lhs=" + ValueToken(f, *best) +
         " rhs=" + ValueToken(g, *best);
}

}  // namespace

void CheckSubset(Report& r, std::string name, const BinaryImage& lhs,
                 const BinaryImage& rhs) {
  const auto extra = FirstExtra(lhs, rhs);
  if (!extra.has_value()) {
    r.Add(std::move(name), CheckStatus::kPass);
  } else {
    r.Add(std::move(name), CheckStatus::kFail,
          "x=" + ToString(*extra) + " lhs=in rhs=out");
  }
}

void CheckSetEq(Report& r, std::string name, const BinaryImage& lhs,
                const BinaryImage& rhs) {
  const auto onlyLhs = FirstExtra(lhs, rhs);
  const auto onlyRhs = FirstExtra(rhs, lhs);
  std::optional<Point> first = onlyLhs;
  bool inLhs = true;
  if (onlyRhs.has_value() && (!first.has_value() || *onlyRhs < *first)) {
    first = onlyRhs;
    inLhs = false;
  }
  if (!first.has_value()) {
    r.Add(std::move(name), CheckStatus::kPass);
  } else {
    r.Add(std::move(name), CheckStatus::kFail,
          "x=" + ToString(*first) +
              (inLhs ? " lhs=in rhs=out" : " lhs=out rhs=in"));
  }
}

void CheckLe(Report& r, std::string name, const GreyImage& lhs,
             const GreyImage& rhs) {
  auto witness = LeWitness(lhs, rhs);
  if (!witness.has_value()) {
    r.Add(std::move(name), CheckStatus::kPass);
  } else {
    r.Add(std::move(name), CheckStatus::kFail, std::move(*witness));
  }
}

void CheckGreyEq(Report& r, std::string name, const GreyImage& lhs,
                 const GreyImage& rhs) {
  std::vector<Point> points = SortedPoints(lhs);
  {
    const std::vector<Point> more = SortedPoints(rhs);
    points.insert(points.end(), more.begin(), more.end());
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (const Point& p : points) {
    const bool inL = lhs.contains(p);
    const bool inR = rhs.contains(p);
    if (inL && inR && lhs.at(p) == rhs.at(p)) continue;
    r.Add(std::move(name), CheckStatus::kFail,
          "x=" + ToString(p) + " lhs=" + ValueToken(lhs, p) +
              " rhs=" + ValueToken(rhs, p));
    return;
  }
  r.Add(std::move(name), CheckStatus::kPass);
}

namespace {

Point ResidueOf(const Point& p, const std::vector<int>& spacing) {
  Point r = Point::Zero(static_cast<int>(spacing.size()));
  for (size_t i = 0; i < spacing.size(); ++i) {
    const int m = spacing[i];
    r[static_cast<int>(i)] = ((p[static_cast<int>(i)] % m) + m) % m;
  }
  return r;
}

std::vector<Point> AllResidues(const Sieve& s) {
  Point hi = Point::Zero(s.dim());
  for (int i = 0; i < s.dim(); ++i) hi[i] = s.spacing()[i] - 1;
  std::vector<Point> out;
  Box{Point::Zero(s.dim()), hi}.ForEach(
      [&out](const Point& p) { out.push_back(p); });
  return out;
}

}  // namespace

Report ValidateBinaryConditions(const BinaryImage& support, const Sieve& s) {
  if (support.dim() != s.dim()) {
    throw PreconditionError("support and sieve dimensions differ");
  }
  if (support.empty()) {
    throw PreconditionError("empty filter support");
  }
  const Point zero = Point::Zero(s.dim());
  const std::vector<Point> points = SortedPoints(support);
  const std::vector<Point> residues = AllResidues(s);
  Report r;

  // Sieve lattices are subgroups of the grid, so closure under addition
  // and symmetry hold by construction; reported so the condition list is
  // complete in every report.
  r.Add("sieve_closed_under_sum", CheckStatus::kPass);
  r.Add("sieve_symmetric", CheckStatus::kPass);

  {
    CheckStatus st = CheckStatus::kPass;
    std::string w;
    if (!support.contains(zero)) {
      st = CheckStatus::kFail;
      w = "origin not in support";
    } else {
      for (const Point& p : points) {
        if (p != zero && s.contains(p)) {
          st = CheckStatus::kFail;
          w = "x=" + ToString(p) + " lhs=in-support rhs=in-sieve";
          break;
        }
      }
    }
    r.Add("filter_meets_sieve_only_at_origin", st, std::move(w));
  }

  {
    CheckStatus st = CheckStatus::kPass;
    std::string w;
    for (const Point& p : points) {
      if (!support.contains(-p)) {
        st = CheckStatus::kFail;
        w = "x=" + ToString(p) + " reflection missing";
        break;
      }
    }
    r.Add("filter_symmetric", st, std::move(w));
  }

  {
    // For bases a and a+d the demanded sieve point is a+kappa with kappa
    // and kappa-d both in the support; existence depends only on d and on
    // a's residue class, so enumerating (d, residue) decides the
    // condition for every pair of translates on the whole grid.
    CheckStatus st = CheckStatus::kPass;
    std::string w;
    for (const Point& d : points) {
      for (const Point& res : residues) {
        bool found = false;
        for (const Point& kappa : points) {
          if (support.contains(kappa - d) &&
              ResidueOf(kappa, s.spacing()) == res) {
            found = true;
            break;
          }
        }
        if (!found) {
          st = CheckStatus::kFail;
          w = "d=" + ToString(d) + " residue=" + ToString(res);
          break;
        }
      }
      if (st == CheckStatus::kFail) break;
    }
    r.Add("filter_translates_overlap_on_sieve", st, std::move(w));
  }

  {
    CheckStatus st = CheckStatus::kPass;
    std::string w;
    for (const Point& res : residues) {
      bool found = false;
      for (const Point& kappa : points) {
        if (ResidueOf(kappa, s.spacing()) == res) {
          found = true;
          break;
        }
      }
      if (!found) {
        st = CheckStatus::kFail;
        w = "residue=" + ToString(res) + " unreachable";
        break;
      }
    }
    r.Add("sieve_filter_cover", st, std::move(w));
  }

  return r;
}

Report ValidateGreyConditions(const GreyImage& k, const Sieve& s) {
  Report r = ValidateBinaryConditions(k.domain(), s);
  const std::vector<Point> points = SortedPoints(k);

  {
    CheckStatus st = CheckStatus::kPass;
    std::string w;
    for (const Point& p : points) {
      if (k.contains(-p) && k.at(p) != k.at(-p)) {
        st = CheckStatus::kFail;
        w = "x=" + ToString(p) + " lhs=" + std::to_string(k.at(p)) +
            " rhs=" + std::to_string(k.at(-p));
        break;
      }
    }
    r.Add("filter_values_symmetric", st, std::move(w));
  }

  {
    CheckStatus st = CheckStatus::kPass;
    std::string w;
    for (const Point& a : points) {
      for (const Point& b : points) {
        if (!k.contains(a - b)) continue;
        if (k.at(a) > k.at(a - b) + k.at(b)) {
          st = CheckStatus::kFail;
          w = "a=" + ToString(a) + " b=" + ToString(b) +
              " lhs=" + std::to_string(k.at(a)) +
              " rhs=" + std::to_string(k.at(a - b) + k.at(b));
          break;
        }
      }
      if (st == CheckStatus::kFail) break;
    }
    r.Add("filter_subadditive", st, std::move(w));
  }

  {
    const Point zero = Point::Zero(k.dim());
    if (!k.contains(zero)) {
      r.Add("filter_zero_at_origin", CheckStatus::kFail, "origin not in support");
    } else if (k.at(zero) != 0) {
      r.Add("filter_zero_at_origin", CheckStatus::kFail,
            "lhs=" + std::to_string(k.at(zero)) + " rhs=0");
    } else {
      r.Add("filter_zero_at_origin", CheckStatus::kPass);
    }
  }

  return r;
}

FilterSpec::FilterSpec(GreyImage k, Sieve sieve)
    : k_(std::move(k)), sieve_(std::move(sieve)) {
  if (k_.dim() != sieve_.dim()) {
    throw PreconditionError("filter and sieve dimensions differ");
  }
  validation_ = ValidateGreyConditions(k_, sieve_);
  valid_ = validation_.AllPass();
}

void FilterSpec::Require() const {
  if (valid_) return;
  for (const CheckResult& c : validation_.checks) {
    if (c.status != CheckStatus::kPass) {
      throw PreconditionError("filter spec rejected: " + c.name +
                              (c.witness.empty() ? "" : " " + c.witness));
    }
  }
}

namespace {

void RequireSampled(const GreyImage& g, const Sieve& s) {
  for (const auto& [p, v] : g.values()) {
    if (!s.contains(p)) {
      throw PreconditionError("image is not sampled: " + ToString(p) +
                              " lies off the sieve");
    }
  }
}

}  // namespace

GreyImage MaxReconstruct(const GreyImage& g, const FilterSpec& spec) {
  spec.Require();
  RequireSampled(g, spec.sieve());
  return Dilate(g, spec.filter());
}

GreyImage MinReconstruct(const GreyImage& g, const FilterSpec& spec) {
  spec.Require();
  RequireSampled(g, spec.sieve());
  return Close(g, spec.filter());
}

namespace {

// Draws a point from the bounding box of f grown far enough that a
// filter translate can land anywhere relevant, including fully outside f.
Point DrawNear(std::mt19937_64& rng, const std::optional<Box>& box,
               const Box& filterBox, int dim) {
  Box around = box.value_or(Box{Point::Zero(dim), Point::Zero(dim)});
  int margin = 1;
  for (int i = 0; i < dim; ++i) {
    margin = std::max(margin, filterBox.hi[i] - filterBox.lo[i] + 1);
  }
  around = around.Grown(margin);
  Point p = Point::Zero(dim);
  for (int i = 0; i < dim; ++i) {
    const int extent = around.hi[i] - around.lo[i] + 1;
    p[i] = around.lo[i] + static_cast<int>(rng() % extent);
  }
  return p;
}

BinaryImage WithTranslate(const BinaryImage& base, const BinaryImage& se,
                          const Point& y) {
  BinaryImage out = base;
  const BinaryImage moved = Translate(se, y);
  for (const Point& p : moved.points()) out.insert(p);
  return out;
}

BinaryImage Without(const BinaryImage& base, const Point& p) {
  BinaryImage out = base;
  out.erase(p);
  return out;
}

// Evaluates one uniqueness claim: every candidate that satisfies the
// premises must coincide with `base`.  Candidates breaking a premise are
// skipped; the caller guarantees at least one qualifying candidate by
// passing `base` itself first.
template <typename Image, typename Premise, typename Diff>
void CheckUnique(Report& r, std::string name,
                 const std::vector<Image>& candidates, const Image& base,
                 const Premise& premiseHolds, const Diff& firstDiff) {
  int checked = 0;
  for (const Image& a : candidates) {
    if (!premiseHolds(a)) continue;
    ++checked;
    auto witness = firstDiff(a, base);
    if (witness.has_value()) {
      r.Add(std::move(name), CheckStatus::kFail, std::move(*witness));
      return;
    }
  }
  if (checked == 0) {
    r.Add(std::move(name), CheckStatus::kPremiseUnmet,
          "no candidate met the premises");
  } else {
    r.Add(std::move(name), CheckStatus::kPass);
  }
}

std::optional<std::string> BinaryDiff(const BinaryImage& a,
                                      const BinaryImage& b) {
  Report tmp;
  CheckSetEq(tmp, "eq", a, b);
  if (tmp.checks.front().status == CheckStatus::kPass) return std::nullopt;
  return tmp.checks.front().witness;
}

std::optional<std::string> GreyDiff(const GreyImage& a, const GreyImage& b) {
  Report tmp;
  CheckGreyEq(tmp, "eq", a, b);
  if (tmp.checks.front().status == CheckStatus::kPass) return std::nullopt;
  return tmp.checks.front().witness;
}

constexpr int kUniquePerturbations = 4;

}  // namespace

Report CheckBinarySampling(const BinaryImage& f, const BinaryImage& filter,
                           const Sieve& s, uint64_t seed) {
  if (filter.empty()) throw PreconditionError("empty filter");
  const BinaryImage fs = Restrict(f, s);
  const BinaryImage closed = Close(fs, filter);
  const BinaryImage dilated = Dilate(fs, filter);
  Report r;

  CheckSetEq(r, "bin_sampling.restrict_close_fixpoint", fs,
             Restrict(closed, s));
  CheckSetEq(r, "bin_sampling.restrict_dilate_fixpoint", fs,
             Restrict(dilated, s));
  CheckSubset(r, "bin_sampling.min_reconstruct_bound", closed,
              Close(f, filter));
  CheckSubset(r, "bin_sampling.max_reconstruct_bound", Open(f, filter),
              dilated);

  if (f == Open(f, filter) && f == Close(f, filter)) {
    Report sub;
    CheckSubset(sub, "lower", closed, f);
    CheckSubset(sub, "upper", f, dilated);
    const CheckResult* bad = nullptr;
    for (const CheckResult& c : sub.checks) {
      if (c.status == CheckStatus::kFail) {
        bad = &c;
        break;
      }
    }
    if (bad == nullptr) {
      r.Add("bin_sampling.sandwich", CheckStatus::kPass);
    } else {
      r.Add("bin_sampling.sandwich", CheckStatus::kFail, bad->witness);
    }
  } else {
    r.Add("bin_sampling.sandwich", CheckStatus::kPremiseUnmet,
          "needs f fixed under opening and closing by the filter");
  }

  std::mt19937_64 rng(seed);
  const auto box = BoundingBox(f);
  const Box filterBox = *BoundingBox(filter);

  {
    std::vector<BinaryImage> candidates = {dilated};
    for (int i = 0; i < kUniquePerturbations; ++i) {
      candidates.push_back(WithTranslate(
          dilated, filter, DrawNear(rng, box, filterBox, f.dim())));
    }
    CheckUnique(r, "bin_sampling.unique_max", candidates, dilated,
                [&](const BinaryImage& a) {
                  return a == Open(a, filter) && Restrict(a, s) == fs &&
                         IsSubset(dilated, a);
                },
                BinaryDiff);
  }

  {
    std::vector<BinaryImage> candidates = {closed};
    const std::vector<Point> pts = SortedPoints(closed);
    for (int i = 0; i < kUniquePerturbations && !pts.empty(); ++i) {
      candidates.push_back(Without(closed, pts[rng() % pts.size()]));
    }
    CheckUnique(r, "bin_sampling.unique_min", candidates, closed,
                [&](const BinaryImage& a) {
                  return a == Close(a, filter) && Restrict(a, s) == fs &&
                         IsSubset(a, closed);
                },
                BinaryDiff);
  }

  return r;
}

namespace {

GreyImage WithValue(const GreyImage& f, const Point& p, int v) {
  GreyImage out = f;
  out.set(p, v);
  return out;
}

}  // namespace

Report CheckGreySampling(const GreyImage& f, const FilterSpec& spec,
                         uint64_t seed) {
  spec.Require();
  const GreyImage& k = spec.filter();
  const Sieve& s = spec.sieve();
  const GreyImage fs = Restrict(f, s);
  const GreyImage gmin = Close(fs, k);
  const GreyImage gmax = Dilate(fs, k);
  Report r;

  CheckGreyEq(r, "grey_sampling.restrict_close_fixpoint", fs,
              Restrict(gmin, s));
  CheckGreyEq(r, "grey_sampling.restrict_dilate_fixpoint", fs,
              Restrict(gmax, s));
  CheckLe(r, "grey_sampling.min_reconstruct_bound", gmin, Close(f, k));
  CheckLe(r, "grey_sampling.max_reconstruct_bound", Open(f, k), gmax);

  if (f == Open(f, k) && f == Close(f, k)) {
    auto lower = LeWitness(gmin, f);
    auto upper = LeWitness(f, gmax);
    if (lower.has_value()) {
      r.Add("grey_sampling.sandwich", CheckStatus::kFail, std::move(*lower));
    } else if (upper.has_value()) {
      r.Add("grey_sampling.sandwich", CheckStatus::kFail, std::move(*upper));
    } else {
      r.Add("grey_sampling.sandwich", CheckStatus::kPass);
    }
  } else {
    r.Add("grey_sampling.sandwich", CheckStatus::kPremiseUnmet,
          "needs f fixed under opening and closing by the filter");
  }

  std::mt19937_64 rng(seed);

  {
    std::vector<GreyImage> candidates = {gmax};
    const std::vector<Point> pts = SortedPoints(gmax);
    for (int i = 0; i < kUniquePerturbations && !pts.empty(); ++i) {
      const Point p = pts[rng() % pts.size()];
      if (gmax.at(p) < gmax.ceiling()) {
        candidates.push_back(WithValue(gmax, p, gmax.at(p) + 1));
      }
    }
    CheckUnique(r, "grey_sampling.unique_max", candidates, gmax,
                [&](const GreyImage& g) {
                  return g == Open(g, k) && Restrict(g, s) == fs &&
                         Le(gmax, g);
                },
                GreyDiff);
  }

  {
    std::vector<GreyImage> candidates = {gmin};
    const std::vector<Point> pts = SortedPoints(gmin);
    for (int i = 0; i < kUniquePerturbations && !pts.empty(); ++i) {
      const Point p = pts[rng() % pts.size()];
      if (gmin.at(p) > 0) {
        candidates.push_back(WithValue(gmin, p, gmin.at(p) - 1));
      }
    }
    CheckUnique(r, "grey_sampling.unique_min", candidates, gmin,
                [&](const GreyImage& g) {
                  return g == Close(g, k) && Restrict(g, s) == fs &&
                         Le(g, gmin);
                },
                GreyDiff);
  }

  return r;
}

namespace {

// Shared premise screen for predicates that erode by the sampled element
// or need the element open with respect to the filter.  Returns true and
// fills the report when evaluation cannot proceed.
bool SeUnusable(Report& r, const std::string& name, bool seEmpty,
                bool sampledEmpty) {
  if (seEmpty) {
    r.Add(name, CheckStatus::kPremiseUnmet, "structuring element empty");
    return true;
  }
  if (sampledEmpty) {
    r.Add(name, CheckStatus::kPremiseUnmet,
          "structuring element misses the sieve");
    return true;
  }
  return false;
}

// Grey dilation by an empty element, as in the binary case, is the empty
// image: the maximum runs over an empty index set.  Grey Dilate itself
// rejects an empty element, so the vacuous case is settled here.
GreyImage DilateOrEmpty(const GreyImage& f, const GreyImage& b) {
  if (b.empty()) return GreyImage(f.dim(), f.ceiling());
  return Dilate(f, b);
}

}  // namespace

Report SampledOpBounds(const BinaryImage& f, const BinaryImage& b,
                       const Sieve& s) {
  const BinaryImage fs = Restrict(f, s);
  const BinaryImage bs = Restrict(b, s);
  Report r;
  CheckSubset(r, "bin_sampled_op_bounds.dilate", Dilate(fs, bs),
              Restrict(Dilate(f, b), s));
  if (!SeUnusable(r, "bin_sampled_op_bounds.erode", b.empty(), bs.empty())) {
    CheckSubset(r, "bin_sampled_op_bounds.erode", Restrict(Erode(f, b), s),
                Erode(fs, bs));
  }
  return r;
}

Report SampledOpBounds(const GreyImage& f, const GreyImage& b,
                       const FilterSpec& spec) {
  const Sieve& s = spec.sieve();
  const GreyImage fs = Restrict(f, s);
  const GreyImage bs = Restrict(b, s);
  Report r;
  CheckLe(r, "grey_sampled_op_bounds.dilate", DilateOrEmpty(fs, bs),
          Restrict(Dilate(f, b), s));
  if (!SeUnusable(r, "grey_sampled_op_bounds.erode", b.empty(), bs.empty())) {
    CheckLe(r, "grey_sampled_op_bounds.erode", Restrict(Erode(f, b), s),
            Erode(fs, bs));
  }
  return r;
}

Report SampledSeCommute(const BinaryImage& f, const BinaryImage& b,
                        const Sieve& s) {
  const BinaryImage fs = Restrict(f, s);
  const BinaryImage bs = Restrict(b, s);
  Report r;
  CheckSetEq(r, "bin_sampled_se_commute.dilate", Dilate(fs, bs),
             Restrict(Dilate(f, bs), s));
  if (!SeUnusable(r, "bin_sampled_se_commute.erode", b.empty(), bs.empty())) {
    CheckSetEq(r, "bin_sampled_se_commute.erode", Erode(fs, bs),
               Restrict(Erode(f, bs), s));
  }
  return r;
}

Report SampledSeCommute(const GreyImage& f, const GreyImage& b,
                        const FilterSpec& spec) {
  const Sieve& s = spec.sieve();
  const GreyImage fs = Restrict(f, s);
  const GreyImage bs = Restrict(b, s);
  Report r;
  CheckGreyEq(r, "grey_sampled_se_commute.dilate", DilateOrEmpty(fs, bs),
              Restrict(DilateOrEmpty(f, bs), s));
  if (!SeUnusable(r, "grey_sampled_se_commute.erode", b.empty(), bs.empty())) {
    CheckGreyEq(r, "grey_sampled_se_commute.erode", Erode(fs, bs),
                Restrict(Erode(f, bs), s));
  }
  return r;
}

namespace {

// True when b is fixed by opening with the filter; predicates premised on
// an element without detail finer than the filter check this first.
bool BinaryOpenFix(const BinaryImage& b, const BinaryImage& filter) {
  return !b.empty() && b == Open(b, filter);
}

bool GreyOpenFix(const GreyImage& b, const GreyImage& k) {
  return !b.empty() && b == Open(b, k);
}

constexpr const char* kNeedsOpenElement =
    "needs b fixed under opening by the filter";

}  // namespace

Report ReconstructDilateBound(const BinaryImage& f, const BinaryImage& b,
                              const BinaryImage& filter, const Sieve& s) {
  Report r;
  const std::string name = "bin_reconstruct_dilate_bound";
  if (!BinaryOpenFix(b, filter)) {
    r.Add(name, CheckStatus::kPremiseUnmet, kNeedsOpenElement);
    return r;
  }
  const BinaryImage fs = Restrict(f, s);
  const BinaryImage bs = Restrict(b, s);
  if (SeUnusable(r, name, b.empty(), bs.empty())) return r;
  CheckSubset(r, name, Dilate(Close(fs, filter), b),
              Dilate(Dilate(fs, filter), bs));
  return r;
}

Report ReconstructDilateBound(const GreyImage& f, const GreyImage& b,
                              const FilterSpec& spec) {
  Report r;
  const std::string name = "grey_reconstruct_dilate_bound";
  const GreyImage& k = spec.filter();
  if (!GreyOpenFix(b, k)) {
    r.Add(name, CheckStatus::kPremiseUnmet, kNeedsOpenElement);
    return r;
  }
  const Sieve& s = spec.sieve();
  const GreyImage fs = Restrict(f, s);
  const GreyImage bs = Restrict(b, s);
  if (SeUnusable(r, name, b.empty(), bs.empty())) return r;
  CheckLe(r, name, Dilate(Close(fs, k), b), Dilate(Dilate(fs, k), bs));
  return r;
}

Report SampleDilation(const BinaryImage& f, const BinaryImage& b,
                      const BinaryImage& filter, const Sieve& s) {
  Report r;
  const std::string name = "bin_sample_dilation";
  if (!BinaryOpenFix(b, filter)) {
    r.Add(name, CheckStatus::kPremiseUnmet, kNeedsOpenElement);
    return r;
  }
  const BinaryImage fs = Restrict(f, s);
  const BinaryImage bs = Restrict(b, s);
  CheckSetEq(r, name, Dilate(fs, bs),
             Restrict(Dilate(Close(fs, filter), b), s));
  return r;
}

Report SampleDilation(const GreyImage& f, const GreyImage& b,
                      const FilterSpec& spec) {
  Report r;
  const std::string name = "grey_sample_dilation";
  const GreyImage& k = spec.filter();
  if (!GreyOpenFix(b, k)) {
    r.Add(name, CheckStatus::kPremiseUnmet, kNeedsOpenElement);
    return r;
  }
  const Sieve& s = spec.sieve();
  const GreyImage fs = Restrict(f, s);
  const GreyImage bs = Restrict(b, s);
  CheckGreyEq(r, name, Dilate(fs, bs), Restrict(Dilate(Close(fs, k), b), s));
  return r;
}

Report SampleErosion(const BinaryImage& f, const BinaryImage& b,
                     const BinaryImage& filter, const Sieve& s) {
  Report r;
  const std::string name = "bin_sample_erosion";
  if (!BinaryOpenFix(b, filter)) {
    r.Add(name, CheckStatus::kPremiseUnmet, kNeedsOpenElement);
    return r;
  }
  const BinaryImage fs = Restrict(f, s);
  const BinaryImage bs = Restrict(b, s);
  if (SeUnusable(r, name, b.empty(), bs.empty())) return r;
  CheckSetEq(r, name, Erode(fs, bs),
             Restrict(Erode(Dilate(fs, filter), b), s));
  return r;
}

Report SampleErosion(const GreyImage& f, const GreyImage& b,
                     const FilterSpec& spec) {
  Report r;
  const std::string name = "grey_sample_erosion";
  const GreyImage& k = spec.filter();
  if (!GreyOpenFix(b, k)) {
    r.Add(name, CheckStatus::kPremiseUnmet, kNeedsOpenElement);
    return r;
  }
  const Sieve& s = spec.sieve();
  const GreyImage fs = Restrict(f, s);
  const GreyImage bs = Restrict(b, s);
  if (SeUnusable(r, name, b.empty(), bs.empty())) return r;
  CheckGreyEq(r, name, Erode(fs, bs), Restrict(Erode(Dilate(fs, k), b), s));
  return r;
}

Report SampledOpeningCommute(const BinaryImage& f, const BinaryImage& b,
                             const Sieve& s) {
  const BinaryImage fs = Restrict(f, s);
  const BinaryImage bs = Restrict(b, s);
  Report r;
  const std::string name = "bin_sampled_opening_commute";
  if (SeUnusable(r, name, b.empty(), bs.empty())) return r;
  CheckSetEq(r, name, Restrict(Open(f, bs), s), Open(fs, bs));
  return r;
}

Report SampledOpeningCommute(const GreyImage& f, const GreyImage& b,
                             const FilterSpec& spec) {
  const Sieve& s = spec.sieve();
  const GreyImage fs = Restrict(f, s);
  const GreyImage bs = Restrict(b, s);
  Report r;
  const std::string name = "grey_sampled_opening_commute";
  if (SeUnusable(r, name, b.empty(), bs.empty())) return r;
  CheckGreyEq(r, name, Restrict(Open(f, bs), s), Open(fs, bs));
  return r;
}

Report SampledClosingCommute(const BinaryImage& f, const BinaryImage& b,
                             const Sieve& s) {
  const BinaryImage fs = Restrict(f, s);
  const BinaryImage bs = Restrict(b, s);
  Report r;
  const std::string name = "bin_sampled_closing_commute";
  if (SeUnusable(r, name, b.empty(), bs.empty())) return r;
  CheckSetEq(r, name, Restrict(Close(f, bs), s), Close(fs, bs));
  return r;
}

Report SampledClosingCommute(const GreyImage& f, const GreyImage& b,
                             const FilterSpec& spec) {
  const Sieve& s = spec.sieve();
  const GreyImage fs = Restrict(f, s);
  const GreyImage bs = Restrict(b, s);
  Report r;
  const std::string name = "grey_sampled_closing_commute";
  if (SeUnusable(r, name, b.empty(), bs.empty())) return r;
  CheckGreyEq(r, name, Restrict(Close(f, bs), s), Close(fs, bs));
  return r;
}

Report OpenCloseBounds(const BinaryImage& f, const BinaryImage& b,
                       const BinaryImage& filter, const Sieve& s) {
  Report r;
  const std::string base = "bin_open_close_bounds";
  if (!BinaryOpenFix(b, filter)) {
    r.Add(base, CheckStatus::kPremiseUnmet, kNeedsOpenElement);
    return r;
  }
  const BinaryImage fs = Restrict(f, s);
  const BinaryImage bs = Restrict(b, s);
  if (SeUnusable(r, base, b.empty(), bs.empty())) return r;
  const BinaryImage bk = Dilate(bs, filter);
  const BinaryImage mid_open = Open(fs, bs);
  const BinaryImage mid_close = Close(fs, bs);
  CheckSubset(r, base + ".open_lower", Restrict(Open(f, bk), s), mid_open);
  CheckSubset(r, base + ".open_upper", mid_open,
              Restrict(Open(Dilate(fs, filter), b), s));
  CheckSubset(r, base + ".close_lower",
              Restrict(Close(Close(fs, filter), b), s), mid_close);
  CheckSubset(r, base + ".close_upper", mid_close,
              Restrict(Close(f, bk), s));
  return r;
}

Report OpenCloseBounds(const GreyImage& f, const GreyImage& b,
                       const FilterSpec& spec) {
  Report r;
  const std::string base = "grey_open_close_bounds";
  const GreyImage& k = spec.filter();
  if (!GreyOpenFix(b, k)) {
    r.Add(base, CheckStatus::kPremiseUnmet, kNeedsOpenElement);
    return r;
  }
  const Sieve& s = spec.sieve();
  const GreyImage fs = Restrict(f, s);
  const GreyImage bs = Restrict(b, s);
  if (SeUnusable(r, base, b.empty(), bs.empty())) return r;
  const GreyImage bk = Dilate(bs, k);
  const GreyImage mid_open = Open(fs, bs);
  const GreyImage mid_close = Close(fs, bs);
  CheckLe(r, base + ".open_lower", Restrict(Open(f, bk), s), mid_open);
  CheckLe(r, base + ".open_upper", mid_open,
          Restrict(Open(Dilate(fs, k), b), s));
  CheckLe(r, base + ".close_lower", Restrict(Close(Close(fs, k), b), s),
          mid_close);
  CheckLe(r, base + ".close_upper", mid_close, Restrict(Close(f, bk), s));
  return r;
}

Report OpenCloseExact(const BinaryImage& f, const BinaryImage& b,
                      const BinaryImage& filter, const Sieve& s) {
  Report r;
  const std::string base = "bin_open_close_exact";
  if (!BinaryOpenFix(b, filter)) {
    r.Add(base, CheckStatus::kPremiseUnmet, kNeedsOpenElement);
    return r;
  }
  const BinaryImage fs = Restrict(f, s);
  const BinaryImage bs = Restrict(b, s);
  if (SeUnusable(r, base, b.empty(), bs.empty())) return r;
  const bool bFix = b == Dilate(bs, filter);
  if (bFix && f == Dilate(fs, filter)) {
    CheckSetEq(r, base + ".open", Open(fs, bs), Restrict(Open(f, b), s));
  } else {
    r.Add(base + ".open", CheckStatus::kPremiseUnmet,
          "needs f and b equal to dilations of their samples");
  }
  if (bFix && f == Close(fs, filter)) {
    CheckSetEq(r, base + ".close", Close(fs, bs), Restrict(Close(f, b), s));
  } else {
    r.Add(base + ".close", CheckStatus::kPremiseUnmet,
          "needs b dilated and f closed from their samples");
  }
  return r;
}

Report OpenCloseExact(const GreyImage& f, const GreyImage& b,
                      const FilterSpec& spec) {
  Report r;
  const std::string base = "grey_open_close_exact";
  const GreyImage& k = spec.filter();
  if (!GreyOpenFix(b, k)) {
    r.Add(base, CheckStatus::kPremiseUnmet, kNeedsOpenElement);
    return r;
  }
  const Sieve& s = spec.sieve();
  const GreyImage fs = Restrict(f, s);
  const GreyImage bs = Restrict(b, s);
  if (SeUnusable(r, base, b.empty(), bs.empty())) return r;
  const bool bFix = b == Dilate(bs, k);
  if (bFix && f == Dilate(fs, k)) {
    CheckGreyEq(r, base + ".open", Open(fs, bs), Restrict(Open(f, b), s));
  } else {
    r.Add(base + ".open", CheckStatus::kPremiseUnmet,
          "needs f and b equal to dilations of their samples");
  }
  if (bFix && f == Close(fs, k)) {
    CheckGreyEq(r, base + ".close", Close(fs, bs), Restrict(Close(f, b), s));
  } else {
    r.Add(base + ".close", CheckStatus::kPremiseUnmet,
          "needs b dilated and f closed from their samples");
  }
  return r;
}

Report ShiftDiffBound(const GreyImage& f, const FilterSpec& spec) {
  spec.Require();
  Report r;
  const std::string name = "grey_shift_diff_bound";
  const GreyImage& k = spec.filter();
  const GreyImage fs = Restrict(f, spec.sieve());
  if (fs.empty()) {
    r.Add(name, CheckStatus::kPremiseUnmet, "no sample points");
    return r;
  }
  const GreyImage d = Dilate(fs, k);
  const std::vector<Point> offsets = SortedPoints(k);
  for (const Point& s : SortedPoints(fs)) {
    for (const Point& z : offsets) {
      const Point x = s - z;
      const int lhs = fs.at(s) - k.at(z);
      for (const Point& u : offsets) {
        if (!k.contains(u - z)) continue;
        const Point q = x + u;
        const std::string at = "x=" + ToString(x) + " u=" + ToString(u) +
                               " z=" + ToString(z);
        if (!d.contains(q)) {
          r.Add(name, CheckStatus::kFail,
                at + " lhs=" + std::to_string(lhs) + " rhs=absent");
          return r;
        }
        const int rhs = d.at(q) - k.at(u);
        if (lhs > rhs) {
          r.Add(name, CheckStatus::kFail,
                at + " lhs=" + std::to_string(lhs) +
                    " rhs=" + std::to_string(rhs));
          return r;
        }
      }
    }
  }
  r.Add(name, CheckStatus::kPass);
  return r;
}

}  // namespace morphsample
