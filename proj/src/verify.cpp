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

#include "morphsample/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <utility>

#include "morphsample/binary_morph.hpp"
#include "morphsample/builtin_se.hpp"
#include "morphsample/errors.hpp"
#include "morphsample/grey_morph.hpp"
#include "morphsample/image_io.hpp"
#include "morphsample/pooling.hpp"
#include "morphsample/umbra.hpp"

namespace morphsample {

namespace {

// Largest element values by choice, used for the clamp budget without
// instantiating the element (b2 cannot even be instantiated at small
// ceilings).
constexpr int kFlatBMax = 0;
constexpr int kB2Max = 20;
constexpr int kRandomSeMax = 10;

// Values drawn for the umbra oracle's own small element.
constexpr int kUmbraSeMax = 3;

int MaxElementValue(SeChoice choice) {
  switch (choice) {
    case SeChoice::kFlatB:
      return kFlatBMax;
    case SeChoice::kB2:
      return kB2Max;
    case SeChoice::kRandomOpened:
      return kRandomSeMax;
  }
  return kB2Max;
}

int MaxValue(const GreyImage& f) {
  int m = 0;
  for (const auto& [p, v] : f.values()) m = std::max(m, v);
  return m;
}

std::string SemBlock(const std::string& label, const GreyImage& f) {
  std::ostringstream out;
  out << "INPUT " << label << "\n";
  WriteSem(f, out);
  return out.str();
}

std::string SemBlock(const std::string& label, const BinaryImage& a) {
  GreyImage lifted(a.dim(), 1);
  for (const Point& p : a.points()) lifted.set(p, 1);
  return SemBlock(label, lifted);
}

bool AnyFail(const Report& r) {
  for (const CheckResult& c : r.checks) {
    if (c.status == CheckStatus::kFail) return true;
  }
  return false;
}

// Everything one trial needs to know about the run.
struct TrialOutcome {
  std::vector<CheckResult> results;
  std::string inputs;  // filled only when some result failed
};

template <typename MakeInputs>
TrialOutcome Outcome(const Report& r, MakeInputs make_inputs) {
  TrialOutcome out;
  out.results = r.checks;
  if (AnyFail(r)) out.inputs = make_inputs();
  return out;
}

// Input generators.  Each consumes the trial generator in a fixed order,
// so a (seed, config) pair replays exactly.

GreyImage DrawGrey(std::mt19937_64& rng, const TrialConfig& cfg,
                   bool with_holes) {
  GreyImage f(2, cfg.spec.ceiling());
  for (int r = 0; r < cfg.rows; ++r) {
    for (int c = 0; c < cfg.cols; ++c) {
      if (with_holes && rng() % 10 == 0) continue;
      f.set(Point{r, c}, static_cast<int>(
                             rng() % static_cast<uint64_t>(cfg.value_max + 1)));
    }
  }
  if (f.empty()) f.set(Point{0, 0}, 0);
  return f;
}

GreyImage DrawGrey(std::mt19937_64& rng, const TrialConfig& cfg) {
  return DrawGrey(rng, cfg, cfg.holes);
}

BinaryImage DrawBinary(std::mt19937_64& rng, const TrialConfig& cfg) {
  BinaryImage a(2);
  for (int r = 0; r < cfg.rows; ++r) {
    for (int c = 0; c < cfg.cols; ++c) {
      if (rng() % 2 == 1) a.insert(Point{r, c});
    }
  }
  if (a.empty()) a.insert(Point{0, 0});
  return a;
}

GreyImage Constant(const TrialConfig& cfg, int value) {
  GreyImage f(2, cfg.spec.ceiling());
  for (int r = 0; r < cfg.rows; ++r) {
    for (int c = 0; c < cfg.cols; ++c) f.set(Point{r, c}, value);
  }
  return f;
}

BinaryImage FullRect(const TrialConfig& cfg) {
  BinaryImage a(2);
  for (int r = 0; r < cfg.rows; ++r) {
    for (int c = 0; c < cfg.cols; ++c) a.insert(Point{r, c});
  }
  return a;
}

// The element handed to grey predicates.  Raw means as chosen;
// kRandomOpened is opened by the filter already at the draw.
GreyImage ElementRaw(std::mt19937_64& rng, const TrialConfig& cfg) {
  switch (cfg.se_choice) {
    case SeChoice::kFlatB:
      return BuiltinSe("flat5", cfg.spec.ceiling());
    case SeChoice::kB2:
      return BuiltinSe("b2", cfg.spec.ceiling());
    case SeChoice::kRandomOpened:
      break;
  }
  GreyImage raw(2, cfg.spec.ceiling());
  for (int r = -2; r <= 2; ++r) {
    for (int c = -2; c <= 2; ++c) {
      if (rng() % 5 == 0) continue;
      raw.set(Point{r, c}, static_cast<int>(rng() % (kRandomSeMax + 1)));
    }
  }
  if (raw.empty()) raw.set(Point::Zero(2), 0);
  return Open(raw, cfg.spec.filter());
}

// The support handed to binary predicates, same choices.
BinaryImage SupportRaw(std::mt19937_64& rng, const TrialConfig& cfg) {
  if (cfg.se_choice == SeChoice::kFlatB) {
    return BuiltinSe("flat5", cfg.spec.ceiling()).domain();
  }
  if (cfg.se_choice == SeChoice::kB2) {
    return BuiltinSe("b2", cfg.spec.ceiling()).domain();
  }
  BinaryImage raw(2);
  for (int r = -2; r <= 2; ++r) {
    for (int c = -2; c <= 2; ++c) {
      if (rng() % 5 == 0) continue;
      raw.insert(Point{r, c});
    }
  }
  if (raw.empty()) raw.insert(Point::Zero(2));
  return Open(raw, cfg.spec.filter().domain());
}

// Rejection sampling for the sandwich premise: an image fixed under both
// opening and closing by the filter.  Fresh draws alternate with
// close-after-open smoothings and full-rectangle constants at or above
// the filter maximum (fixed points of both operations for the built-in
// filters); after 100 attempts the last candidate goes out as is and the
// premised checks report premise-unmet.
GreyImage DrawBothOpenClosed(std::mt19937_64& rng, const TrialConfig& cfg) {
  const GreyImage& k = cfg.spec.filter();
  GreyImage candidate = DrawGrey(rng, cfg);
  for (int attempt = 0; attempt < 100; ++attempt) {
    if (!candidate.empty() && Open(candidate, k) == candidate &&
        Close(candidate, k) == candidate) {
      return candidate;
    }
    if (attempt % 2 == 0) {
      candidate = Close(Open(DrawGrey(rng, cfg, false), k), k);
    } else {
      const int lo = std::min(MaxValue(k), cfg.value_max);
      const uint64_t span = static_cast<uint64_t>(cfg.value_max - lo) + 1;
      candidate = Constant(cfg, lo + static_cast<int>(rng() % span));
    }
  }
  return candidate;
}

BinaryImage DrawBinaryBothOpenClosed(std::mt19937_64& rng,
                                     const TrialConfig& cfg) {
  const BinaryImage filter = cfg.spec.filter().domain();
  BinaryImage candidate = DrawBinary(rng, cfg);
  for (int attempt = 0; attempt < 100; ++attempt) {
    if (!candidate.empty() && Open(candidate, filter) == candidate &&
        Close(candidate, filter) == candidate) {
      return candidate;
    }
    if (attempt % 2 == 0) {
      candidate = Close(Open(DrawBinary(rng, cfg), filter), filter);
    } else {
      candidate = FullRect(cfg);
    }
  }
  return candidate;
}

// A pooled image: values only on sieve points of the image window.
GreyImage DrawGreyOnSieve(std::mt19937_64& rng, const TrialConfig& cfg) {
  const std::vector<int>& spacing = cfg.spec.sieve().spacing();
  GreyImage g(2, cfg.spec.ceiling());
  for (int r = 0; r < cfg.rows; r += spacing[0]) {
    for (int c = 0; c < cfg.cols; c += spacing[1]) {
      if (cfg.holes && rng() % 10 == 0) continue;
      g.set(Point{r, c}, static_cast<int>(
                             rng() % static_cast<uint64_t>(cfg.value_max + 1)));
    }
  }
  return g;
}

uint64_t TrialSeed(const TrialConfig& cfg, int trial) {
  return cfg.seed + static_cast<uint64_t>(trial);
}

// Suite bodies.  Binary family first.

TrialOutcome RunBinSampling(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const BinaryImage f = (trial % 5 == 0) ? DrawBinaryBothOpenClosed(rng, cfg)
                                         : DrawBinary(rng, cfg);
  const Report r = CheckBinarySampling(f, cfg.spec.filter().domain(),
                                       cfg.spec.sieve(), TrialSeed(cfg, trial));
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("filter", cfg.spec.filter());
  });
}

TrialOutcome RunBinOpBounds(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const BinaryImage f = DrawBinary(rng, cfg);
  const BinaryImage b = SupportRaw(rng, cfg);
  const Report r = SampledOpBounds(f, b, cfg.spec.sieve());
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("element", b);
  });
}

TrialOutcome RunBinSeCommute(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const BinaryImage f = DrawBinary(rng, cfg);
  const BinaryImage b = SupportRaw(rng, cfg);
  const Report r = SampledSeCommute(f, b, cfg.spec.sieve());
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("element", b);
  });
}

TrialOutcome RunBinReconstructDilate(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const BinaryImage f = DrawBinary(rng, cfg);
  const BinaryImage b = SupportRaw(rng, cfg);
  const Report r = ReconstructDilateBound(f, b, cfg.spec.filter().domain(),
                                          cfg.spec.sieve());
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("element", b) + SemBlock("filter", cfg.spec.filter());
  });
}

TrialOutcome RunBinSampleDilation(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const BinaryImage filter = cfg.spec.filter().domain();
  const BinaryImage f = DrawBinary(rng, cfg);
  const BinaryImage b = Open(SupportRaw(rng, cfg), filter);
  const Report r = SampleDilation(f, b, filter, cfg.spec.sieve());
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("element", b) + SemBlock("filter", cfg.spec.filter());
  });
}

TrialOutcome RunBinSampleErosion(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const BinaryImage filter = cfg.spec.filter().domain();
  const BinaryImage f = DrawBinary(rng, cfg);
  const BinaryImage b = Open(SupportRaw(rng, cfg), filter);
  const Report r = SampleErosion(f, b, filter, cfg.spec.sieve());
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("element", b) + SemBlock("filter", cfg.spec.filter());
  });
}

TrialOutcome RunBinOpeningCommute(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const BinaryImage f = DrawBinary(rng, cfg);
  const BinaryImage b = SupportRaw(rng, cfg);
  const Report r = SampledOpeningCommute(f, b, cfg.spec.sieve());
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("element", b);
  });
}

TrialOutcome RunBinClosingCommute(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const BinaryImage f = DrawBinary(rng, cfg);
  const BinaryImage b = SupportRaw(rng, cfg);
  const Report r = SampledClosingCommute(f, b, cfg.spec.sieve());
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("element", b);
  });
}

TrialOutcome RunBinOpenCloseBounds(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const BinaryImage f = DrawBinary(rng, cfg);
  const BinaryImage b = SupportRaw(rng, cfg);
  const Report r = OpenCloseBounds(f, b, cfg.spec.filter().domain(),
                                   cfg.spec.sieve());
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("element", b) + SemBlock("filter", cfg.spec.filter());
  });
}

TrialOutcome RunBinOpenCloseExact(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const BinaryImage filter = cfg.spec.filter().domain();
  const Sieve& s = cfg.spec.sieve();
  const BinaryImage gs = Restrict(DrawBinary(rng, cfg), s);
  const BinaryImage f =
      (trial % 2 == 0) ? Dilate(gs, filter) : Close(gs, filter);
  const BinaryImage b = Dilate(Restrict(SupportRaw(rng, cfg), s), filter);
  const Report r = OpenCloseExact(f, b, filter, s);
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("element", b) + SemBlock("filter", cfg.spec.filter());
  });
}

// Grey family.

TrialOutcome RunGreySampling(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const GreyImage f =
      (trial % 5 == 0) ? DrawBothOpenClosed(rng, cfg) : DrawGrey(rng, cfg);
  const Report r = CheckGreySampling(f, cfg.spec, TrialSeed(cfg, trial));
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("filter", cfg.spec.filter());
  });
}

TrialOutcome RunGreyOpBounds(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const GreyImage f = DrawGrey(rng, cfg);
  const GreyImage b = ElementRaw(rng, cfg);
  const Report r = SampledOpBounds(f, b, cfg.spec);
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("element", b);
  });
}

TrialOutcome RunGreySeCommute(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const GreyImage f = DrawGrey(rng, cfg);
  const GreyImage b = ElementRaw(rng, cfg);
  const Report r = SampledSeCommute(f, b, cfg.spec);
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("element", b);
  });
}

TrialOutcome RunGreyReconstructDilate(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const GreyImage f = DrawGrey(rng, cfg);
  const GreyImage b = ElementRaw(rng, cfg);
  const Report r = ReconstructDilateBound(f, b, cfg.spec);
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("element", b) + SemBlock("filter", cfg.spec.filter());
  });
}

TrialOutcome RunGreySampleDilation(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const GreyImage f = DrawGrey(rng, cfg);
  const GreyImage b = Open(ElementRaw(rng, cfg), cfg.spec.filter());
  const Report r = SampleDilation(f, b, cfg.spec);
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("element", b) + SemBlock("filter", cfg.spec.filter());
  });
}

TrialOutcome RunGreySampleErosion(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const GreyImage f = DrawGrey(rng, cfg);
  const GreyImage b = Open(ElementRaw(rng, cfg), cfg.spec.filter());
  const Report r = SampleErosion(f, b, cfg.spec);
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("element", b) + SemBlock("filter", cfg.spec.filter());
  });
}

TrialOutcome RunGreyOpeningCommute(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const GreyImage f = DrawGrey(rng, cfg);
  const GreyImage b = ElementRaw(rng, cfg);
  const Report r = SampledOpeningCommute(f, b, cfg.spec);
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("element", b);
  });
}

TrialOutcome RunGreyClosingCommute(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const GreyImage f = DrawGrey(rng, cfg);
  const GreyImage b = ElementRaw(rng, cfg);
  const Report r = SampledClosingCommute(f, b, cfg.spec);
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("element", b);
  });
}

TrialOutcome RunGreyOpenCloseBounds(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const GreyImage f = DrawGrey(rng, cfg);
  const GreyImage b = ElementRaw(rng, cfg);
  const Report r = OpenCloseBounds(f, b, cfg.spec);
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("element", b) + SemBlock("filter", cfg.spec.filter());
  });
}

TrialOutcome RunGreyOpenCloseExact(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const GreyImage& k = cfg.spec.filter();
  const Sieve& s = cfg.spec.sieve();
  const GreyImage gs = Restrict(DrawGrey(rng, cfg), s);
  const GreyImage f = (trial % 2 == 0) ? Dilate(gs, k) : Close(gs, k);
  const GreyImage bs = Restrict(ElementRaw(rng, cfg), s);
  const GreyImage b = Dilate(bs, k);  // empty bs gives an empty element
  const Report r = OpenCloseExact(f, b, cfg.spec);
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("element", b) + SemBlock("filter", cfg.spec.filter());
  });
}

TrialOutcome RunGreyShiftDiff(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const GreyImage f = DrawGrey(rng, cfg);
  const Report r = ShiftDiffBound(f, cfg.spec);
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("filter", cfg.spec.filter());
  });
}

// Pooling family.

TrialOutcome RunPoolAdjunction(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const GreyImage f = DrawGrey(rng, cfg);
  const GreyImage g =
      (trial % 2 == 0) ? DrawGreyOnSieve(rng, cfg) : Sigma(f, cfg.spec);
  const bool ok = AdjunctionHolds(f, g, cfg.spec);
  Report r;
  r.Add("pool_adjunction.biconditional",
        ok ? CheckStatus::kPass : CheckStatus::kFail,
        ok ? "" : "order equivalence broken");
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("g", g) + SemBlock("filter", cfg.spec.filter());
  });
}

TrialOutcome RunPoolBounds(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const GreyImage f = DrawGrey(rng, cfg);
  const GreyImage cycled = Rho(f, cfg.spec);
  Report r;
  CheckLe(r, "pool_bounds.cycle_extensive", f, cycled);
  CheckLe(r, "pool_bounds.cycle_below_lift", cycled, Delta(f, cfg.spec));
  CheckGreyEq(r, "pool_bounds.cycle_restrict",
              Restrict(cycled, cfg.spec.sieve()), Sigma(f, cfg.spec));
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("filter", cfg.spec.filter());
  });
}

TrialOutcome RunPoolRelations(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const GreyImage f = DrawGrey(rng, cfg);
  const GreyImage c = Restrict(ElementRaw(rng, cfg), cfg.spec.sieve());
  if (c.empty()) {
    TrialOutcome out;
    out.results = {{"pool_relations.premise", CheckStatus::kPremiseUnmet,
                    "element misses the sieve"}};
    return out;
  }
  const Report r = PoolingOpRelations(f, c, cfg.spec);
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("element", c) + SemBlock("filter", cfg.spec.filter());
  });
}

// Order laws tying the operators together: extensivity, monotone
// restriction, and the exchange inequalities between erosion, opening,
// closing, and dilation by a second element.

TrialOutcome RunOpLaws(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const GreyImage& k = cfg.spec.filter();
  const Sieve& s = cfg.spec.sieve();
  const GreyImage f = DrawGrey(rng, cfg);
  const GreyImage c = ElementRaw(rng, cfg);
  const GreyImage lifted = Dilate(f, k);
  const BinaryImage F = f.domain();
  const BinaryImage C = c.domain();
  const BinaryImage K = k.domain();
  Report r;
  CheckLe(r, "op_laws.dilate_extensive", f, lifted);
  CheckLe(r, "op_laws.restrict_monotone", Restrict(f, s), Restrict(lifted, s));
  CheckLe(r, "op_laws.erode_anti_extensive", Erode(f, k), f);
  CheckSubset(r, "op_laws.erode_dilate_exchange_sets",
              Dilate(Erode(F, C), K), Erode(Dilate(F, K), C));
  CheckLe(r, "op_laws.erode_dilate_exchange", Dilate(Erode(f, c), k),
          Erode(Dilate(f, k), c));
  CheckSubset(r, "op_laws.open_dilate_exchange_sets", Dilate(Open(F, C), K),
              Open(Dilate(F, K), C));
  CheckLe(r, "op_laws.open_dilate_exchange", Dilate(Open(f, c), k),
          Open(Dilate(f, k), c));
  CheckSubset(r, "op_laws.close_dilate_exchange_sets", Dilate(Close(F, C), K),
              Close(Dilate(F, K), C));
  CheckLe(r, "op_laws.close_dilate_exchange", Dilate(Close(f, c), k),
          Close(Dilate(f, k), c));
  CheckLe(r, "op_laws.erode_close_exchange", Close(Erode(f, c), k),
          Erode(Close(f, k), c));
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("element", c) + SemBlock("filter", cfg.spec.filter());
  });
}

// Umbra oracle: the value formulas against literal set morphology one
// dimension up, and the opening/closing against their witness-based
// reference forms.

TrialOutcome RunUmbraOracle(const TrialConfig& cfg, int trial) {
  if (cfg.value_max + kUmbraSeMax >= cfg.spec.ceiling()) {
    throw PreconditionError(
        "umbra oracle needs max value + " + std::to_string(kUmbraSeMax) +
        " below the ceiling");
  }
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  // The oracle cost grows quadratically with the slab height, while no
  // value this trial produces can exceed value_max + kUmbraSeMax.  Run
  // the comparison in the smallest slab holding them with headroom;
  // below the ceiling nothing clamps, so the results are unchanged.
  const int slab =
      std::min(cfg.spec.ceiling(), cfg.value_max + kUmbraSeMax + 1);
  GreyImage f(2, slab);
  for (const auto& [p, v] : DrawGrey(rng, cfg).values()) f.set(p, v);
  GreyImage k(2, slab);
  for (int r = -1; r <= 1; ++r) {
    for (int c = -1; c <= 1; ++c) {
      if (rng() % 5 == 0) continue;
      k.set(Point{r, c}, static_cast<int>(rng() % (kUmbraSeMax + 1)));
    }
  }
  if (k.empty()) k.set(Point::Zero(2), 0);
  const UmbraSet uf = Umbra(f);
  const UmbraSet uk = Umbra(k);
  Report r;
  CheckGreyEq(r, "umbra_oracle.dilate_top_surface", Dilate(f, k),
              TopSurface(UmbraDilate(uf, uk)));
  CheckGreyEq(r, "umbra_oracle.erode_top_surface", Erode(f, k),
              TopSurface(UmbraErode(uf, uk)));
  CheckGreyEq(r, "umbra_oracle.open_top_surface", Open(f, k),
              TopSurface(UmbraDilate(UmbraErode(uf, uk), uk)));
  CheckGreyEq(r, "umbra_oracle.close_top_surface", Close(f, k),
              TopSurface(UmbraErode(UmbraDilate(uf, uk), uk)));
  CheckGreyEq(r, "umbra_oracle.open_reference", Open(f, k),
              OpenReference(f, k));
  CheckGreyEq(r, "umbra_oracle.close_reference", Close(f, k),
              CloseReference(f, k));
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("element", k);
  });
}

TrialOutcome RunClosingDuality(const TrialConfig& cfg, int trial) {
  std::mt19937_64 rng(TrialSeed(cfg, trial));
  const GreyImage f = DrawGrey(rng, cfg);
  const bool ok = CheckClosingDuality(f, cfg.spec.filter());
  Report r;
  r.Add("closing_duality.negate_open",
        ok ? CheckStatus::kPass : CheckStatus::kFail,
        ok ? "" : "closing differs from the negated opening on the interior");
  return Outcome(r, [&] {
    return SemBlock("f", f) + SemBlock("filter", cfg.spec.filter());
  });
}

struct Suite {
  const char* name;
  TrialOutcome (*run)(const TrialConfig&, int);
};

constexpr Suite kSuites[] = {
    {"bin-sampling", RunBinSampling},
    {"bin-sampled-op-bounds", RunBinOpBounds},
    {"bin-sampled-se-commute", RunBinSeCommute},
    {"bin-reconstruct-dilate-bound", RunBinReconstructDilate},
    {"bin-sample-dilation", RunBinSampleDilation},
    {"bin-sample-erosion", RunBinSampleErosion},
    {"bin-sampled-opening-commute", RunBinOpeningCommute},
    {"bin-sampled-closing-commute", RunBinClosingCommute},
    {"bin-open-close-bounds", RunBinOpenCloseBounds},
    {"bin-open-close-exact", RunBinOpenCloseExact},
    {"grey-sampling", RunGreySampling},
    {"grey-sampled-op-bounds", RunGreyOpBounds},
    {"grey-sampled-se-commute", RunGreySeCommute},
    {"grey-reconstruct-dilate-bound", RunGreyReconstructDilate},
    {"grey-sample-dilation", RunGreySampleDilation},
    {"grey-sample-erosion", RunGreySampleErosion},
    {"grey-sampled-opening-commute", RunGreyOpeningCommute},
    {"grey-sampled-closing-commute", RunGreyClosingCommute},
    {"grey-open-close-bounds", RunGreyOpenCloseBounds},
    {"grey-open-close-exact", RunGreyOpenCloseExact},
    {"grey-shift-diff-bound", RunGreyShiftDiff},
    {"pool-adjunction", RunPoolAdjunction},
    {"pool-reconstruct-bounds", RunPoolBounds},
    {"pool-relations", RunPoolRelations},
    {"op-laws", RunOpLaws},
    {"umbra-oracle", RunUmbraOracle},
    {"closing-duality", RunClosingDuality},
};

const Suite* FindSuite(const std::string& name) {
  for (const Suite& s : kSuites) {
    if (name == s.name) return &s;
  }
  return nullptr;
}

std::string PremiseMarker(const std::string& suite) {
  std::string marker = suite;
  std::replace(marker.begin(), marker.end(), '-', '_');
  return marker + ".premise";
}

int ThreadCount(int tasks) {
  int n = 0;
  if (const char* env = std::getenv("MORPHSAMPLE_THREADS")) {
    n = std::atoi(env);
  } else {
    n = static_cast<int>(std::thread::hardware_concurrency());
  }
  if (n < 1) n = 1;
  return std::min(n, std::max(tasks, 1));
}

void ValidateConfig(const TrialConfig& cfg) {
  cfg.spec.Require();
  if (cfg.trials < 0) {
    throw PreconditionError("trial count must be nonnegative");
  }
  if (cfg.rows < 1 || cfg.cols < 1) {
    throw PreconditionError("image size must be positive");
  }
  if (cfg.value_max < 0 || cfg.value_max > cfg.spec.ceiling()) {
    throw PreconditionError("value_max must lie in [0, ceiling]");
  }
  const int budget = cfg.value_max + MaxValue(cfg.spec.filter()) +
                     MaxElementValue(cfg.se_choice);
  if (budget > cfg.spec.ceiling()) {
    throw PreconditionError(
        "value budget can clamp: max value + filter maximum + element "
        "maximum is " +
        std::to_string(budget) + " with ceiling " +
        std::to_string(cfg.spec.ceiling()));
  }
  for (const std::string& name : cfg.suites) {
    if (FindSuite(name) == nullptr) {
      throw PreconditionError("unknown suite: " + name);
    }
  }
}

// Aggregation shared by the randomized and exhaustive paths.
class Aggregator {
 public:
  explicit Aggregator(TrialReport& report) : report_(report) {}

  void Take(int trial, const TrialOutcome& outcome) {
    for (const CheckResult& res : outcome.results) {
      CheckStats& slot = Slot(res.name);
      switch (res.status) {
        case CheckStatus::kPass:
          ++slot.pass;
          break;
        case CheckStatus::kFail:
          ++slot.fail;
          if (!report_.counterexample) {
            report_.counterexample =
                Counterexample{trial, res.name, res.witness, outcome.inputs};
          }
          break;
        case CheckStatus::kPremiseUnmet:
          ++slot.premise_unmet;
          break;
      }
    }
  }

 private:
  CheckStats& Slot(const std::string& name) {
    for (CheckStats& c : report_.checks) {
      if (c.name == name) return c;
    }
    report_.checks.push_back({name, 0, 0, 0});
    return report_.checks.back();
  }

  TrialReport& report_;
};

}  // namespace

SeChoice SeChoiceFromName(const std::string& name) {
  if (name == "flat5") return SeChoice::kFlatB;
  if (name == "b2") return SeChoice::kB2;
  if (name == "random") return SeChoice::kRandomOpened;
  throw PreconditionError("unknown structuring element choice: " + name +
                          " (expected flat5, b2, or random)");
}

bool TrialReport::FailureFree() const {
  for (const CheckStats& c : checks) {
    if (c.fail != 0) return false;
  }
  return true;
}

const CheckStats* TrialReport::Find(const std::string& name) const {
  for (const CheckStats& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string TrialReport::Render() const {
  std::ostringstream out;
  out << "TRIALS " << trials << "\n";
  for (const CheckStats& c : checks) {
    out << "CHECK " << c.name << " pass=" << c.pass << " fail=" << c.fail
        << " premise-unmet=" << c.premise_unmet << "\n";
  }
  if (counterexample) {
    out << "COUNTEREXAMPLE trial=" << counterexample->trial
        << " check=" << counterexample->check;
    if (!counterexample->witness.empty()) {
      out << " witness=" << counterexample->witness;
    }
    out << "\n" << counterexample->inputs;
  }
  return out.str();
}

std::vector<std::string> SuiteNames() {
  std::vector<std::string> names;
  for (const Suite& s : kSuites) names.push_back(s.name);
  return names;
}

int DefaultValueMax(const FilterSpec& spec, SeChoice se_choice,
                    const std::vector<std::string>& suites) {
  int budget =
      spec.ceiling() - MaxValue(spec.filter()) - MaxElementValue(se_choice);
  for (const std::string& suite : suites) {
    if (suite == "umbra-oracle") {
      budget = std::min(budget, spec.ceiling() - kUmbraSeMax - 1);
    }
  }
  return std::max(0, budget);
}

TrialReport RunSuite(const TrialConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  ValidateConfig(config);
  TrialReport report;
  report.trials = config.trials;

  const int suite_count = static_cast<int>(config.suites.size());
  const int tasks = suite_count * config.trials;
  std::vector<TrialOutcome> outcomes(static_cast<size_t>(tasks));
  std::atomic<int> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto work = [&] {
    for (;;) {
      const int task = next.fetch_add(1);
      if (task >= tasks) return;
      const Suite* suite = FindSuite(config.suites[
          static_cast<size_t>(task / config.trials)]);
      const int trial = task % config.trials;
      try {
        outcomes[static_cast<size_t>(task)] = suite->run(config, trial);
      } catch (const PreconditionError& e) {
        outcomes[static_cast<size_t>(task)].results = {
            {PremiseMarker(suite->name), CheckStatus::kPremiseUnmet,
             e.what()}};
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  if (tasks > 0) {
    const int workers = ThreadCount(tasks);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }

  Aggregator agg(report);
  for (int task = 0; task < tasks; ++task) {
    agg.Take(task % config.trials, outcomes[static_cast<size_t>(task)]);
  }

  report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

std::vector<std::string> ExhaustiveNames() {
  return {"bin-sampling", "pool-adjunction"};
}

namespace {

constexpr long long kEvaluationLimit = 20000000;

// Row-major odometer over assignments; false once all combinations have
// been visited.
bool NextAssignment(std::vector<int>& values, int value_max) {
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] < value_max) {
      ++values[i];
      std::fill(values.begin(), values.begin() + static_cast<long>(i), 0);
      return false;
    }
  }
  return true;
}

std::vector<Point> WindowPoints(int rows, int cols) {
  std::vector<Point> points;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) points.push_back(Point{r, c});
  }
  return points;
}

void RequireBudget(long double evaluations) {
  if (evaluations > static_cast<long double>(kEvaluationLimit)) {
    throw PreconditionError(
        "bounds too large: enumeration exceeds the limit of " +
        std::to_string(kEvaluationLimit) + " evaluations");
  }
}

TrialReport ExhaustiveAdjunction(const ExhaustiveBounds& bounds) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Point> pixels = WindowPoints(bounds.rows, bounds.cols);
  std::vector<Point> lattice;
  const std::vector<int>& spacing = bounds.spec.sieve().spacing();
  for (int r = 0; r < bounds.rows; r += spacing[0]) {
    for (int c = 0; c < bounds.cols; c += spacing[1]) {
      lattice.push_back(Point{r, c});
    }
  }
  const long double per = static_cast<long double>(bounds.value_max) + 1;
  long double evaluations = 1;
  for (size_t i = 0; i < pixels.size() + lattice.size(); ++i) {
    evaluations *= per;
    RequireBudget(evaluations);
  }

  TrialReport report;
  Aggregator agg(report);
  std::vector<int> fv(pixels.size(), 0);
  int evaluated = 0;
  bool f_done = false;
  while (!f_done) {
    GreyImage f(2, bounds.spec.ceiling());
    for (size_t i = 0; i < pixels.size(); ++i) f.set(pixels[i], fv[i]);
    std::vector<int> gv(lattice.size(), 0);
    bool g_done = false;
    while (!g_done) {
      GreyImage g(2, bounds.spec.ceiling());
      for (size_t i = 0; i < lattice.size(); ++i) g.set(lattice[i], gv[i]);
      const bool ok = AdjunctionHolds(f, g, bounds.spec);
      Report r;
      r.Add("pool_adjunction.biconditional",
            ok ? CheckStatus::kPass : CheckStatus::kFail,
            ok ? "" : "order equivalence broken");
      agg.Take(evaluated, Outcome(r, [&] {
                 return SemBlock("f", f) + SemBlock("g", g) +
                        SemBlock("filter", bounds.spec.filter());
               }));
      ++evaluated;
      g_done = NextAssignment(gv, bounds.value_max);
    }
    f_done = NextAssignment(fv, bounds.value_max);
  }
  report.trials = evaluated;
  report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

TrialReport ExhaustiveBinarySampling(const ExhaustiveBounds& bounds) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Point> pixels = WindowPoints(bounds.rows, bounds.cols);
  long double evaluations = 1;
  for (size_t i = 0; i < pixels.size(); ++i) {
    evaluations *= 2;
    RequireBudget(evaluations);
  }

  TrialReport report;
  Aggregator agg(report);
  const BinaryImage filter = bounds.spec.filter().domain();
  const uint64_t total = uint64_t{1} << pixels.size();
  for (uint64_t mask = 0; mask < total; ++mask) {
    BinaryImage f(2);
    for (size_t i = 0; i < pixels.size(); ++i) {
      if (mask & (uint64_t{1} << i)) f.insert(pixels[i]);
    }
    const Report r =
        CheckBinarySampling(f, filter, bounds.spec.sieve(), mask);
    agg.Take(static_cast<int>(mask), Outcome(r, [&] {
               return SemBlock("f", f) +
                      SemBlock("filter", bounds.spec.filter());
             }));
  }
  report.trials = static_cast<int>(total);
  report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

}  // namespace

TrialReport ExhaustiveSmall(const std::string& suite,
                            const ExhaustiveBounds& bounds) {
  if (suite != "bin-sampling" && suite != "pool-adjunction") {
    throw PreconditionError("unknown exhaustive suite: " + suite);
  }
  if (bounds.rows <= 0 || bounds.cols <= 0) return {};
  bounds.spec.Require();
  if (bounds.value_max < 0 || bounds.value_max > bounds.spec.ceiling()) {
    throw PreconditionError("value_max must lie in [0, ceiling]");
  }
  if (suite == "pool-adjunction") return ExhaustiveAdjunction(bounds);
  return ExhaustiveBinarySampling(bounds);
}

}  // namespace morphsample
