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

// Command-line front-end: operator application, sampling and
// reconstruction, pooling, filter validation, randomized verification
// suites, and the bundled demo pipelines.
//
// Exit codes: 0 success, 1 usage, 2 I/O or file format, 3 precondition,
// 4 verification failure.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "morphsample/builtin_se.hpp"
#include "morphsample/errors.hpp"
#include "morphsample/grey_morph.hpp"
#include "morphsample/grid.hpp"
#include "morphsample/image_io.hpp"
#include "morphsample/pooling.hpp"
#include "morphsample/sampling.hpp"
#include "morphsample/verify.hpp"

namespace morphsample {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitVerification = 4;

// Flag values that fail to parse are usage errors, not preconditions.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

Sieve ParseSpacing(const std::string& text) {
  std::istringstream in(text);
  int r = 0;
  int c = 0;
  char comma = 0;
  if (!(in >> r >> comma >> c) || comma != ',' || !(in >> std::ws).eof() ||
      r < 1 || c < 1) {
    throw UsageError("--spacing expects R,C with positive integers, got '" +
                     text + "'");
  }
  return Sieve({r, c});
}

std::pair<int, int> ParseSize(const std::string& text) {
  std::istringstream in(text);
  int r = 0;
  int c = 0;
  char sep = 0;
  if (!(in >> r >> sep >> c) || (sep != 'x' && sep != 'X') ||
      !(in >> std::ws).eof() || r < 1 || c < 1) {
    throw UsageError("--size expects RxC with positive integers, got '" +
                     text + "'");
  }
  return {r, c};
}

// A structuring element or filter named on the command line: either one
// of the built-in names or a path.  Elements read from a file must share
// the maxval of the image they combine with.
GreyImage LoadElement(const std::string& name_or_path, int ceiling) {
  if (IsBuiltinSe(name_or_path)) return BuiltinSe(name_or_path, ceiling);
  GreyImage e = ReadImage(name_or_path);
  if (e.ceiling() != ceiling) {
    throw PreconditionError(
        name_or_path + ": maxval " + std::to_string(e.ceiling()) +
        " does not match the pipeline maxval " + std::to_string(ceiling) +
        "; files combined in one invocation must agree");
  }
  return e;
}

// As above, for subcommands with no image to borrow a ceiling from.
GreyImage LoadStandalone(const std::string& name_or_path) {
  if (IsBuiltinSe(name_or_path)) return BuiltinSe(name_or_path);
  return ReadImage(name_or_path);
}

void Emit(const GreyImage& f, const std::string& out) {
  if (out.empty()) {
    WriteSem(f, std::cout);
  } else {
    WriteImage(f, out);
  }
}

// Divides every coordinate by the spacing, collapsing a sampled image
// onto a dense grid that standard viewers understand.
GreyImage CompactCoordinates(const GreyImage& sampled, const Sieve& s) {
  GreyImage out(sampled.dim(), sampled.ceiling());
  for (const auto& [p, v] : sampled.values()) {
    Point q = p;
    for (int i = 0; i < sampled.dim(); ++i) q[i] = p[i] / s.spacing()[i];
    out.set(q, v);
  }
  return out;
}

void RunDemoFigures(const std::string& image, const std::string& outdir) {
  std::error_code ec;
  std::filesystem::create_directories(outdir, ec);
  if (ec) {
    throw IoError(outdir + ": cannot create directory: " + ec.message());
  }
  const GreyImage f = ReadImage(image);
  const Sieve s({2, 2});
  const GreyImage k = BuiltinSe("flat3", f.ceiling());
  const GreyImage b = BuiltinSe("flat5", f.ceiling());
  const FilterSpec spec(k, s);
  spec.Require();
  const GreyImage fs = Restrict(f, s);
  const GreyImage bs = Restrict(b, s);

  struct Item {
    const char* name;
    GreyImage image;
  };
  // The two sampling-theorem pairs come out byte-identical: dilating
  // (eroding) the samples by the sampled element equals sampling the
  // dilation (erosion) of the reconstruction, because the 5x5 element
  // is open with respect to the 3x3 filter.
  const std::vector<Item> items = {
      {"samples.sem", fs},
      {"sample-of-dilation.sem", Restrict(Dilate(f, b), s)},
      {"dilate-samples.sem", Dilate(fs, bs)},
      {"close-dilate-sample.sem", Restrict(Dilate(Close(fs, k), b), s)},
      {"sample-of-erosion.sem", Restrict(Erode(f, b), s)},
      {"erode-samples.sem", Erode(fs, bs)},
      {"dilate-erode-sample.sem", Restrict(Erode(Dilate(fs, k), b), s)},
      {"opening-lower.sem", Restrict(Open(f, Dilate(bs, k)), s)},
      {"opening-sampled.sem", Open(fs, bs)},
      {"opening-upper.sem", Restrict(Open(Dilate(fs, k), b), s)},
      {"closing-lower.sem", Restrict(Close(Close(fs, k), b), s)},
      {"closing-sampled.sem", Close(fs, bs)},
      {"closing-upper.sem", Restrict(Close(f, Dilate(bs, k)), s)},
      {"pool-rho.sem", Rho(f, spec)},
      {"pool-delta.sem", Delta(f, spec)},
  };
  for (const Item& item : items) {
    const std::string path =
        (std::filesystem::path(outdir) / item.name).string();
    WriteSem(item.image, path);
    std::cout << "WROTE " << path << "\n";
  }
}

int Run(int argc, char** argv) {
  CLI::App app{
      "morphsample: morphological operators on sampled grey-value images"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  // ---- op ----------------------------------------------------------
  auto* op = app.add_subcommand(
      "op", "Apply dilation, erosion, opening or closing to an image");
  std::string op_kind;
  std::string op_image;
  std::string op_se;
  std::string op_out;
  op->add_option("operator", op_kind, "one of dilate|erode|open|close")
      ->required()
      ->check(CLI::IsMember({"dilate", "erode", "open", "close"}));
  op->add_option("--image", op_image, "input image (PGM or SEM)")->required();
  op->add_option("--se", op_se,
                 "structuring element: SEM/PGM path or a built-in name")
      ->required();
  op->add_option("--out", op_out,
                 "output path (.pgm/.pnm/.sem); default prints SEM to stdout");
  op->callback([&] {
    const GreyImage f = ReadImage(op_image);
    const GreyImage e = LoadElement(op_se, f.ceiling());
    GreyImage g(f.dim(), f.ceiling());
    if (op_kind == "dilate") {
      g = Dilate(f, e);
    } else if (op_kind == "erode") {
      g = Erode(f, e);
    } else if (op_kind == "open") {
      g = Open(f, e);
    } else {
      g = Close(f, e);
    }
    Emit(g, op_out);
  });

  // ---- sample ------------------------------------------------------
  auto* sample = app.add_subcommand(
      "sample", "Restrict an image to the sampling grid");
  std::string sample_image;
  std::string sample_spacing;
  std::string sample_out;
  bool sample_compact = false;
  sample->add_option("--image", sample_image, "input image (PGM or SEM)")
      ->required();
  sample->add_option("--spacing", sample_spacing, "grid spacing R,C")
      ->required();
  sample->add_flag("--compact", sample_compact,
                   "divide coordinates by the spacing; default keeps the "
                   "original coordinates with '.' holes");
  sample->add_option("--out", sample_out, "output path");
  sample->callback([&] {
    const GreyImage f = ReadImage(sample_image);
    const Sieve s = ParseSpacing(sample_spacing);
    const GreyImage fs = Restrict(f, s);
    Emit(sample_compact ? CompactCoordinates(fs, s) : fs, sample_out);
  });

  // ---- reconstruct -------------------------------------------------
  auto* reconstruct = app.add_subcommand(
      "reconstruct", "Rebuild an image from its samples");
  std::string rec_kind;
  std::string rec_image;
  std::string rec_filter;
  std::string rec_spacing;
  std::string rec_out;
  reconstruct
      ->add_option("kind", rec_kind,
                   "min for the smallest, max for the largest consistent "
                   "reconstruction")
      ->required()
      ->check(CLI::IsMember({"min", "max"}));
  reconstruct
      ->add_option("--image", rec_image,
                   "sampled image, coordinates on the grid")
      ->required();
  reconstruct
      ->add_option("--filter", rec_filter,
                   "reconstruction filter: path or built-in name")
      ->required();
  reconstruct->add_option("--spacing", rec_spacing, "grid spacing R,C")
      ->required();
  reconstruct->add_option("--out", rec_out, "output path");
  reconstruct->callback([&] {
    const GreyImage g = ReadImage(rec_image);
    const GreyImage k = LoadElement(rec_filter, g.ceiling());
    const FilterSpec spec(k, ParseSpacing(rec_spacing));
    Emit(rec_kind == "min" ? MinReconstruct(g, spec) : MaxReconstruct(g, spec),
         rec_out);
  });

  // ---- pool --------------------------------------------------------
  auto* pool = app.add_subcommand(
      "pool", "Pooling operators and their reconstructions");
  std::string pool_kind;
  std::string pool_image;
  std::string pool_filter;
  std::string pool_spacing;
  std::string pool_out;
  pool->add_option("kind", pool_kind,
                   "sigma (pool), sigma-dot (co-pool), rho (pool then "
                   "reconstruct), delta (reconstruct then pool)")
      ->required()
      ->check(CLI::IsMember({"sigma", "sigma-dot", "rho", "delta"}));
  pool->add_option("--image", pool_image, "input image")->required();
  pool->add_option("--filter", pool_filter,
                   "pooling filter: path or built-in name")
      ->required();
  pool->add_option("--spacing", pool_spacing, "grid spacing R,C")->required();
  pool->add_option("--out", pool_out, "output path");
  pool->callback([&] {
    const GreyImage f = ReadImage(pool_image);
    const GreyImage c = LoadElement(pool_filter, f.ceiling());
    const FilterSpec spec(c, ParseSpacing(pool_spacing));
    GreyImage g(f.dim(), f.ceiling());
    if (pool_kind == "sigma") {
      g = Sigma(f, spec);
    } else if (pool_kind == "sigma-dot") {
      g = SigmaDot(f, spec);
    } else if (pool_kind == "rho") {
      g = Rho(f, spec);
    } else {
      g = Delta(f, spec);
    }
    Emit(g, pool_out);
  });

  // ---- validate ----------------------------------------------------
  auto* validate = app.add_subcommand(
      "validate", "Check the sampling conditions for a filter and spacing");
  std::string val_filter;
  std::string val_spacing;
  bool val_binary_only = false;
  validate
      ->add_option("--filter", val_filter, "filter: path or built-in name")
      ->required();
  validate->add_option("--spacing", val_spacing, "grid spacing R,C")
      ->required();
  validate->add_flag("--binary-only", val_binary_only,
                     "check only the support conditions, ignoring values");
  validate->callback([&] {
    const GreyImage k = LoadStandalone(val_filter);
    const Sieve s = ParseSpacing(val_spacing);
    const Report report = val_binary_only
                              ? ValidateBinaryConditions(k.domain(), s)
                              : ValidateGreyConditions(k, s);
    std::cout << Render(report);
    if (!report.AllPass()) exit_code = kExitVerification;
  });

  // ---- verify ------------------------------------------------------
  auto* verify = app.add_subcommand(
      "verify", "Run randomized or exhaustive verification suites");
  std::vector<std::string> ver_suites;
  uint64_t ver_seed = 0;
  int ver_trials = 100;
  std::string ver_size = "16x16";
  std::string ver_filter = "flat3";
  std::string ver_se = "flat5";
  std::string ver_spacing = "2,2";
  int ver_value_max = -1;
  bool ver_exhaustive = false;
  bool ver_no_holes = false;
  verify
      ->add_option("--suite", ver_suites,
                   "suite name, repeatable; 'all' runs every suite")
      ->required();
  verify->add_option("--seed", ver_seed, "base random seed (default 0)");
  verify->add_option("--trials", ver_trials, "trials per suite (default 100)");
  verify->add_option("--size", ver_size, "image size RxC (default 16x16)");
  verify->add_option("--filter", ver_filter,
                     "filter: flat3, k2 or a path (default flat3)");
  verify->add_option("--se", ver_se,
                     "element family for suites that take one (default flat5)")
      ->check(CLI::IsMember({"flat5", "b2", "random"}));
  verify->add_option("--spacing", ver_spacing,
                     "grid spacing R,C (default 2,2)");
  verify->add_option("--value-max", ver_value_max,
                     "largest drawn pixel value (default: largest value "
                     "that cannot clamp at the ceiling)");
  verify->add_flag("--exhaustive", ver_exhaustive,
                   "enumerate every input up to the given size instead of "
                   "sampling; takes exactly one --suite");
  verify->add_flag("--no-holes", ver_no_holes,
                   "draw total images instead of images with holes");
  verify->callback([&] {
    const GreyImage k = LoadStandalone(ver_filter);
    FilterSpec spec(k, ParseSpacing(ver_spacing));
    const auto [rows, cols] = ParseSize(ver_size);
    std::vector<std::string> names;
    for (const std::string& name : ver_suites) {
      if (name == "all") {
        const std::vector<std::string> all = SuiteNames();
        names.insert(names.end(), all.begin(), all.end());
      } else {
        names.push_back(name);
      }
    }
    TrialReport report{};
    if (ver_exhaustive) {
      if (names.size() != 1) {
        throw UsageError("--exhaustive takes exactly one --suite");
      }
      ExhaustiveBounds bounds{std::move(spec)};
      bounds.rows = rows;
      bounds.cols = cols;
      bounds.value_max = ver_value_max < 0
                             ? std::min(3, bounds.spec.ceiling())
                             : ver_value_max;
      report = ExhaustiveSmall(names.front(), bounds);
    } else {
      const SeChoice choice = SeChoiceFromName(ver_se);
      TrialConfig cfg{std::move(spec)};
      cfg.seed = ver_seed;
      cfg.trials = ver_trials;
      cfg.rows = rows;
      cfg.cols = cols;
      cfg.se_choice = choice;
      cfg.suites = names;
      cfg.holes = !ver_no_holes;
      cfg.value_max = ver_value_max < 0
                          ? DefaultValueMax(cfg.spec, choice, names)
                          : ver_value_max;
      report = RunSuite(cfg);
    }
    std::cout << report.Render();
    if (!report.FailureFree()) exit_code = kExitVerification;
  });

  // ---- demo --------------------------------------------------------
  auto* demo = app.add_subcommand("demo", "Reproduce the bundled pipelines");
  demo->require_subcommand(1);
  auto* figures = demo->add_subcommand(
      "figures",
      "Emit every pipeline stage around one image as named SEM files");
  std::string demo_image;
  std::string demo_outdir;
  figures->add_option("--image", demo_image, "input image")->required();
  figures->add_option("--outdir", demo_outdir, "output directory")
      ->required();
  figures->callback([&] { RunDemoFigures(demo_image, demo_outdir); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }
  return exit_code;
}

}  // namespace
}  // namespace morphsample

int main(int argc, char** argv) { return morphsample::Run(argc, argv); }
