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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "doctest.h"
#include "morphsample/builtin_se.hpp"
#include "morphsample/grey_morph.hpp"
#include "morphsample/grid.hpp"
#include "morphsample/image_io.hpp"
#include "morphsample/pooling.hpp"
#include "morphsample/sampling.hpp"

namespace morphsample {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

const fs::path& Scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::current_path() / "cli_scratch";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CliResult RunCli(const std::string& args) {
  const fs::path log = Scratch() / "last_run.log";
  const std::string cmd =
      std::string(MORPHSAMPLE_CLI_PATH) + " " + args + " > " + log.string() +
      " 2>&1";
  const int status = std::system(cmd.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.output = Slurp(log);
  return result;
}

std::string PathOf(const char* name) { return (Scratch() / name).string(); }

// A deterministic test image with a spread of values.
GreyImage TestImage() {
  GreyImage f(2, 63);
  std::mt19937_64 rng(19);
  for (int r = 0; r < 10; ++r) {
    for (int c = 0; c < 12; ++c) {
      f.set(Point{r, c}, static_cast<int>(rng() % 64));
    }
  }
  return f;
}

TEST_CASE("round trips are byte identical") {
  const GreyImage f = TestImage();
  WritePgm(f, PathOf("f.pgm"));
  CliResult r = RunCli("sample --image " + PathOf("f.pgm") +
                       " --spacing 1,1 --compact --out " + PathOf("rt.pgm"));
  CHECK(r.exit_code == 0);
  CHECK(Slurp(PathOf("f.pgm")) == Slurp(PathOf("rt.pgm")));

  GreyImage holed(2, f.ceiling());
  for (const auto& [p, v] : f.values()) {
    if (p == Point{3, 4} || p == Point{0, 0}) continue;
    holed.set(p, v);
  }
  WriteSem(holed, PathOf("h.sem"));
  r = RunCli("sample --image " + PathOf("h.sem") + " --spacing 1,1 --out " +
             PathOf("rt.sem"));
  CHECK(r.exit_code == 0);
  CHECK(Slurp(PathOf("h.sem")) == Slurp(PathOf("rt.sem")));
}

TEST_CASE("op subcommand matches the library operators") {
  const GreyImage f = TestImage();
  WritePgm(f, PathOf("f.pgm"));
  const GreyImage k = BuiltinSe("k2", 63);
  for (const std::string kind : {"dilate", "erode", "open", "close"}) {
    CliResult r = RunCli("op " + kind + " --image " + PathOf("f.pgm") +
                         " --se k2 --out " + PathOf("op.sem"));
    REQUIRE(r.exit_code == 0);
    const GreyImage got = ReadImage(PathOf("op.sem"));
    GreyImage want(2, 63);
    if (kind == "dilate") want = Dilate(f, k);
    if (kind == "erode") want = Erode(f, k);
    if (kind == "open") want = Open(f, k);
    if (kind == "close") want = Close(f, k);
    CHECK(got == want);
  }
}

TEST_CASE("op writes SEM to stdout when --out is omitted") {
  const GreyImage f = TestImage();
  WritePgm(f, PathOf("f.pgm"));
  CliResult r =
      RunCli("op dilate --image " + PathOf("f.pgm") + " --se flat3");
  CHECK(r.exit_code == 0);
  std::ostringstream want;
  WriteSem(Dilate(f, BuiltinSe("flat3", 63)), want);
  CHECK(r.output == want.str());
}

TEST_CASE("sample keeps coordinates by default and compacts on request") {
  const GreyImage f = TestImage();
  WritePgm(f, PathOf("f.pgm"));
  const Sieve s({2, 3});
  CliResult r = RunCli("sample --image " + PathOf("f.pgm") +
                       " --spacing 2,3 --out " + PathOf("fs.sem"));
  REQUIRE(r.exit_code == 0);
  CHECK(ReadImage(PathOf("fs.sem")) == Restrict(f, s));
  CHECK(Slurp(PathOf("fs.sem")).find('.') != std::string::npos);

  r = RunCli("sample --image " + PathOf("f.pgm") +
             " --spacing 2,3 --compact --out " + PathOf("fc.pgm"));
  REQUIRE(r.exit_code == 0);
  const GreyImage compact = ReadImage(PathOf("fc.pgm"));
  const GreyImage sampled = Restrict(f, s);
  GreyImage want(2, 63);
  for (const auto& [p, v] : sampled.values()) {
    want.set(Point{p[0] / 2, p[1] / 3}, v);
  }
  CHECK(compact == want);
}

TEST_CASE("reconstruct and pool match the library") {
  const GreyImage f = TestImage();
  WritePgm(f, PathOf("f.pgm"));
  const Sieve s({2, 2});
  const FilterSpec spec(BuiltinSe("flat3", 63), s);
  const GreyImage fs = Restrict(f, s);
  WriteSem(fs, PathOf("fs.sem"));

  CliResult r = RunCli("reconstruct min --image " + PathOf("fs.sem") +
                       " --filter flat3 --spacing 2,2 --out " +
                       PathOf("rmin.sem"));
  REQUIRE(r.exit_code == 0);
  CHECK(ReadImage(PathOf("rmin.sem")) == MinReconstruct(fs, spec));

  r = RunCli("reconstruct max --image " + PathOf("fs.sem") +
             " --filter flat3 --spacing 2,2 --out " + PathOf("rmax.sem"));
  REQUIRE(r.exit_code == 0);
  CHECK(ReadImage(PathOf("rmax.sem")) == MaxReconstruct(fs, spec));

  r = RunCli("pool sigma --image " + PathOf("f.pgm") +
             " --filter flat3 --spacing 2,2 --out " + PathOf("sig.sem"));
  REQUIRE(r.exit_code == 0);
  CHECK(ReadImage(PathOf("sig.sem")) == Sigma(f, spec));

  r = RunCli("pool sigma-dot --image " + PathOf("fs.sem") +
             " --filter flat3 --spacing 2,2 --out " + PathOf("sigd.sem"));
  REQUIRE(r.exit_code == 0);
  CHECK(ReadImage(PathOf("sigd.sem")) == SigmaDot(fs, spec));

  r = RunCli("pool rho --image " + PathOf("f.pgm") +
             " --filter flat3 --spacing 2,2 --out " + PathOf("rho.sem"));
  REQUIRE(r.exit_code == 0);
  CHECK(ReadImage(PathOf("rho.sem")) == Rho(f, spec));

  r = RunCli("pool delta --image " + PathOf("f.pgm") +
             " --filter flat3 --spacing 2,2 --out " + PathOf("del.sem"));
  REQUIRE(r.exit_code == 0);
  CHECK(ReadImage(PathOf("del.sem")) == Delta(f, spec));
}

TEST_CASE("validate reports conditions and uses the verification exit code") {
  CliResult r = RunCli("validate --filter flat3 --spacing 2,2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("fail") == std::string::npos);
  CHECK(r.output.find("filter_subadditive pass") != std::string::npos);

  r = RunCli("validate --filter flat5 --spacing 2,2");
  CHECK(r.exit_code == 4);
  CHECK(r.output.find("filter_meets_sieve_only_at_origin fail") !=
        std::string::npos);
  CHECK(r.output.find("x=(") != std::string::npos);

  r = RunCli("validate --filter flat5 --spacing 2,2 --binary-only");
  CHECK(r.exit_code == 4);
  CHECK(r.output.find("filter_subadditive") == std::string::npos);
}

TEST_CASE("verify subcommand runs suites deterministically") {
  const std::string args =
      "verify --suite grey-sample-dilation --seed 7 --trials 25 "
      "--size 10x10 --filter flat3 --se flat5 --spacing 2,2";
  CliResult first = RunCli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output.find("TRIALS 25") != std::string::npos);
  CHECK(first.output.find("pass=25") != std::string::npos);
  CliResult second = RunCli(args);
  CHECK(second.output == first.output);

  CliResult exhaustive = RunCli(
      "verify --suite pool-adjunction --exhaustive --size 2x2 "
      "--filter flat3 --value-max 2 --spacing 2,2");
  CHECK(exhaustive.exit_code == 0);
  CHECK(exhaustive.output.find("TRIALS 243") != std::string::npos);

  CliResult unknown = RunCli("verify --suite no-such-suite --trials 1");
  CHECK(unknown.exit_code == 3);
}

TEST_CASE("demo figures emits the pipeline stages with identical pairs") {
  const GreyImage f = TestImage();
  WritePgm(f, PathOf("f.pgm"));
  const std::string outdir = (Scratch() / "figs").string();
  CliResult r =
      RunCli("demo figures --image " + PathOf("f.pgm") + " --outdir " +
             outdir);
  REQUIRE(r.exit_code == 0);
  const char* names[] = {
      "samples.sem",          "sample-of-dilation.sem",
      "dilate-samples.sem",   "close-dilate-sample.sem",
      "sample-of-erosion.sem", "erode-samples.sem",
      "dilate-erode-sample.sem", "opening-lower.sem",
      "opening-sampled.sem",  "opening-upper.sem",
      "closing-lower.sem",    "closing-sampled.sem",
      "closing-upper.sem",    "pool-rho.sem",
      "pool-delta.sem",
  };
  for (const char* name : names) {
    CHECK(fs::exists(fs::path(outdir) / name));
  }
  CHECK(Slurp(fs::path(outdir) / "dilate-samples.sem") ==
        Slurp(fs::path(outdir) / "close-dilate-sample.sem"));
  CHECK(Slurp(fs::path(outdir) / "erode-samples.sem") ==
        Slurp(fs::path(outdir) / "dilate-erode-sample.sem"));
}

TEST_CASE("exit codes distinguish usage, io, precondition, verification") {
  const GreyImage f = TestImage();
  WritePgm(f, PathOf("f.pgm"));

  CHECK(RunCli("op dilate --image " + PathOf("f.pgm")).exit_code == 1);
  CHECK(RunCli("op squish --image " + PathOf("f.pgm") + " --se flat3")
            .exit_code == 1);
  CHECK(RunCli("sample --image " + PathOf("f.pgm") + " --spacing 2")
            .exit_code == 1);

  CHECK(RunCli("op dilate --image " + PathOf("nope.pgm") + " --se flat3")
            .exit_code == 2);
  std::ofstream(PathOf("bad.pgm")) << "P5 mangled";
  CHECK(RunCli("op dilate --image " + PathOf("bad.pgm") + " --se flat3")
            .exit_code == 2);

  GreyImage small(2, 15);
  small.set(Point{0, 0}, 3);
  WriteSem(small, PathOf("small.sem"));
  CliResult mixed = RunCli("op dilate --image " + PathOf("f.pgm") +
                           " --se " + PathOf("small.sem"));
  CHECK(mixed.exit_code == 3);
  CHECK(mixed.output.find("maxval") != std::string::npos);

  CHECK(RunCli("validate --filter flat5 --spacing 2,2").exit_code == 4);
}

}  // namespace
}  // namespace morphsample
