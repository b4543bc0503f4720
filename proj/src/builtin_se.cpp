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

#include "morphsample/builtin_se.hpp"

#include <sstream>
#include <utility>

#include "morphsample/errors.hpp"
#include "morphsample/image_io.hpp"

namespace morphsample {
namespace {

struct Asset {
  const char* name;
  const char* text;
};

// Each asset is stored in the same text format ParseSem reads from disk,
// with its own tightest maxval; BuiltinSe re-instantiates at the caller's
// ceiling.
constexpr Asset kAssets[] = {
    {"flat3",
     "SEM 3 3 1 1 1\n"
     "0 0 0\n"
     "0 0 0\n"
     "0 0 0\n"},
    {"flat5",
     "SEM 5 5 2 2 1\n"
     ". 0 0 0 .\n"
     "0 0 0 0 0\n"
     "0 0 0 0 0\n"
     "0 0 0 0 0\n"
     ". 0 0 0 .\n"},
    {"k2",
     "SEM 3 3 1 1 10\n"
     "10 10 10\n"
     "10 0 10\n"
     "10 10 10\n"},
    {"b2",
     "SEM 5 5 2 2 20\n"
     "10 10 10 10 10\n"
     "10 20 20 20 10\n"
     "10 20 10 20 10\n"
     "10 20 20 20 10\n"
     "10 10 10 10 10\n"},
    {"c2",
     "SEM 5 5 2 2 10\n"
     "10 . 10 . 10\n"
     ". . . . .\n"
     "10 . 10 . 10\n"
     ". . . . .\n"
     "10 . 10 . 10\n"},
};

}  // namespace

GreyImage BuiltinSe(const std::string& name, int ceiling) {
  for (const Asset& asset : kAssets) {
    if (name != asset.name) continue;
    const GreyImage parsed = ParseSem(asset.text, name);
    GreyImage result(parsed.dim(), ceiling);
    const PointMap<int>& values = parsed.values();
    for (const auto& [p, v] : values) {
      if (v > ceiling) {
        throw PreconditionError("structuring element \"" + name +
                                "\" has value " + std::to_string(v) +
                                " above ceiling " + std::to_string(ceiling));
      }
      result.set(p, v);
    }
    return result;
  }
  std::ostringstream known;
  for (const std::string& se : BuiltinSeNames()) known << " " << se;
  throw PreconditionError("unknown structuring element \"" + name +
                          "\"; known:" + known.str());
}

bool IsBuiltinSe(const std::string& name) {
  for (const Asset& asset : kAssets) {
    if (name == asset.name) return true;
  }
  return false;
}

std::vector<std::string> BuiltinSeNames() {
  std::vector<std::string> names;
  for (const Asset& asset : kAssets) names.emplace_back(asset.name);
  return names;
}

}  // namespace morphsample
