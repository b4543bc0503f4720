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

#ifndef MORPHSAMPLE_BUILTIN_SE_HPP_
#define MORPHSAMPLE_BUILTIN_SE_HPP_

#include <string>
#include <vector>

#include "morphsample/grid.hpp"

namespace morphsample {

// Structuring elements shipped with the tool, centered at the origin:
//
//   flat3  3x3 box, all zero
//   flat5  5x5 box without its four corners, all zero
//   k2     3x3 box, zero at the origin and 10 on the ring
//   b2     5x5 box with values 10 on the border, 20 on the inner ring
//          and 10 at the center
//   c2     the nine points {-2,0,2}x{-2,0,2}, all value 10
//
// The element is instantiated at the caller's ceiling so it can combine
// with any image; the ceiling must admit the element's values.
GreyImage BuiltinSe(const std::string& name, int ceiling = kDefaultCeiling);

// True iff BuiltinSe knows the name.
bool IsBuiltinSe(const std::string& name);

// All known names, for help text and error messages.
std::vector<std::string> BuiltinSeNames();

}  // namespace morphsample

#endif  // MORPHSAMPLE_BUILTIN_SE_HPP_
