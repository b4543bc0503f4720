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

#ifndef MORPHSAMPLE_IMAGE_IO_HPP_
#define MORPHSAMPLE_IMAGE_IO_HPP_

#include <iosfwd>
#include <string>

#include "morphsample/grid.hpp"

namespace morphsample {

// Two on-disk formats, both carrying the ceiling as their maxval:
//
//   PGM (P2 text or P5 raw): full-rectangle images anchored at (0,0);
//   rows map to the first coordinate, columns to the second.
//
//   SEM (text): partial-domain images and structuring elements.  Header
//   `SEM <rows> <cols> <origin_row> <origin_col> <maxval>` followed by
//   rows x cols tokens, each an integer or `.` for a hole.  Cell (r,c)
//   holds the value at point (r - origin_row, c - origin_col).
//
// Readers throw IoError on malformed input; writers throw
// PreconditionError when the image does not fit the format (PGM needs a
// full rectangle anchored at the origin).

// Reads either format, dispatching on the magic token.
GreyImage ReadImage(const std::string& path);
GreyImage ReadImage(std::istream& in, const std::string& name);

// Writes by extension: .pgm/.pnm as PGM, .sem as SEM.
void WriteImage(const GreyImage& f, const std::string& path);

// PGM, raw P5 for maxval up to 255 and text P2 above that.  The domain
// must be a full rectangle with corner (0,0).
void WritePgm(const GreyImage& f, std::ostream& out);
void WritePgm(const GreyImage& f, const std::string& path);

// SEM over the domain's bounding box, holes as `.`.
void WriteSem(const GreyImage& f, std::ostream& out);
void WriteSem(const GreyImage& f, const std::string& path);

// Parses SEM from a string, for embedded assets and tests.
GreyImage ParseSem(const std::string& text, const std::string& name);

}  // namespace morphsample

#endif  // MORPHSAMPLE_IMAGE_IO_HPP_
