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

#include "morphsample/image_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "morphsample/errors.hpp"

namespace morphsample {

namespace {

void CheckPlanar(const GreyImage& f, const char* what) {
  if (f.dim() != 2) {
    throw PreconditionError(std::string(what) +
                            ": only two-dimensional images have a file form");
  }
}

[[noreturn]] void Fail(const std::string& name, const std::string& why) {
  throw IoError(name + ": " + why);
}

// Skips whitespace and '#' comments, then reads one nonnegative integer.
int HeaderInt(std::istream& in, const std::string& name, const char* what) {
  for (;;) {
    const int c = in.peek();
    if (c == '#') {
      std::string line;
      std::getline(in, line);
      continue;
    }
    if (c == EOF) Fail(name, std::string("missing ") + what);
    if (!std::isspace(c)) break;
    in.get();
  }
  long long v = 0;
  if (!(in >> v) || v < 0) Fail(name, std::string("bad ") + what);
  return static_cast<int>(v);
}

GreyImage ReadPgm(std::istream& in, const std::string& name, bool raw) {
  const int cols = HeaderInt(in, name, "width");
  const int rows = HeaderInt(in, name, "height");
  const int maxval = HeaderInt(in, name, "maxval");
  if (cols <= 0 || rows <= 0) Fail(name, "empty raster");
  if (maxval <= 0 || maxval > 65535) Fail(name, "maxval out of range");

  GreyImage f(2, maxval);
  if (raw) {
    const int c = in.get();
    if (c == EOF || !std::isspace(c)) Fail(name, "missing raster separator");
    const int bytes = maxval > 255 ? 2 : 1;
    for (int r = 0; r < rows; ++r) {
      for (int col = 0; col < cols; ++col) {
        int v = in.get();
        if (v == EOF) Fail(name, "truncated raster");
        if (bytes == 2) {
          const int lo = in.get();
          if (lo == EOF) Fail(name, "truncated raster");
          v = v * 256 + lo;
        }
        if (v > maxval) Fail(name, "sample above maxval");
        f.set(Point{r, col}, v);
      }
    }
  } else {
    for (int r = 0; r < rows; ++r) {
      for (int col = 0; col < cols; ++col) {
        const int v = HeaderInt(in, name, "sample");
        if (v > maxval) Fail(name, "sample above maxval");
        f.set(Point{r, col}, v);
      }
    }
  }
  return f;
}

GreyImage ReadSem(std::istream& in, const std::string& name) {
  const int rows = HeaderInt(in, name, "rows");
  const int cols = HeaderInt(in, name, "cols");
  const int origin_row = HeaderInt(in, name, "origin row");
  const int origin_col = HeaderInt(in, name, "origin col");
  const int maxval = HeaderInt(in, name, "maxval");
  if (maxval <= 0) Fail(name, "maxval out of range");
  const bool empty = rows == 0 || cols == 0;
  if (!empty &&
      (origin_row < 0 || origin_row >= rows || origin_col < 0 ||
       origin_col >= cols)) {
    Fail(name, "origin outside the grid");
  }

  GreyImage f(2, maxval);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      std::string token;
      if (!(in >> token)) Fail(name, "truncated grid");
      if (token == ".") continue;
      size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(token, &used);
      } catch (const std::exception&) {
        Fail(name, "bad token '" + token + "'");
      }
      if (used != token.size()) Fail(name, "bad token '" + token + "'");
      if (v < 0 || v > maxval) Fail(name, "value outside [0, maxval]");
      f.set(Point{r - origin_row, c - origin_col}, v);
    }
  }
  return f;
}

}  // namespace

GreyImage ReadImage(std::istream& in, const std::string& name) {
  std::string magic;
  if (!(in >> magic)) Fail(name, "empty file");
  if (magic == "P2") return ReadPgm(in, name, false);
  if (magic == "P5") return ReadPgm(in, name, true);
  if (magic == "SEM") return ReadSem(in, name);
  Fail(name, "unknown magic '" + magic + "'");
}

GreyImage ReadImage(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(path, "cannot open for reading");
  return ReadImage(in, path);
}

void WritePgm(const GreyImage& f, std::ostream& out) {
  CheckPlanar(f, "PGM write");
  const auto box = BoundingBox(f);
  if (!box.has_value()) {
    throw PreconditionError("PGM write: empty image");
  }
  if (box->lo != Point{0, 0}) {
    throw PreconditionError(
        "PGM write: domain must be anchored at (0,0); use SEM");
  }
  const int rows = box->hi[0] + 1;
  const int cols = box->hi[1] + 1;
  if (f.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
    throw PreconditionError(
        "PGM write: domain must be a full rectangle; use SEM");
  }

  if (f.ceiling() <= 255) {
    out << "P5\n" << cols << ' ' << rows << '\n' << f.ceiling() << '\n';
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        out.put(static_cast<char>(f.at(Point{r, c})));
      }
    }
  } else {
    out << "P2\n" << cols << ' ' << rows << '\n' << f.ceiling() << '\n';
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        if (c > 0) out << ' ';
        out << f.at(Point{r, c});
      }
      out << '\n';
    }
  }
}

void WriteSem(const GreyImage& f, std::ostream& out) {
  CheckPlanar(f, "SEM write");
  const auto box = BoundingBox(f);
  if (!box.has_value()) {
    out << "SEM 0 0 0 0 " << f.ceiling() << "\n";
    return;
  }
  // The header locates the origin inside the grid, so the written box is
  // the bounding box grown to contain the origin; padding cells are '.'.
  const Point lo{std::min(box->lo[0], 0), std::min(box->lo[1], 0)};
  const Point hi{std::max(box->hi[0], 0), std::max(box->hi[1], 0)};
  const int rows = hi[0] - lo[0] + 1;
  const int cols = hi[1] - lo[1] + 1;
  const int origin_row = -lo[0];
  const int origin_col = -lo[1];
  out << "SEM " << rows << ' ' << cols << ' ' << origin_row << ' '
      << origin_col << ' ' << f.ceiling() << '\n';
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c > 0) out << ' ';
      const Point p{r - origin_row, c - origin_col};
      if (f.contains(p)) {
        out << f.at(p);
      } else {
        out << '.';
      }
    }
    out << '\n';
  }
}

namespace {

void WriteWith(const GreyImage& f, const std::string& path,
               void (*writer)(const GreyImage&, std::ostream&)) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(path, "cannot open for writing");
  writer(f, out);
  out.flush();
  if (!out) Fail(path, "write failed");
}

}  // namespace

void WritePgm(const GreyImage& f, const std::string& path) {
  WriteWith(f, path, &WritePgm);
}

void WriteSem(const GreyImage& f, const std::string& path) {
  WriteWith(f, path, &WriteSem);
}

void WriteImage(const GreyImage& f, const std::string& path) {
  const auto dot = path.rfind('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  if (ext == ".pgm" || ext == ".pnm") {
    WritePgm(f, path);
  } else if (ext == ".sem") {
    WriteSem(f, path);
  } else {
    Fail(path, "unknown output extension (use .pgm, .pnm or .sem)");
  }
}

GreyImage ParseSem(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  return ReadImage(in, name);
}

}  // namespace morphsample
