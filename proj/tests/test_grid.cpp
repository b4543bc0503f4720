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
#include <doctest.h>

#include <random>

#include "morphsample/errors.hpp"
#include "morphsample/grid.hpp"

using namespace morphsample;

namespace {

BinaryImage FullSquare(int lo, int hi) {
  BinaryImage a(2);
  for (int r = lo; r <= hi; ++r) {
    for (int c = lo; c <= hi; ++c) a.insert(Point{r, c});
  }
  return a;
}

}  // namespace

TEST_CASE("point arithmetic and ordering") {
  Point a{1, 2};
  Point b{3, -1};
  CHECK(a + b == Point{4, 1});
  CHECK(a - b == Point{-2, 3});
  CHECK(-a == Point{-1, -2});
  CHECK(a < b);
  CHECK(Point{1, 2} == a);
  CHECK(a.Extended(7) == Point{1, 2, 7});
  CHECK(Point{1, 2, 7}.Truncated() == a);
  CHECK(ToString(Point{-1, 0, 3}) == "(-1,0,3)");
  CHECK_THROWS_AS((a + Point{1, 2, 3}), PreconditionError);
}

TEST_CASE("translate shifts every point") {
  BinaryImage a(2, {Point{0, 0}, Point{1, 0}});
  CHECK(Translate(a, Point{0, 0}) == a);

  BinaryImage single(2, {Point{0, 0}});
  CHECK(Translate(single, Point{2, 3}) == BinaryImage(2, {Point{2, 3}}));

  BinaryImage empty(2);
  CHECK(Translate(empty, Point{5, 5}) == empty);

  CHECK(Translate(Translate(a, Point{3, -2}), Point{-3, 2}) == a);
  CHECK_THROWS_AS((Translate(a, Point{1})), PreconditionError);
}

TEST_CASE("reflect negates every point") {
  BinaryImage a(2, {Point{1, 0}, Point{0, 1}});
  CHECK(Reflect(a) == BinaryImage(2, {Point{-1, 0}, Point{0, -1}}));

  BinaryImage box = FullSquare(-1, 1);
  CHECK(Reflect(box) == box);

  BinaryImage empty(2);
  CHECK(Reflect(empty) == empty);
  CHECK(Reflect(Reflect(a)) == a);
}

TEST_CASE("restrict keeps lattice points in original coordinates") {
  Sieve s({2, 2});
  BinaryImage a = FullSquare(0, 3);
  BinaryImage want(2, {Point{0, 0}, Point{0, 2}, Point{2, 0}, Point{2, 2}});
  CHECK(Restrict(a, s) == want);

  Sieve unit({1, 1});
  CHECK(Restrict(a, unit) == a);

  BinaryImage odd(2, {Point{1, 1}, Point{1, 3}});
  CHECK(Restrict(odd, s).empty());

  CHECK(Restrict(Restrict(a, s), s) == Restrict(a, s));
}

TEST_CASE("restrict on grey images copies values and ceiling") {
  GreyImage f(2, 63);
  f.set(Point{0, 0}, 5);
  f.set(Point{0, 1}, 6);
  f.set(Point{2, 2}, 7);
  GreyImage g = Restrict(f, Sieve({2, 2}));
  CHECK(g.ceiling() == 63);
  CHECK(g.size() == 2);
  CHECK(g.at(Point{0, 0}) == 5);
  CHECK(g.at(Point{2, 2}) == 7);
  CHECK_FALSE(g.contains(Point{0, 1}));
}

TEST_CASE("grey image rejects out of range values") {
  GreyImage f(2, 7);
  f.set(Point{0, 0}, 7);
  CHECK_THROWS_AS((f.set(Point{0, 1}, 8)), PreconditionError);
  CHECK_THROWS_AS((f.set(Point{0, 1}, -1)), PreconditionError);
  CHECK_THROWS_AS((f.at(Point{9, 9})), PreconditionError);
  CHECK_THROWS_AS((GreyImage(2, 0)), PreconditionError);
}

TEST_CASE("le compares domains then values") {
  GreyImage f(2, 15);
  f.set(Point{0, 0}, 3);
  GreyImage g(2, 15);
  g.set(Point{0, 0}, 5);
  g.set(Point{1, 0}, 1);
  CHECK(Le(f, g));
  CHECK_FALSE(Le(g, f));
  CHECK(Le(f, f));

  GreyImage h(2, 16);
  h.set(Point{0, 0}, 3);
  CHECK_THROWS_AS((Le(f, h)), PreconditionError);
}

TEST_CASE("le is a partial order on random triples") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    GreyImage f(2, 15), g(2, 15), h(2, 15);
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        Point p{r, c};
        int base = static_cast<int>(rng() % 8);
        if (rng() % 4 != 0) f.set(p, base);
        if (rng() % 4 != 0) g.set(p, base + static_cast<int>(rng() % 4));
        if (rng() % 4 != 0) h.set(p, base + static_cast<int>(rng() % 8));
      }
    }
    CHECK(Le(f, f));
    if (Le(f, g) && Le(g, f)) CHECK(f == g);
    if (Le(f, g) && Le(g, h)) CHECK(Le(f, h));
  }
}

TEST_CASE("negate flips values in place") {
  GreyImage f(2, 255);
  f.set(Point{0, 0}, 100);
  f.set(Point{1, 1}, 0);
  GreyImage n = Negate(f);
  CHECK(n.at(Point{0, 0}) == 155);
  CHECK(n.at(Point{1, 1}) == 255);
  CHECK(Negate(n) == f);
  CHECK(n.domain() == f.domain());
}

TEST_CASE("grey reflect moves the domain and keeps values") {
  GreyImage f(2, 15);
  f.set(Point{1, 0}, 7);
  GreyImage r = Reflect(f);
  CHECK(r.size() == 1);
  CHECK(r.at(Point{-1, 0}) == 7);
  CHECK(Reflect(r) == f);
}

TEST_CASE("sieve membership is per axis") {
  Sieve s({2, 3});
  CHECK(s.contains(Point{0, 0}));
  CHECK(s.contains(Point{-4, 9}));
  CHECK_FALSE(s.contains(Point{1, 3}));
  CHECK_FALSE(s.contains(Point{2, 2}));
  CHECK_THROWS_AS((Sieve({0, 2})), PreconditionError);
}

TEST_CASE("bounding box and sorted points are deterministic") {
  BinaryImage a(2, {Point{2, 1}, Point{-1, 3}, Point{0, 0}});
  auto box = BoundingBox(a);
  REQUIRE(box.has_value());
  CHECK(box->lo == Point{-1, 0});
  CHECK(box->hi == Point{2, 3});
  CHECK_FALSE(BoundingBox(BinaryImage(2)).has_value());

  auto pts = SortedPoints(a);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0] == Point{-1, 3});
  CHECK(pts[1] == Point{0, 0});
  CHECK(pts[2] == Point{2, 1});

  int count = 0;
  box->ForEach([&](const Point&) { ++count; });
  CHECK(count == 16);
}

TEST_CASE("subset test requires matching dimensions") {
  BinaryImage a(2, {Point{0, 0}});
  BinaryImage b = FullSquare(0, 1);
  CHECK(IsSubset(a, b));
  CHECK_FALSE(IsSubset(b, a));
  CHECK_THROWS_AS((IsSubset(a, BinaryImage(3))), PreconditionError);
}
