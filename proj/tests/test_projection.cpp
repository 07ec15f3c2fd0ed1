// Copyright 2026 The knotdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <map>

#include "doctest.h"
#include "fixtures.hpp"
#include "knotdec/projection.hpp"

using namespace knotdec;

namespace {

// Brute force: two distinct edges on the boundary of the same two faces.
bool prime_by_face_pairs(const LinkProjection& p) {
  std::map<std::pair<int, int>, int> seen;
  for (int e = 0; e < p.edge_count(); ++e) {
    auto [a, b] = p.edge_darts(e);
    int f = p.face_right_of(a), g = p.face_right_of(b);
    if (++seen[{std::min(f, g), std::max(f, g)}] > 1) return false;
  }
  return true;
}

std::vector<int> face_sizes(const LinkProjection& p) {
  std::vector<int> s;
  for (const auto& f : p.faces()) s.push_back(static_cast<int>(f.boundary.size()));
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("trefoil parses with five faces") {
  auto p = parse_pd(fixtures::kTrefoil);
  CHECK(p.crossing_count() == 3);
  CHECK(face_sizes(p) == std::vector<int>{2, 2, 2, 3, 3});
  CHECK(is_prime(p));
  CHECK(is_alternating(p));
}

TEST_CASE("borromean shadow is the octahedron") {
  auto p = parse_pd(fixtures::kBorromean);
  CHECK(p.crossing_count() == 6);
  CHECK(face_sizes(p) == std::vector<int>(8, 3));
  CHECK(is_prime(p));
  CHECK(is_alternating(p));
}

TEST_CASE("hopf and figure eight") {
  auto h = parse_pd(fixtures::kHopf);
  CHECK(h.faces().size() == 4);
  CHECK(is_prime(h));
  auto f = parse_pd(fixtures::kFigureEight);
  CHECK(f.faces().size() == 6);
  CHECK(is_prime(f));
  CHECK(is_alternating(f));
}

TEST_CASE("composite diagram is not prime") {
  auto p = parse_pd(fixtures::kGrannyLike);
  CHECK(p.crossing_count() == 6);
  CHECK_FALSE(is_prime(p));
  CHECK(prime_by_face_pairs(p) == is_prime(p));
}

TEST_CASE("malformed inputs are rejected") {
  CHECK_THROWS_AS(parse_pd(""), Error);
  CHECK_THROWS_AS(parse_pd("X(1,2,3)"), Error);
  CHECK_THROWS_AS(parse_pd("X(1,1,2,2),X(3,3,4,4)"), Error);
  try {
    parse_pd("X(1,2,3,5)");
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedInput);
  }
}

TEST_CASE("serialization round trips up to isomorphism") {
  for (const char* text : {fixtures::kTrefoil, fixtures::kHopf, fixtures::kBorromean,
                           fixtures::kFigureEight, fixtures::kGrannyLike}) {
    auto p = parse_pd(text);
    auto q = parse_pd(serialize_pd(p));
    CHECK(isomorphic(p, q));
    CHECK(serialize_pd(q) == serialize_pd(p));
    CHECK(canonical_code(p) == canonical_code(canonical_relabeling(p)));
  }
}

TEST_CASE("checkerboard and listing") {
  for (const char* text : {fixtures::kTrefoil, fixtures::kBorromean, fixtures::kFigureEight}) {
    auto p = parse_pd(text);
    auto cb = checkerboard(p);
    CHECK(is_proper_coloring(p, cb));
    for (const auto& f : p.faces()) CHECK(is_monotyp(p, f));
  }
  auto p = parse_pd(fixtures::kTrefoil).with_switched_crossing(0);
  CHECK_FALSE(is_alternating(p));
  CHECK(is_alternating(p.alternating_version()));
}

TEST_CASE("face count matches euler characteristic") {
  for (const char* text : {fixtures::kTrefoil, fixtures::kHopf, fixtures::kBorromean,
                           fixtures::kFigureEight, fixtures::kGrannyLike}) {
    auto p = parse_pd(text);
    CHECK(static_cast<int>(p.faces().size()) == p.crossing_count() + 2);
    CHECK(prime_by_face_pairs(p) == is_prime(p));
  }
}
