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

#include "doctest.h"
#include "fixtures.hpp"
#include "knotdec/bs_tree.hpp"
#include "knotdec/report.hpp"

using namespace knotdec;

TEST_CASE("report bookkeeping") {
  for (const char* pd : {fixtures::kTrefoil, fixtures::kHopf, fixtures::kBorromean, fixtures::kFigureEight,
                         fixtures::kTorus24}) {
    auto p = parse_pd(pd);
    Report r = build_report(p, {"fixture", 2});
    CHECK(r.accounted_crossings() == p.crossing_count());
    CHECK(r.valid());
    CHECK(r.seed_check->distinct == 1);
    CHECK(r.rules.size() == 4);
    // Identical inputs give identical serializations.
    CHECK(to_json(r).dump() == to_json(build_report(p, {"fixture", 2})).dump());
  }
}

TEST_CASE("report of a realized bamboo") {
  auto t = parse_tree("V(2,V(3),0,V(-2))");
  auto p = realize(t);
  Report r = build_report(p, {});
  REQUIRE(r.components.size() == 1);
  CHECK(r.components[0].canonical == canonical_literal(t));
  CHECK(r.components[0].shape == "bamboo");
  CHECK(r.canonical_family.size() == 2);
  CHECK(r.prop1_alternating == r.alternating);
}

TEST_CASE("report jewel fields") {
  Report r = build_report(parse_pd(fixtures::kBorromean), {});
  auto j = to_json(r);
  CHECK(j["flypes"]["summary"] == "no flypes");
  CHECK(j["alternating"]["prop1"].is_null());
  CHECK(j["min_crossing_number"].is_null());
  CHECK(j["schema_version"] == kReportSchemaVersion);
}

TEST_CASE("exit codes") {
  CHECK(exit_code_for(ErrorKind::NotPrime) == 2);
  CHECK(exit_code_for(ErrorKind::Rule3Violation) == 2);
  CHECK(exit_code_for(ErrorKind::Parse) == 3);
  CHECK(exit_code_for(ErrorKind::MalformedInput) == 3);
  CHECK(exit_code_for(ErrorKind::InternalInconsistency) == 4);
  CHECK(rule_of(ErrorKind::NotPrime) == 1);
  CHECK(rule_of(ErrorKind::Rule3Violation) == 3);
  CHECK(rule_of(ErrorKind::Parse) == 0);
}
