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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "knotdec/decomposition.hpp"
#include "knotdec/error.hpp"
#include "knotdec/projection.hpp"

namespace knotdec {

inline constexpr int kReportSchemaVersion = 1;

struct RuleStatus {
  int rule = 0;
  bool ok = true;
  std::string detail;
};

struct PieceRow {
  int index = 0;
  PieceKind kind = PieceKind::Jewel;
  int v = 0;
  int crossings = 0;
  std::vector<int> circles;
  std::vector<int> weights;
};

struct ComponentRow {
  bool arborescent = false;
  std::vector<int> pieces;
  // Arborescent components only.
  std::string tree;
  std::string canonical;
  std::string shape;
  bool prop1_alternating = false;
  std::vector<int> signs;
};

struct OrbitRow {
  int piece = 0;
  std::vector<int> crossings;
};

struct SeedCheck {
  int seeds = 0;
  int distinct = 0;
};

struct Report {
  std::string source;
  std::string pd;
  int crossings = 0;
  std::vector<RuleStatus> rules;
  std::vector<std::string> maximal_family;
  std::vector<std::string> canonical_family;
  std::vector<PieceRow> pieces;
  std::vector<ComponentRow> components;
  std::vector<OrbitRow> orbits;
  bool alternating = false;
  // Set when the whole projection is one arborescent component.
  std::optional<bool> prop1_alternating;
  std::optional<int> min_crossing_number;
  std::optional<SeedCheck> seed_check;

  bool valid() const;
  // Weight magnitudes plus jewel crossings, which must equal `crossings`.
  int accounted_crossings() const;
};

struct ReportOptions {
  std::string source;
  int seeds = 0;  // extra randomized runs for the uniqueness self-check
};

// Runs the pipeline. Rule 1-3 failures propagate as Error; a Rule 4
// violation is recorded in the report. Throws InternalInconsistency when the
// report does not add up.
Report build_report(const LinkProjection& p, const ReportOptions& opts);

nlohmann::json to_json(const Report& r);
std::string to_text(const Report& r);

// Process exit code for an error kind: 2 validation, 3 parse, 4 internal.
int exit_code_for(ErrorKind kind);
// Rule named by a validation error, or 0.
int rule_of(ErrorKind kind);

}  // namespace knotdec
