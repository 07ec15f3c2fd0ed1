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

#include "knotdec/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "knotdec/bs_tree.hpp"
#include "knotdec/flype.hpp"
#include "knotdec/haseman.hpp"

namespace knotdec {

namespace {

std::vector<std::string> door_literals(const CircleFamily& f) {
  std::vector<std::string> out;
  for (const auto& c : f.circles) out.push_back(format_walk(c.walk()));
  return out;
}

// Family identity independent of construction order.
std::set<std::string> family_key(const CircleFamily& f) {
  std::set<std::string> key;
  for (const auto& c : f.circles) {
    std::string bits;
    boost::to_string(c.inside, bits);
    key.insert(bits);
  }
  return key;
}

bool mixed_signs(const std::vector<int>& w) {
  bool pos = false, neg = false;
  for (int a : w) {
    pos = pos || a > 0;
    neg = neg || a < 0;
  }
  return pos && neg;
}

std::string join(const std::vector<int>& xs, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

}  // namespace

bool Report::valid() const {
  return std::all_of(rules.begin(), rules.end(), [](const RuleStatus& r) { return r.ok; });
}

int Report::accounted_crossings() const {
  int total = 0;
  for (const auto& piece : pieces) {
    if (piece.kind == PieceKind::Jewel) {
      total += piece.crossings;
    } else {
      for (int a : piece.weights) total += std::abs(a);
    }
  }
  return total;
}

Report build_report(const LinkProjection& p, const ReportOptions& opts) {
  Report r;
  r.source = opts.source;
  r.pd = serialize_pd(p);
  r.crossings = p.crossing_count();

  Decomposition dec = decompose(p);
  r.rules.push_back({1, true, "connected and prime"});
  r.rules.push_back({2, true, "all family circles incompressible"});
  r.rules.push_back({3, true, "twist signs consistent along each band"});

  r.maximal_family = door_literals(dec.cm);
  r.canonical_family = door_literals(dec.ccan);

  std::vector<int> mixed;
  for (int i = 0; i < static_cast<int>(dec.pieces.size()); ++i) {
    const Piece& piece = dec.pieces[i];
    PieceRow row{i, piece.kind, piece.v, static_cast<int>(piece.crossings.count()), piece.circles, {}};
    if (piece.kind == PieceKind::TwistedBand) {
      row.weights = piece.weights;
      if (mixed_signs(piece.weights)) mixed.push_back(i);
    }
    r.pieces.push_back(std::move(row));
  }
  if (mixed.empty()) {
    r.rules.push_back({4, true, "intermediate weights share one sign"});
  } else {
    r.rules.push_back({4, false, "mixed-sign intermediate weights in pieces " + join(mixed)});
  }

  for (const auto& comp : dec.components) {
    ComponentRow row;
    row.arborescent = comp.arborescent;
    row.pieces = comp.pieces;
    if (comp.arborescent) {
      PlanarTree t = encode(p, dec, {comp.pieces.front(), 0});
      row.tree = format_tree(t);
      row.canonical = canonical_literal(t);
      row.shape = std::string(to_string(classify_shape(t)));
      AlternatingVerdict verdict = is_alternating_tree(abstract_tree(t));
      row.prop1_alternating = verdict.alternating;
      row.signs = verdict.signs;
    }
    r.components.push_back(std::move(row));
  }

  for (const auto& orbit : flype_orbits(dec)) r.orbits.push_back({orbit.piece, orbit.crossings});

  r.alternating = is_alternating(p);
  if (r.components.size() == 1 && r.components[0].arborescent) {
    r.prop1_alternating = r.components[0].prop1_alternating;
    if (*r.prop1_alternating) {
      PlanarTree t = encode(p, dec, {r.components[0].pieces.front(), 0});
      r.min_crossing_number = min_crossing_number(abstract_tree(t));
    }
  }

  if (opts.seeds > 0) {
    std::set<std::set<std::string>> seen{family_key(dec.cm)};
    for (int s = 1; s <= opts.seeds; ++s) {
      CircleFamily cm = minimize(p, maximal_family(p, s), s);
      seen.insert(family_key(cm));
    }
    r.seed_check = SeedCheck{opts.seeds, static_cast<int>(seen.size())};
  }

  if (r.accounted_crossings() != r.crossings) {
    throw Error(ErrorKind::InternalInconsistency,
                "report accounts for " + std::to_string(r.accounted_crossings()) + " of " +
                    std::to_string(r.crossings) + " crossings");
  }
  return r;
}

nlohmann::json to_json(const Report& r) {
  using nlohmann::json;
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["input"] = {{"source", r.source}, {"pd", r.pd}, {"crossings", r.crossings}};
  json rules = json::array();
  for (const auto& s : r.rules) rules.push_back({{"rule", s.rule}, {"ok", s.ok}, {"detail", s.detail}});
  j["validation"] = {{"valid", r.valid()}, {"rules", rules}};
  j["families"] = {{"maximal", r.maximal_family}, {"canonical", r.canonical_family}};
  json pieces = json::array();
  for (const auto& p : r.pieces) {
    json row = {{"index", p.index},         {"kind", std::string(to_string(p.kind))},
                {"v", p.v},                 {"crossings", p.crossings},
                {"circles", p.circles}};
    if (p.kind == PieceKind::TwistedBand) row["weights"] = p.weights;
    pieces.push_back(std::move(row));
  }
  j["pieces"] = pieces;
  json comps = json::array();
  for (const auto& c : r.components) {
    json row = {{"arborescent", c.arborescent}, {"pieces", c.pieces}};
    if (c.arborescent) {
      row["tree"] = {{"literal", c.tree},
                     {"canonical", c.canonical},
                     {"shape", c.shape},
                     {"alternating", c.prop1_alternating},
                     {"signs", c.signs}};
    }
    comps.push_back(std::move(row));
  }
  j["components"] = comps;
  json orbits = json::array();
  for (const auto& o : r.orbits) {
    orbits.push_back({{"piece", o.piece}, {"size", o.crossings.size()}, {"crossings", o.crossings}});
  }
  j["flypes"] = {{"summary", r.orbits.empty() ? "no flypes" : std::to_string(r.orbits.size()) + " orbit(s)"},
                 {"orbits", orbits}};
  json alt = {{"projection", r.alternating}};
  alt["prop1"] = r.prop1_alternating ? json(*r.prop1_alternating) : json(nullptr);
  j["alternating"] = alt;
  j["min_crossing_number"] = r.min_crossing_number ? json(*r.min_crossing_number) : json(nullptr);
  if (r.seed_check) {
    j["uniqueness"] = {{"seeds", r.seed_check->seeds},
                       {"distinct_families", r.seed_check->distinct},
                       {"consistent", r.seed_check->distinct == 1}};
  }
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "source: " << (r.source.empty() ? "-" : r.source) << "\n";
  os << "pd: " << r.pd << "\n";
  os << "crossings: " << r.crossings << "\n";
  for (const auto& s : r.rules) {
    os << "rule " << s.rule << ": " << (s.ok ? "ok" : "VIOLATED") << " (" << s.detail << ")\n";
  }
  os << "maximal family: " << r.maximal_family.size() << "\n";
  for (const auto& c : r.maximal_family) os << "  " << c << "\n";
  os << "canonical family: " << r.canonical_family.size() << "\n";
  for (const auto& c : r.canonical_family) os << "  " << c << "\n";
  os << "pieces:\n";
  for (const auto& p : r.pieces) {
    os << "  " << p.index << " " << to_string(p.kind) << " v=" << p.v << " crossings=" << p.crossings
       << " circles=[" << join(p.circles) << "]";
    if (p.kind == PieceKind::TwistedBand) os << " weights=(" << join(p.weights) << ")";
    os << "\n";
  }
  os << "components:\n";
  for (const auto& c : r.components) {
    os << "  pieces=[" << join(c.pieces) << "] " << (c.arborescent ? "arborescent" : "polyhedral") << "\n";
    if (c.arborescent) {
      os << "    tree: " << c.tree << "\n";
      os << "    canonical: " << c.canonical << "\n";
      os << "    shape: " << c.shape << "\n";
      os << "    tree alternating: " << (c.prop1_alternating ? "true" : "false") << "\n";
    }
  }
  if (r.orbits.empty()) {
    os << "flypes: no flypes\n";
  } else {
    os << "flype orbits:\n";
    for (const auto& o : r.orbits) {
      os << "  piece " << o.piece << " size " << o.crossings.size() << ": " << join(o.crossings, " ") << "\n";
    }
  }
  os << "alternating: " << (r.alternating ? "true" : "false") << "\n";
  if (r.prop1_alternating) os << "tree alternating: " << (*r.prop1_alternating ? "true" : "false") << "\n";
  if (r.min_crossing_number) os << "min crossing number: " << *r.min_crossing_number << "\n";
  if (r.seed_check) {
    os << "uniqueness: " << r.seed_check->distinct << " distinct famil" << (r.seed_check->distinct == 1 ? "y" : "ies")
       << " over " << r.seed_check->seeds << " seeds\n";
  }
  return os.str();
}

int rule_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Disconnected:
    case ErrorKind::CrossingFree:
    case ErrorKind::NotPrime:
      return 1;
    case ErrorKind::Rule3Violation:
      return 3;
    case ErrorKind::InvalidWeights:
      return 4;
    default:
      return 0;
  }
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput:
    case ErrorKind::Parse:
    case ErrorKind::NonPlanar:
      return 3;
    case ErrorKind::InternalInconsistency:
    case ErrorKind::NotConway:
    case ErrorKind::NotDisjoint:
    case ErrorKind::Unclassifiable:
      return 4;
    default:
      return 2;
  }
}

}  // namespace knotdec
