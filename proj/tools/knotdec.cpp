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

// knotdec command-line driver.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "knotdec/bs_tree.hpp"
#include "knotdec/decomposition.hpp"
#include "knotdec/error.hpp"
#include "knotdec/flype.hpp"
#include "knotdec/projection.hpp"
#include "knotdec/report.hpp"

namespace fs = std::filesystem;
using namespace knotdec;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::MalformedInput, "cannot write '" + path + "'");
  out << text;
}

int report_error(const std::string& where, const Error& e) {
  std::cerr << "error: " << (where.empty() ? "" : where + ": ") << to_string(e.kind()) << ": " << e.what()
            << "\n";
  if (int rule = rule_of(e.kind())) std::cerr << "violated: Rule " << rule << "\n";
  return exit_code_for(e.kind());
}

nlohmann::json error_json(const std::string& source, const Error& e) {
  nlohmann::json j = {{"source", source},
                      {"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
  if (int rule = rule_of(e.kind())) j["error"]["rule"] = rule;
  return j;
}

std::string render_trees(const LinkProjection& p, const Decomposition& dec) {
  std::string out;
  for (const auto& comp : dec.components) {
    if (!comp.arborescent) continue;
    out += to_dot(canonical_tree(encode(p, dec, {comp.pieces.front(), 0})));
  }
  if (out.empty()) out = "graph tree {\n}\n";
  return out;
}

struct DecomposeArgs {
  std::string file;
  std::string format = "json";
  int seeds = 0;
  std::string batch;
  std::string render;
  std::string output;
};

std::string emit(const Report& r, const std::string& format, bool compact) {
  if (format == "text") return to_text(r);
  return compact ? to_json(r).dump() + "\n" : to_json(r).dump(2) + "\n";
}

// Returns the exit code for one projection; appends formatted output.
int decompose_one(const std::string& path, const DecomposeArgs& args, bool batch, std::string& out) {
  try {
    LinkProjection p = parse_pd(read_file(path));
    Report r = build_report(p, ReportOptions{path, args.seeds});
    out += emit(r, args.format, batch);
    if (!args.render.empty() && !batch) {
      write_file(args.render, render_trees(p, decompose(p)));
    }
    for (const auto& rule : r.rules) {
      if (!rule.ok) {
        std::cerr << "violated: Rule " << rule.rule << " (" << rule.detail << ")\n";
        return 2;
      }
    }
    if (r.seed_check && r.seed_check->distinct != 1) {
      std::cerr << "error: " << path << ": seeded runs produced " << r.seed_check->distinct << " families\n";
      return 4;
    }
    return 0;
  } catch (const Error& e) {
    if (batch) {
      out += args.format == "text" ? "source: " + path + "\nerror: " + std::string(to_string(e.kind())) + ": " +
                                         e.what() + "\n"
                                   : error_json(path, e).dump() + "\n";
    }
    return report_error(path, e);
  }
}

int cmd_decompose(const DecomposeArgs& args) {
  std::string out;
  int code = 0;
  if (!args.batch.empty()) {
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(args.batch)) {
      if (entry.is_regular_file() && entry.path().extension() == ".pd") files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      std::string one;
      code = std::max(code, decompose_one(f, args, true, one));
      out += one;
      if (args.format == "text") out += "\n";
    }
  } else {
    if (args.file.empty()) {
      std::cerr << "error: decompose needs FILE or --batch DIR\n";
      return 3;
    }
    code = decompose_one(args.file, args, false, out);
  }
  if (args.output.empty()) {
    std::cout << out;
  } else {
    write_file(args.output, out);
  }
  return code;
}

std::string signs_text(const std::vector<int>& signs) {
  std::string s;
  for (std::size_t i = 0; i < signs.size(); ++i) s += std::string(i ? "," : "") + (signs[i] > 0 ? "+" : "-");
  return s;
}

std::string abstract_text(const AbstractTree& a) {
  std::ostringstream os;
  os << "weights:";
  for (int w : a.weight) os << ' ' << w;
  os << "\nedges:";
  for (auto [x, y] : a.edges) os << ' ' << x + 1 << '-' << y + 1;
  os << "\nfree:";
  for (int f : a.free_edges) os << ' ' << f;
  os << "\n";
  return os.str();
}

int cmd_tree(const std::string& literal, const std::vector<std::string>& action, int budget) {
  try {
    if (action.empty()) throw Error(ErrorKind::Parse, "missing tree action");
    PlanarTree t = parse_tree(literal);
    const std::string& what = action[0];
    std::string rest;
    for (std::size_t i = 1; i < action.size(); ++i) rest += (i > 1 ? " " : "") + action[i];
    if (what == "canonical") {
      std::cout << canonical_literal(t) << "\n";
    } else if (what == "abstract") {
      std::cout << abstract_text(abstract_tree(t));
    } else if (what == "alternating") {
      AbstractTree a = abstract_tree(t);
      AlternatingVerdict v = is_alternating_tree(a);
      if (v.alternating) {
        std::cout << "true, signs: " << signs_text(v.signs) << "\n";
        if (t.free_edge_count() == 0) std::cout << "min crossing number: " << min_crossing_number(a) << "\n";
      } else {
        std::cout << "false\n";
      }
    } else if (what == "realize") {
      std::cout << serialize_pd(realize(t)) << "\n";
    } else if (what == "flype") {
      FlypeMove m = parse_move("flype " + rest);
      std::cout << format_tree(apply_flype(t, m)) << "\n";
    } else if (what == "old-flype") {
      int v = 0;
      try {
        v = std::stoi(rest);
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::Parse, "old-flype needs a 1-based vertex number, got '" + rest + "'");
      }
      std::cout << format_tree(old_flype(t, v - 1)) << "\n";
    } else if (what == "class") {
      for (const auto& member : flype_class(t, budget)) std::cout << format_tree(member) << "\n";
    } else if (what == "render") {
      std::cout << to_dot(t);
    } else {
      throw Error(ErrorKind::Parse, "unknown tree action '" + what + "'");
    }
    return 0;
  } catch (const Error& e) {
    return report_error("", e);
  }
}

int cmd_render(const std::string& input, bool canonical) {
  try {
    if (fs::is_regular_file(input)) {
      std::string text = read_file(input);
      auto first = text.find_first_not_of(" \t\r\n");
      if (first != std::string::npos && text[first] == '{') {
        // A saved JSON report: render the canonical trees it lists.
        nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
        if (j.is_discarded()) throw Error(ErrorKind::Parse, "'" + input + "' is not valid JSON");
        std::string out;
        for (const auto& comp : j.value("components", nlohmann::json::array())) {
          if (comp.value("arborescent", false)) out += to_dot(parse_tree(comp["tree"]["canonical"].get<std::string>()));
        }
        std::cout << (out.empty() ? "graph tree {\n}\n" : out);
        return 0;
      }
      LinkProjection p = parse_pd(text);
      std::cout << render_trees(p, decompose(p));
      return 0;
    }
    PlanarTree t = parse_tree(input);
    std::cout << to_dot(canonical ? canonical_tree(t) : t);
    return 0;
  } catch (const Error& e) {
    return report_error(input, e);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotdec: Conway decompositions, planar trees and flypes of link projections"};
  app.require_subcommand(1);

  DecomposeArgs dargs;
  auto* dec = app.add_subcommand("decompose", "Decompose a PD projection and print a report");
  dec->add_option("file", dargs.file, "PD file");
  dec->add_option("--format", dargs.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  dec->add_option("--seeds", dargs.seeds, "Extra randomized runs for the uniqueness self-check")
      ->check(CLI::NonNegativeNumber);
  dec->add_option("--batch", dargs.batch, "Decompose every .pd file in a directory")->check(CLI::ExistingDirectory);
  dec->add_option("--render", dargs.render, "Write DOT of the arborescent trees");
  dec->add_option("-o,--output", dargs.output, "Write the report to a file");

  std::string literal;
  std::vector<std::string> action;
  int budget = 10000;
  auto* tree = app.add_subcommand("tree", "Operate on a planar tree literal");
  tree->add_option("literal", literal, "Tree literal, e.g. V(2,V(3),0)")->required();
  tree->add_option("action", action, "canonical | abstract | alternating | realize | flype MOVE | old-flype V | class")
      ->required();
  tree->add_option("--budget", budget, "Class size limit")->check(CLI::PositiveNumber);

  std::string render_input;
  bool canonical = false;
  auto* render = app.add_subcommand("render", "DOT rendering of a tree literal, PD file or JSON report");
  render->add_option("input", render_input, "Tree literal or file")->required();
  render->add_flag("--canonical", canonical, "Render the canonical form of a tree literal");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (*dec) return cmd_decompose(dargs);
    if (*tree) return cmd_tree(literal, action, budget);
    if (*render) return cmd_render(render_input, canonical);
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
