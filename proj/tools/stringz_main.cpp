// Copyright 2026 The stringz authors.
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

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "stringz/homoracle.hpp"
#include "stringz/report.hpp"

namespace {

using namespace stringz;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool use_color() {
  const char* mode = std::getenv("STRINGZ_COLOR");
  std::string m = mode ? mode : "auto";
  if (m == "always") return true;
  if (m == "never") return false;
  return isatty(fileno(stdout));
}

std::string paint(const std::string& s, const char* code) {
  if (!use_color()) return s;
  return std::string("\033[") + code + "m" + s + "\033[0m";
}

Presentation load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

Presentation load_valid_algebra(const std::string& path) {
  Presentation p = load_algebra(path);
  auto bad = string_algebra_violations(p);
  if (!bad.empty())
    throw DomainError("'" + p.name + "' is not a string algebra (" +
                      bad.front().axiom + " at " + bad.front().where + ")");
  return p;
}

BandSystem require_domestic(const Presentation& p) {
  BandSystem bands = enumerate_bands(p);
  if (!bands.domestic)
    throw DomainError("'" + p.name + "' is not domestic");
  return bands;
}

EnumBounds parse_bounds(const std::string& spec) {
  EnumBounds b;
  if (spec.empty()) return b;
  int l, k, pz;
  if (std::sscanf(spec.c_str(), "%d,%d,%d", &l, &k, &pz) != 3 || l < 0 ||
      k < 1 || pz < 0)
    throw CLI::ValidationError("--bounds expects L,K,P");
  b.max_word_len = l;
  b.max_band_power = k;
  b.max_prefix = pz;
  return b;
}

int cmd_validate(const std::string& file, bool json) {
  Presentation p = load_algebra(file);
  auto bad = string_algebra_violations(p);
  if (json) {
    Json out;
    out["algebra"] = p.name;
    out["valid"] = bad.empty();
    Json arr = Json::array();
    for (auto& v : bad) {
      Json j;
      j["axiom"] = v.axiom;
      j["where"] = v.where;
      arr.push_back(j);
    }
    out["violations"] = arr;
    std::cout << out.dump(2) << "\n";
  } else if (bad.empty()) {
    std::cout << p.name << ": " << paint("valid string algebra", "32") << "\n";
  } else {
    std::cout << p.name << ": " << paint("not a string algebra", "31") << "\n";
    for (auto& v : bad)
      std::cout << "  violation: " << v.axiom << " at " << v.where << "\n";
  }
  return kExitOk;
}

int cmd_info(const std::string& file, bool json) {
  Presentation p = load_valid_algebra(file);
  BandSystem bands = enumerate_bands(p);
  if (json) {
    std::optional<int> kg = kg_dimension(p);
    Json out = report_json(p, bands, nullptr, kg, nullptr);
    if (!bands.domestic && bands.witness) {
      out["witness"] = Json::array({print_word(p, bands.witness->band1),
                                    print_word(p, bands.witness->band2)});
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "algebra " << p.name << ": " << p.vertices.size()
            << " vertices, " << p.arrows.size() << " arrows, "
            << p.relations.size() << " relations\n";
  if (bands.domestic) {
    std::cout << "domestic: yes (" << bands.n_domestic
              << " bands up to equivalence)\n";
    for (auto& bc : bands.classes)
      std::cout << "  band " << bc.id << ": " << print_word(p, bc.repr)
                << "  (inverse of " << bc.inverse_id << ")\n";
  } else {
    std::cout << "domestic: no\n";
    if (bands.witness)
      std::cout << "  witness: " << print_word(p, bands.witness->band1)
                << "  and  " << print_word(p, bands.witness->band2)
                << " share their first letter\n";
  }
  return kExitOk;
}

int cmd_bridge_quiver(const std::string& file, bool json, bool dot) {
  Presentation p = load_valid_algebra(file);
  BandSystem bands = require_domestic(p);
  BridgeQuiver q = bridge_quiver(p, bands);
  if (dot) {
    std::cout << bridge_quiver_dot(p, q);
    return kExitOk;
  }
  if (json) {
    std::cout << bridge_quiver_json(p, q).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "bridge quiver of " << p.name << ":\n";
  for (auto& v : q.vertices)
    std::cout << "  vertex " << v.id << ": " << print_word(p, v.repr) << "\n";
  for (auto& e : q.edges)
    std::cout << "  " << print_word(p, q.vertices[e.src].repr) << " --["
              << print_word(p, e.label) << ", "
              << (e.flag == EdgeFlag::Ascending ? "ascending" : "descending")
              << "]--> " << print_word(p, q.vertices[e.dst].repr) << "\n";
  return kExitOk;
}

int cmd_kg_dim(const std::string& file, bool json) {
  Presentation p = load_valid_algebra(file);
  std::optional<int> kg = kg_dimension(p);
  if (json) {
    Json out;
    out["algebra"] = p.name;
    if (kg)
      out["kg_dimension"] = *kg;
    else
      out["kg_dimension"] = "undefined";
    std::cout << out.dump(2) << "\n";
  } else if (kg) {
    std::cout << *kg << "\n";
  } else {
    std::cout << "undefined\n";
  }
  return kExitOk;
}

int cmd_rank(const std::string& file, const std::string& expr, bool json) {
  Presentation p = load_valid_algebra(file);
  BandSystem bands = require_domestic(p);
  BridgeQuiver q = bridge_quiver(p, bands);
  SpectrumPoint pt;
  try {
    pt = parse_point(p, bands, expr);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0, 0);
  }
  RankReport r = cb_rank(p, bands, q, pt);
  if (json) {
    Json out;
    out["expr"] = print_point(p, bands, pt);
    out["kind"] = point_kind_name(pt.kind);
    out["rank"] = r.rank;
    out["trace"] = r.trace;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << r.rank << "\n";
    std::cout << "trace: " << r.trace << "\n";
  }
  return kExitOk;
}

int cmd_points(const std::string& file, const std::string& bounds_spec,
               bool json) {
  Presentation p = load_valid_algebra(file);
  BandSystem bands = require_domestic(p);
  BridgeQuiver q = bridge_quiver(p, bands);
  EnumBounds bounds = parse_bounds(bounds_spec);
  auto pts = enumerate_points(p, bands, q, bounds);
  if (json) {
    std::optional<int> kg = kg_dimension(p);
    Json out = report_json(p, bands, &q, kg, &pts);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  for (auto& [pt, rr] : pts)
    std::cout << rr.rank << "  " << print_point(p, bands, pt) << "\n";
  return kExitOk;
}

int cmd_hom(const std::string& file, const std::string& w1,
            const std::string& w2, bool json) {
  Presentation p = load_valid_algebra(file);
  Word u, v;
  try {
    u = parse_finite_word(p, w1);
    v = parse_finite_word(p, w2);
  } catch (const WordExprError& e) {
    throw ParseError(e.what(), 0, 0);
  }
  if (!is_string(p, u) || !is_string(p, v))
    throw ParseError("arguments must be strings", 0, 0);
  std::vector<GraphMap> maps;
  long count = graph_map_count(p, u, v, &maps);
  long dim = hom_dim_oracle(p, build_module(p, u), build_module(p, v));
  if (json) {
    Json out;
    out["source"] = print_word(p, u);
    out["target"] = print_word(p, v);
    out["graph_maps"] = count;
    out["oracle_dim"] = dim;
    Json arr = Json::array();
    for (auto& g : maps) {
      Json j;
      j["mediator"] = print_word(p, g.mediator);
      j["source_pos"] = g.factor_in_source.pos;
      j["target_pos"] = g.image_in_target.pos;
      j["inverted"] = g.inverted;
      arr.push_back(j);
    }
    out["mediators"] = arr;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "graph maps: " << count << "\n";
  for (auto& g : maps)
    std::cout << "  mediator " << print_word(p, g.mediator) << "  at source "
              << g.factor_in_source.pos << ", target " << g.image_in_target.pos
              << (g.inverted ? " (inverted)" : "") << "\n";
  std::cout << "oracle dimension: " << dim << "\n";
  if (count != dim) {
    std::cerr << "graph-map count and oracle disagree\n";
    return kExitDomain;
  }
  return kExitOk;
}

int cmd_nbhd(const std::string& file, const std::string& center_expr, int n,
             const std::string& cand_expr, bool json) {
  Presentation p = load_valid_algebra(file);
  BandSystem bands = require_domestic(p);
  BridgeQuiver q = bridge_quiver(p, bands);
  SpectrumPoint center, cand;
  try {
    center = parse_point(p, bands, center_expr);
    cand = parse_point(p, bands, cand_expr);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0, 0);
  }
  NbhdResult r;
  try {
    r = in_basic_nbhd(p, bands, q, center, n, cand);
  } catch (const std::invalid_argument& e) {
    throw DomainError(e.what());
  }
  std::string text = r == NbhdResult::Member
                         ? "true"
                         : (r == NbhdResult::NotMember ? "false"
                                                       : "not-covered");
  if (json) {
    Json out;
    out["center"] = print_point(p, bands, center);
    out["index"] = n;
    out["candidate"] = print_point(p, bands, cand);
    out["member"] = text;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
  return kExitOk;
}

int cmd_dual(const std::string& file, const std::string& expr, bool json) {
  Presentation p = load_valid_algebra(file);
  BandSystem bands = require_domestic(p);
  Presentation op = opposite_presentation(p);
  BandSystem op_bands = enumerate_bands(op);
  SpectrumPoint pt;
  try {
    pt = parse_point(p, bands, expr);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0, 0);
  }
  SpectrumPoint d = dual_point(p, bands, op, op_bands, pt);
  if (json) {
    Json out;
    out["point"] = print_point(p, bands, pt);
    out["dual"] = print_point(op, op_bands, d);
    out["opposite"] = serialize_presentation(op);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << print_point(op, op_bands, d) << "\n";
    std::cout << "over the opposite presentation:\n"
              << serialize_presentation(op);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"string algebra spectra: bands, bridge quiver, CB ranks"};
  app.require_subcommand(1);
  bool json = false, dot = false;
  app.add_flag("--json", json, "emit JSON");

  std::string file, expr, expr2, bounds = "", w1, w2;
  int nbhd_index = 1;

  auto* c_validate = app.add_subcommand("validate", "check the axioms");
  c_validate->add_option("algebra", file)->required();

  auto* c_info = app.add_subcommand("info", "bands and domesticity");
  c_info->add_option("algebra", file)->required();

  auto* c_bq = app.add_subcommand("bridge-quiver", "bands and bridges");
  c_bq->add_option("algebra", file)->required();
  c_bq->add_flag("--dot", dot, "emit Graphviz DOT");

  auto* c_kg = app.add_subcommand("kg-dim", "Krull-Gabriel dimension");
  c_kg->add_option("algebra", file)->required();

  auto* c_rank = app.add_subcommand("rank", "CB rank of a point");
  c_rank->add_option("algebra", file)->required();
  c_rank->add_option("point", expr)->required();

  auto* c_points = app.add_subcommand("points", "bounded point listing");
  c_points->add_option("algebra", file)->required();
  c_points->add_option("--bounds", bounds, "L,K,P bounds");

  auto* c_hom = app.add_subcommand("hom", "graph maps and the Hom oracle");
  c_hom->add_option("algebra", file)->required();
  c_hom->add_option("word1", w1)->required();
  c_hom->add_option("word2", w2)->required();

  auto* c_nbhd = app.add_subcommand("nbhd", "basic neighbourhood membership");
  c_nbhd->add_option("algebra", file)->required();
  c_nbhd->add_option("center", expr)->required();
  c_nbhd->add_option("index", nbhd_index)->required();
  c_nbhd->add_option("candidate", expr2)->required();
  c_nbhd->add_option("--nbhd-index", nbhd_index,
                     "override the positional index");

  auto* c_dual = app.add_subcommand("dual", "elementary dual of a point");
  c_dual->add_option("algebra", file)->required();
  c_dual->add_option("point", expr)->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_validate->parsed()) return cmd_validate(file, json);
    if (c_info->parsed()) return cmd_info(file, json);
    if (c_bq->parsed()) return cmd_bridge_quiver(file, json, dot);
    if (c_kg->parsed()) return cmd_kg_dim(file, json);
    if (c_rank->parsed()) return cmd_rank(file, expr, json);
    if (c_points->parsed()) return cmd_points(file, bounds, json);
    if (c_hom->parsed()) return cmd_hom(file, w1, w2, json);
    if (c_nbhd->parsed()) return cmd_nbhd(file, expr, nbhd_index, expr2, json);
    if (c_dual->parsed()) return cmd_dual(file, expr, json);
  } catch (const stringz::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const stringz::WordExprError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
