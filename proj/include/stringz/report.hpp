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

#pragma once

#include <json.hpp>

#include "stringz/spectrum.hpp"

namespace stringz {

using Json = nlohmann::ordered_json;

inline Json bands_json(const Presentation& p, const BandSystem& bands) {
  Json arr = Json::array();
  for (auto& bc : bands.classes) {
    Json b;
    b["repr"] = print_word(p, bc.repr);
    b["inverse_of"] = bc.inverse_id;
    arr.push_back(b);
  }
  return arr;
}

inline Json bridge_quiver_json(const Presentation& p, const BridgeQuiver& q) {
  Json out;
  Json verts = Json::array();
  for (auto& v : q.vertices) verts.push_back(print_word(p, v.repr));
  out["vertices"] = verts;
  Json edges = Json::array();
  for (auto& e : q.edges) {
    Json j;
    j["src"] = print_word(p, q.vertices[e.src].repr);
    j["dst"] = print_word(p, q.vertices[e.dst].repr);
    j["word"] = print_word(p, e.label);
    j["flag"] = e.flag == EdgeFlag::Ascending ? "ascending" : "descending";
    edges.push_back(j);
  }
  out["edges"] = edges;
  return out;
}

/// The full analysis report; byte-stable for a fixed input.
inline Json report_json(const Presentation& p, const BandSystem& bands,
                        const BridgeQuiver* q, std::optional<int> kg,
                        const std::vector<std::pair<SpectrumPoint, RankReport>>*
                            points) {
  Json out;
  out["algebra"] = p.name;
  out["domestic"] = bands.domestic;
  if (bands.domestic)
    out["n_domestic"] = bands.n_domestic;
  else
    out["n_domestic"] = nullptr;
  out["bands"] = bands_json(p, bands);
  if (q) out["bridge_quiver"] = bridge_quiver_json(p, *q);
  if (kg)
    out["kg_dimension"] = *kg;
  else
    out["kg_dimension"] = "undefined";
  if (points) {
    Json arr = Json::array();
    for (auto& [pt, rr] : *points) {
      Json j;
      j["expr"] = print_point(p, bands, pt);
      j["kind"] = point_kind_name(pt.kind);
      j["rank"] = rr.rank;
      j["trace"] = rr.trace;
      arr.push_back(j);
    }
    out["points"] = arr;
  }
  return out;
}

/// Graphviz DOT view of the bridge quiver: solid edges ascend, dashed
/// edges descend.
inline std::string bridge_quiver_dot(const Presentation& p,
                                     const BridgeQuiver& q) {
  std::ostringstream out;
  out << "digraph bridge_quiver {\n";
  out << "  rankdir=LR;\n";
  for (auto& v : q.vertices)
    out << "  v" << v.id << " [label=\"" << print_word(p, v.repr) << "\"];\n";
  for (auto& e : q.edges) {
    out << "  v" << e.src << " -> v" << e.dst << " [label=\""
        << print_word(p, e.label) << "\", style="
        << (e.flag == EdgeFlag::Ascending ? "solid" : "dashed") << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace stringz
