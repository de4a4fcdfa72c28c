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
//
// Acceptance suite: every golden value below is checked exactly, one
// criterion per line.  Exit status is nonzero when any criterion fails.

#include <functional>
#include <iostream>
#include <random>

#include "stringz/homoracle.hpp"
#include "stringz/report.hpp"
#include "test_util.hpp"

using namespace stringz;
using stringz::testing::load_preset;
using stringz::testing::random_word;

namespace {

struct Ctx {
  Presentation p;
  BandSystem bands;
  BridgeQuiver q;
};

Ctx ctx(const std::string& name) {
  Ctx c{load_preset(name), {}, {}};
  c.bands = enumerate_bands(c.p);
  if (c.bands.domestic) c.q = bridge_quiver(c.p, c.bands);
  return c;
}

int rank_of(const Ctx& c, const std::string& expr) {
  return cb_rank(c.p, c.bands, c.q, parse_point(c.p, c.bands, expr)).rank;
}

std::set<std::string> edge_set(const Ctx& c) {
  std::set<std::string> out;
  for (auto& e : c.q.edges)
    out.insert(print_word(c.p, c.q.vertices[e.src].repr) + " | " +
               print_word(c.p, e.label) + " | " +
               print_word(c.p, c.q.vertices[e.dst].repr));
  return out;
}

int failures = 0;

void criterion(int number, const std::string& label,
               const std::function<bool()>& body) {
  bool ok = false;
  std::string err;
  try {
    ok = body();
  } catch (const std::exception& e) {
    err = e.what();
  }
  std::cout << (ok ? "PASS" : "FAIL") << "  " << number << ". " << label;
  if (!ok && !err.empty()) std::cout << "  (" << err << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

}  // namespace

int main() {
  // 1. band census
  criterion(1, "band census", [] {
    bool ok = true;
    std::map<std::string, int> census = {{"x1", 1},   {"x3", 1}, {"lam2", 2},
                                         {"lam3", 3}, {"x4", 3}, {"x5", 4}};
    for (auto& [name, n] : census) {
      BandSystem b = enumerate_bands(load_preset(name));
      ok = ok && b.domestic && b.n_domestic == n;
    }
    Presentation gp = load_preset("gp23");
    BandSystem b = enumerate_bands(gp);
    ok = ok && !b.domestic && b.witness.has_value();
    if (ok) {
      ok = ok && !(b.witness->band1 == b.witness->band2);
      ok = ok &&
           b.witness->band1.letters.front() == b.witness->band2.letters.front();
      Letter first = b.witness->band1.letters.front();
      ok = ok && !first.inv && gp.arrows[first.arrow].name == "a";
    }
    return ok;
  });

  // 2. bridge quivers
  criterion(2, "bridge quivers", [] {
    Ctx x1 = ctx("x1");
    bool ok = edge_set(x1) ==
              std::set<std::string>{"a g a- b- | a g a- | b a g- a-",
                                    "a g a- b- | a g- a- | b a g- a-"};
    Ctx lam2 = ctx("lam2");
    ok = ok && edge_set(lam2) ==
                   std::set<std::string>{"e d- | e g | a b-",
                                         "b a- | g- e- | d e-"};
    Ctx lam3 = ctx("lam3");
    ok = ok && edge_set(lam3) ==
                   std::set<std::string>{
                       "b1 a1- | g1- a2- | b2 a2-", "b2 a2- | g2- a3- | b3 a3-",
                       "a2 b2- | a2 g1 | a1 b1-", "a3 b3- | a3 g2 | a2 b2-"};
    Ctx x4 = ctx("x4");
    ok = ok && edge_set(x4) ==
                   std::set<std::string>{
                       "a1 b1- | g1- b2- | a2 b2-", "a2 b2- | a2 g2 | a3 b3-",
                       "b2 a2- | b2 g1 | b1 a1-", "b3 a3- | g2- a2- | b2 a2-"};
    Ctx x5 = ctx("x5");
    ok = ok && edge_set(x5) ==
                   std::set<std::string>{
                       "a2 b2- | a2 g1 | b1 a1-", "b1 a1- | b1 g0 | b0 a0-",
                       "a2 b2- | g2- a3- | b3 a3-", "a1 b1- | g1- a2- | b2 a2-",
                       "a0 b0- | g0- b1- | a1 b1-", "a3 b3- | a3 g2 | b2 a2-"};
    return ok;
  });

  // 3. indents
  criterion(3, "X1 indents (right 1, left 0)", [] {
    Ctx c = ctx("x1");
    return indent(c.q, 0, IndentFilter::All) == 1 &&
           indent(c.q, 1, IndentFilter::All) == 0;
  });

  // 4. ranks
  criterion(4, "point ranks", [] {
    Ctx lam2 = ctx("lam2");
    bool ok = rank_of(lam2, "string:[ (e d-)^inf ]") == 2 &&
              rank_of(lam2, "string:[ (a b-)^inf ]") == 1 &&
              rank_of(lam2, "string:[ inf^(e d-) e g (a b-)^inf ]") == 2;
    Ctx lam3 = ctx("lam3");
    ok = ok && rank_of(lam3, "prufer:[b1 a1-]@s") == 1 &&
         rank_of(lam3, "prufer:[b2 a2-]@s") == 2 &&
         rank_of(lam3, "prufer:[b3 a3-]@s") == 3 &&
         rank_of(lam3, "adic:[b1 a1-]@s") == 3 &&
         rank_of(lam3, "adic:[b2 a2-]@s") == 2 &&
         rank_of(lam3, "adic:[b3 a3-]@s") == 1 &&
         rank_of(lam3, "generic:[b2 a2-]") == 4;
    Ctx x4 = ctx("x4");
    for (const char* b : {"a1 b1-", "a2 b2-", "a3 b3-"})
      ok = ok && rank_of(x4, std::string("generic:[") + b + "]") == 4;
    Ctx x5 = ctx("x5");
    ok = ok && rank_of(x5, "generic:[a2 b2-]") == 4 &&
         rank_of(x5, "generic:[a3 b3-]") == 3;
    return ok;
  });

  // 5. KG dimension
  criterion(5, "KG dimension census", [] {
    std::map<std::string, int> expect = {{"kron", 2}, {"lam2", 3},
                                         {"lam3", 4}, {"x4", 4},
                                         {"x5", 4},   {"a2", 0}};
    bool ok = true;
    for (auto& [name, v] : expect) {
      auto kg = kg_dimension(load_preset(name));
      ok = ok && kg.has_value() && *kg == v;
    }
    ok = ok && !kg_dimension(load_preset("gp23")).has_value();
    return ok;
  });

  // 6. string m-dimension
  criterion(6, "string m-dimension", [] {
    Ctx k = ctx("kron");
    Ctx x3 = ctx("x3");
    return mdim_string(k.p, k.bands, k.q,
                       parse_word_expr(k.p, "(a b-)^inf")) == 1 &&
           mdim_string(x3.p, x3.bands, x3.q,
                       parse_word_expr(x3.p, "(b a-)^inf")) == 2;
  });

  // 7. expanding/contracting
  criterion(7, "expanding and contracting ends", [] {
    Presentation p = load_preset("x3");
    auto one = classify_ends(p, parse_word_expr(p, "b (a b-)^inf"));
    auto two = classify_ends(p, parse_word_expr(p, "inf^(b a-) b (a b-)^inf"));
    return one.right == EndKind::Expanding && !one.left.has_value() &&
           two.right == EndKind::Expanding && two.left == EndKind::Contracting;
  });

  // 8. Hom oracle equivalence
  criterion(8, "graph maps equal the Hom oracle (>=200 pairs each)", [] {
    std::mt19937 rng(20260809);
    for (const char* name : {"kron", "x1", "x3", "lam2"}) {
      Presentation p = load_preset(name);
      int checked = 0;
      for (int i = 0; i < 205; ++i) {
        Word u = random_word(p, rng, 8);
        Word v = random_word(p, rng, 8);
        long c = graph_map_count(p, u, v);
        long d = hom_dim_oracle(p, build_module(p, u), build_module(p, v));
        if (c != d) return false;
        ++checked;
      }
      if (checked < 200) return false;
    }
    return true;
  });

  // 9. duality
  criterion(9, "elementary duality (involution, rank, kind swap)", [] {
    for (const char* name : {"lam2", "lam3"}) {
      Ctx c = ctx(name);
      Presentation op = opposite_presentation(c.p);
      BandSystem opb = enumerate_bands(op);
      BridgeQuiver opq = bridge_quiver(op, opb);
      auto pts = enumerate_points(c.p, c.bands, c.q, {4, 2, 3});
      int checked = 0;
      for (auto& [pt, rr] : pts) {
        SpectrumPoint d = dual_point(c.p, c.bands, op, opb, pt);
        SpectrumPoint back = dual_point(op, opb, c.p, c.bands, d);
        if (!(back == pt)) return false;
        if (cb_rank(op, opb, opq, d).rank != rr.rank) return false;
        if (pt.kind == PointKind::Prufer && d.kind != PointKind::Adic)
          return false;
        if (pt.kind == PointKind::Adic && d.kind != PointKind::Prufer)
          return false;
        ++checked;
      }
      if (checked < 50) return false;
    }
    return true;
  });

  // 10. structural invariants
  criterion(10, "structural invariants", [] {
    for (const char* name :
         {"kron", "lam2", "lam3", "x1", "x3", "x4", "x5"}) {
      Ctx c = ctx(name);
      // acyclic (longest_path throws on a cycle)
      (void)longest_path(c.q);
      // inversion anti-automorphism of edges
      for (auto& e : c.q.edges) {
        bool found = false;
        for (auto& f : c.q.edges)
          if (f.src == c.bands.classes[e.dst].inverse_id &&
              f.dst == c.bands.classes[e.src].inverse_id &&
              ((e.label.empty() && f.label.empty()) ||
               f.label == invert_word(e.label)))
            found = true;
        if (!found) return false;
      }
      // enumerated max rank equals the KG dimension
      auto pts = enumerate_points(c.p, c.bands, c.q, {4, 2, 3});
      int maxrank = 0;
      for (auto& [pt, rr] : pts) maxrank = std::max(maxrank, rr.rank);
      auto kg = kg_dimension(c.p);
      if (!kg || maxrank != *kg) return false;
    }
    // decreasing neighbourhood bases
    for (const char* name : {"lam2", "x3"}) {
      Ctx c = ctx(name);
      auto pts = enumerate_points(c.p, c.bands, c.q, {3, 3, 2});
      for (auto& [center, rc] : pts) {
        if (center.kind == PointKind::FiniteString ||
            center.kind == PointKind::FiniteBand)
          continue;
        for (auto& [cand, rr] : pts) {
          for (int n = 1; n <= 2; ++n) {
            if (in_basic_nbhd(c.p, c.bands, c.q, center, n + 1, cand) ==
                    NbhdResult::Member &&
                in_basic_nbhd(c.p, c.bands, c.q, center, n, cand) !=
                    NbhdResult::Member)
              return false;
          }
        }
      }
    }
    return true;
  });

  std::cout << (failures ? "ACCEPTANCE: FAILED" : "ACCEPTANCE: OK") << " ("
            << (10 - failures) << "/10)\n";
  return failures == 0 ? 0 : 1;
}
