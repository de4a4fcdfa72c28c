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

#include <gtest/gtest.h>

#include <random>

#include "stringz/bridge.hpp"
#include "test_util.hpp"

using namespace stringz;
using stringz::testing::load_preset;

namespace {

struct Ctx {
  Presentation p;
  BandSystem bands;
  BridgeQuiver q;
};

Ctx ctx(const std::string& name) {
  Ctx c{load_preset(name), {}, {}};
  c.bands = enumerate_bands(c.p);
  c.q = bridge_quiver(c.p, c.bands);
  return c;
}

std::set<std::string> edge_set(const Ctx& c) {
  std::set<std::string> out;
  for (auto& e : c.q.edges)
    out.insert(print_word(c.p, c.q.vertices[e.src].repr) + " --" +
               print_word(c.p, e.label) + "--> " +
               print_word(c.p, c.q.vertices[e.dst].repr));
  return out;
}

int class_of(const Ctx& c, const std::string& word) {
  auto r = canonical_band(c.p, c.bands, parse_finite_word(c.p, word));
  EXPECT_TRUE(r.has_value()) << word;
  return r->class_id;
}

}  // namespace

TEST(BandFree, KronExcludesEveryRotation) {
  Ctx c = ctx("kron");
  auto bf = band_free_strings(c.p, c.bands);
  // 4 empty words (two per vertex) + the 4 single letters
  EXPECT_EQ(bf.size(), 8u);
  for (auto& w : bf) EXPECT_LE(w.size(), 1u);
}

TEST(BandFree, A2KeepsAllStrings) {
  Ctx c = ctx("a2");
  auto bf = band_free_strings(c.p, c.bands);
  // no bands at all: every string qualifies (4 empties, a, a-)
  EXPECT_EQ(bf.size(), 6u);
}

TEST(BandFree, AgreesWithExhaustiveSearch) {
  for (const char* name : {"x1", "lam2", "x3"}) {
    Ctx c = ctx(name);
    auto bf = band_free_strings(c.p, c.bands);
    std::set<std::string> got;
    for (auto& w : bf)
      if (!w.empty()) got.insert(print_word(c.p, w));
    // brute force: every string up to the automaton-state bound
    std::set<std::string> want;
    size_t cap = LetterAutomaton::build(c.p).states.size() + 1;
    std::function<void(Word&)> rec = [&](Word& w) {
      if (!contains_band_rotation(c.bands, w)) {
        want.insert(print_word(c.p, w));
        if (w.size() < cap) {
          for (int a = 0; a < (int)c.p.arrows.size(); ++a)
            for (bool inv : {false, true}) {
              w.letters.push_back({a, inv});
              if (is_string(c.p, w)) rec(w);
              w.letters.pop_back();
            }
        }
      }
    };
    for (int a = 0; a < (int)c.p.arrows.size(); ++a)
      for (bool inv : {false, true}) {
        Word w;
        w.letters.push_back({a, inv});
        if (is_string(c.p, w)) rec(w);
      }
    EXPECT_EQ(got, want) << name;
  }
}

TEST(Bridges, X1PairToTheInverse) {
  Ctx c = ctx("x1");
  auto bf = band_free_strings(c.p, c.bands);
  auto us = bridges(c.p, c.bands, bf, 0, 1);  // a g a- b-  ->  b a g- a-
  std::vector<std::string> got;
  for (auto& u : us) got.push_back(print_word(c.p, u));
  EXPECT_EQ(got, (std::vector<std::string>{"a g a-", "a g- a-"}));
  EXPECT_TRUE(bridges(c.p, c.bands, bf, 1, 0).empty());
}

TEST(Bridges, Lam2OneWayOnly) {
  Ctx c = ctx("lam2");
  auto bf = band_free_strings(c.p, c.bands);
  int ed = class_of(c, "e d-"), ab = class_of(c, "a b-");
  auto us = bridges(c.p, c.bands, bf, ed, ab);
  ASSERT_EQ(us.size(), 1u);
  EXPECT_EQ(print_word(c.p, us[0]), "e g");
  EXPECT_TRUE(bridges(c.p, c.bands, bf, ab, ed).empty());
}

TEST(BridgeQuiver, Lam3Chain) {
  Ctx c = ctx("lam3");
  auto got = edge_set(c);
  std::set<std::string> want = {
      "b1 a1- --g1- a2---> b2 a2-", "b2 a2- --g2- a3---> b3 a3-",
      "a2 b2- --a2 g1--> a1 b1-", "a3 b3- --a3 g2--> a2 b2-"};
  EXPECT_EQ(got, want);
}

TEST(BridgeQuiver, X4ChainPlusInverse) {
  Ctx c = ctx("x4");
  auto got = edge_set(c);
  std::set<std::string> want = {
      "a1 b1- --g1- b2---> a2 b2-", "a2 b2- --a2 g2--> a3 b3-",
      "b2 a2- --b2 g1--> b1 a1-", "b3 a3- --g2- a2---> b2 a2-"};
  EXPECT_EQ(got, want);
}

TEST(BridgeQuiver, X5Shape) {
  Ctx c = ctx("x5");
  auto got = edge_set(c);
  std::set<std::string> want = {
      "a2 b2- --a2 g1--> b1 a1-",   "b1 a1- --b1 g0--> b0 a0-",
      "a2 b2- --g2- a3---> b3 a3-", "a1 b1- --g1- a2---> b2 a2-",
      "a0 b0- --g0- b1---> a1 b1-", "a3 b3- --a3 g2--> b2 a2-"};
  EXPECT_EQ(got, want);
}

TEST(BridgeQuiver, Acyclic) {
  for (const char* name : {"kron", "lam2", "lam3", "x1", "x3", "x4", "x5"}) {
    Ctx c = ctx(name);
    EXPECT_NO_THROW(longest_path(c.q)) << name;  // throws on a cycle
  }
}

TEST(BridgeQuiver, InversionAntiAutomorphism) {
  for (const char* name : {"lam2", "lam3", "x1", "x3", "x4", "x5"}) {
    Ctx c = ctx(name);
    for (auto& e : c.q.edges) {
      int si = c.bands.classes[e.dst].inverse_id;
      int ti = c.bands.classes[e.src].inverse_id;
      Word lab = invert_word(e.label);
      if (e.label.empty()) lab = e.label;  // empty labels pair with empties
      bool found = false;
      for (auto& f : c.q.edges)
        if (f.src == si && f.dst == ti &&
            (f.label == lab ||
             (f.label.empty() && e.label.empty())))
          found = true;
      EXPECT_TRUE(found) << name;
    }
  }
}

TEST(BridgeQuiver, FlagsDecideAtFirstDivergence) {
  Ctx c = ctx("lam3");
  for (auto& e : c.q.edges) {
    // descending edges leave through an inverse letter right after the band
    bool desc = e.flag == EdgeFlag::Descending;
    ASSERT_FALSE(e.label.empty());
    Word x = concat(c.q.vertices[e.src].repr,
                    concat(e.label, repeat_word(c.q.vertices[e.dst].repr, 3)));
    auto cmp = compare_to_band_power(c.p, x, c.q.vertices[e.src].repr);
    EXPECT_EQ(cmp == BandPowerCompare::Descends, desc);
  }
}

TEST(Indent, X1RightOneLeftZero) {
  Ctx c = ctx("x1");
  EXPECT_EQ(indent(c.q, 0, IndentFilter::All), 1);
  EXPECT_EQ(indent(c.q, 1, IndentFilter::All), 0);
}

TEST(Indent, Lam3AscendingAndDescending) {
  Ctx c = ctx("lam3");
  int b2i = class_of(c, "a2 b2-");  // inverse of the middle band
  EXPECT_EQ(indent(c.q, b2i, IndentFilter::Ascending), 1);
  int b1 = class_of(c, "b1 a1-");
  EXPECT_EQ(indent(c.q, b1, IndentFilter::Descending), 2);
}

TEST(Indent, BoundedByAll) {
  for (const char* name : {"lam2", "lam3", "x1", "x3", "x4", "x5"}) {
    Ctx c = ctx(name);
    for (auto& v : c.q.vertices) {
      int all = indent(c.q, v.id, IndentFilter::All);
      EXPECT_LE(indent(c.q, v.id, IndentFilter::Ascending), all) << name;
      EXPECT_LE(indent(c.q, v.id, IndentFilter::Descending), all) << name;
      // All equals the max over outgoing edges of 1 + longest path from dst
      int best = 0;
      for (int e : c.q.out_edges(v.id))
        best = std::max(
            best, 1 + indent(c.q, c.q.edges[e].dst, IndentFilter::All));
      EXPECT_EQ(all, best) << name;
    }
  }
}

TEST(Factorise, NoBandGivesSingleGap) {
  Ctx c = ctx("lam2");
  Word w = parse_finite_word(c.p, "e g");
  auto f = band_factorise(c.p, c.bands, w);
  EXPECT_EQ(f.powers.size(), 0u);
  EXPECT_EQ(f.band_length(), -1);
  ASSERT_EQ(f.gaps.size(), 1u);
  EXPECT_EQ(f.gaps[0], w);
}

TEST(Factorise, Lam2GreedyMaximalPowers) {
  Ctx c = ctx("lam2");
  Word w = parse_finite_word(c.p, "e d- e d- e g a b- a b- a b-");
  auto f = band_factorise(c.p, c.bands, w);
  ASSERT_EQ(f.powers.size(), 2u);
  EXPECT_EQ(print_word(c.p, c.bands.classes[f.powers[0].class_id].repr),
            "e d-");
  EXPECT_EQ(f.powers[0].k, 2);
  EXPECT_EQ(print_word(c.p, c.bands.classes[f.powers[1].class_id].repr),
            "a b-");
  EXPECT_EQ(f.powers[1].k, 3);
  EXPECT_EQ(f.band_length(), 1);
  EXPECT_TRUE(f.gaps[0].empty());
  EXPECT_EQ(print_word(c.p, f.gaps[1]), "e g");
  EXPECT_TRUE(f.gaps[2].empty());
}

TEST(Factorise, SymbolicTailsCarryInfinitePowers) {
  Ctx c = ctx("lam2");
  auto f = band_factorise(c.p, c.bands,
                          parse_word_expr(c.p, "inf^(e d-) e g (a b-)^inf"));
  ASSERT_EQ(f.powers.size(), 2u);
  EXPECT_EQ(f.powers[0].k, -1);
  EXPECT_EQ(f.powers[1].k, -1);
  EXPECT_EQ(f.band_length(), 1);
  EXPECT_EQ(print_word(c.p, f.gaps[1]), "e g");
}

TEST(Factorise, ReconstructsAndAgreesWithBruteForce) {
  std::mt19937 rng(2026);
  for (const char* name : {"kron", "lam2", "x1", "x3", "x5"}) {
    Ctx c = ctx(name);
    for (int it = 0; it < 120; ++it) {
      Word w = stringz::testing::random_word(c.p, rng, 12);
      auto f = band_factorise(c.p, c.bands, w);
      // concatenation reproduces w
      Word back = f.gaps[0];
      for (size_t i = 0; i < f.powers.size(); ++i) {
        back = concat(back, repeat_word(c.bands.classes[f.powers[i].class_id]
                                            .repr,
                                        (int)f.powers[i].k));
        back = concat(back, f.gaps[i + 1]);
      }
      if (w.empty())
        EXPECT_TRUE(back.empty()) << name;
      else
        EXPECT_EQ(back, w) << name << " " << print_word(c.p, w);
      // gaps contain no representative occurrence
      for (auto& g : f.gaps) {
        for (auto& bc : c.bands.classes) {
          size_t L = bc.repr.size();
          for (size_t i = 0; i + L <= g.size(); ++i)
            EXPECT_FALSE(std::equal(bc.repr.letters.begin(),
                                    bc.repr.letters.end(),
                                    g.letters.begin() + i))
                << name;
        }
      }
      // idempotent under refactorisation of the reassembled word
      auto f2 = band_factorise(c.p, c.bands, back);
      EXPECT_EQ(f2.powers.size(), f.powers.size()) << name;
    }
  }
}

TEST(Factorise, ExhaustiveAgreementUpToLengthTwelve) {
  // every string up to length 12: the factorisation is exactly the greedy
  // grouping of the (pairwise disjoint) representative occurrences found by
  // a direct scan
  for (const char* name : {"kron", "x1", "x3", "lam2"}) {
    Ctx c = ctx(name);
    long checked = 0;
    std::function<void(Word&)> rec = [&](Word& w) {
      ++checked;
      auto f = band_factorise(c.p, c.bands, w);
      // independent scan for representative occurrences
      std::vector<std::pair<size_t, int>> hits;
      for (size_t i = 0; i < w.size(); ++i)
        for (auto& bc : c.bands.classes) {
          size_t L = bc.repr.size();
          if (i + L <= w.size() &&
              std::equal(bc.repr.letters.begin(), bc.repr.letters.end(),
                         w.letters.begin() + i))
            hits.push_back({i, bc.id});
        }
      size_t covered = 0;
      for (auto& pw : f.powers)
        covered += (size_t)pw.k * c.bands.classes[pw.class_id].repr.size();
      size_t hitcover = 0;
      for (auto& [pos, cls] : hits)
        hitcover += c.bands.classes[cls].repr.size();
      ASSERT_EQ(covered, hitcover) << name << " " << print_word(c.p, w);
      if ((int)w.size() >= 12) return;
      for (int a = 0; a < (int)c.p.arrows.size(); ++a)
        for (bool inv : {false, true}) {
          w.letters.push_back({a, inv});
          if (is_string(c.p, w)) rec(w);
          w.letters.pop_back();
        }
    };
    for (int a = 0; a < (int)c.p.arrows.size(); ++a)
      for (bool inv : {false, true}) {
        Word w;
        w.letters.push_back({a, inv});
        if (is_string(c.p, w)) rec(w);
      }
    EXPECT_GT(checked, 40) << name;
  }
}

TEST(Factorise, EveryEdgeFlagIsWellDefined) {
  for (const char* name : {"lam2", "lam3", "x1", "x3", "x4", "x5"}) {
    Ctx c = ctx(name);
    for (auto& e : c.q.edges)
      EXPECT_NO_THROW(
          bridge_flag(c.p, c.q.vertices[e.src].repr, e.label,
                      c.q.vertices[e.dst].repr))
          << name;
  }
}
