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

#include "stringz/presentation.hpp"
#include "stringz/words.hpp"
#include "test_util.hpp"

using namespace stringz;
using stringz::testing::load_preset;

TEST(Parse, Lam2Shape) {
  Presentation p = load_preset("lam2");
  EXPECT_EQ(p.name, "lam2");
  EXPECT_EQ(p.vertices.size(), 4u);
  EXPECT_EQ(p.arrows.size(), 5u);
  EXPECT_EQ(p.relations.size(), 2u);
  // relation "g b" means first b, then g
  EXPECT_EQ(p.relations[0],
            (std::vector<int>{p.arrow_id("g"), p.arrow_id("b")}));
}

TEST(Parse, EmptyQuiver) {
  Presentation p = parse_presentation("algebra empty\n");
  EXPECT_TRUE(p.vertices.empty());
  EXPECT_TRUE(p.arrows.empty());
  EXPECT_TRUE(is_string_algebra(p));
}

TEST(Parse, X3Shape) {
  Presentation p = load_preset("x3");
  EXPECT_EQ(p.vertices.size(), 1u);
  EXPECT_EQ(p.arrows.size(), 2u);
  EXPECT_EQ(p.relations.size(), 3u);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_presentation("nonsense\n"), ParseError);
  EXPECT_THROW(parse_presentation("algebra x\nvertices: 1\n"
                                  "arrows: a: 1 -> 1 , a: 1 -> 1\n"),
               ParseError);  // duplicate arrow
  EXPECT_THROW(parse_presentation("algebra x\nvertices: 1\n"
                                  "arrows: a: 1 -> 1\nrelations: a zz\n"),
               ParseError);  // unknown arrow in relation
  EXPECT_THROW(parse_presentation("algebra x\nvertices: 1 2\n"
                                  "arrows: a: 1 -> 2\nrelations: a a\n"),
               ParseError);  // non-composable path
  EXPECT_THROW(parse_presentation("algebra x\nvertices: 1\n"
                                  "arrows: a: 1 -> 1\nrelations: a\n"),
               ParseError);  // relation of length 1
  EXPECT_THROW(parse_presentation("algebra x\nvertices: 1\n"
                                  "arrows: a: 1 -> 9\n"),
               ParseError);  // unknown vertex
  try {
    parse_presentation("algebra x\nvertices: 1\nvertices: oops:\n");
  } catch (const ParseError& e) {
    EXPECT_GT(e.line, 0);
    EXPECT_GT(e.col, 0);
  }
}

TEST(Validate, PresetsAreStringAlgebras) {
  for (const char* name :
       {"kron", "lam2", "lam3", "x1", "x3", "x4", "x5", "gp23", "a2"}) {
    Presentation p = load_preset(name);
    EXPECT_TRUE(string_algebra_violations(p).empty()) << name;
  }
}

TEST(Validate, DegreeViolations) {
  Presentation p = parse_presentation(
      "algebra wide\nvertices: 0 1 2 3\n"
      "arrows: a: 0 -> 1 , b: 0 -> 2 , c: 0 -> 3\n");
  auto v = string_algebra_violations(p);
  bool out_deg = false;
  for (auto& x : v) out_deg |= (x.axiom == "out-degree" && x.where == "0");
  EXPECT_TRUE(out_deg);

  Presentation q = parse_presentation(
      "algebra narrow\nvertices: 0 1 2 3\n"
      "arrows: a: 1 -> 0 , b: 2 -> 0 , c: 3 -> 0\n");
  auto vq = string_algebra_violations(q);
  bool in_deg = false;
  for (auto& x : vq) in_deg |= (x.axiom == "in-degree");
  EXPECT_TRUE(in_deg);
}

TEST(Validate, UniqueContinuation) {
  // two arrows continue a without a relation killing one of the products
  Presentation p = parse_presentation(
      "algebra amb\nvertices: 0 1 2 3\n"
      "arrows: a: 0 -> 1 , b: 1 -> 2 , c: 1 -> 3\n");
  auto v = string_algebra_violations(p);
  bool uc = false;
  for (auto& x : v)
    uc |= (x.axiom == "unique-continuation-left" && x.where == "a");
  EXPECT_TRUE(uc);
}

TEST(Validate, InfiniteDimensional) {
  Presentation p = parse_presentation(
      "algebra loop\nvertices: 1\narrows: a: 1 -> 1\n");
  auto v = string_algebra_violations(p);
  bool inf = false;
  for (auto& x : v) inf |= (x.axiom == "infinite-dimensional");
  EXPECT_TRUE(inf);
  // the same loop with a^2 = 0 is fine
  Presentation q = parse_presentation(
      "algebra nil\nvertices: 1\narrows: a: 1 -> 1\nrelations: a a\n");
  EXPECT_TRUE(is_string_algebra(q));
}

TEST(Validate, Gp23IsValidButNonDomesticLater) {
  Presentation p = load_preset("gp23");
  EXPECT_TRUE(is_string_algebra(p));
}

TEST(Opposite, KronReversesArrows) {
  Presentation p = load_preset("kron");
  Presentation q = opposite_presentation(p);
  for (auto& a : q.arrows) {
    EXPECT_EQ(q.vertices[a.src], "2");
    EXPECT_EQ(q.vertices[a.tgt], "1");
  }
}

TEST(Opposite, InvolutionAndValidity) {
  for (const char* name : {"kron", "lam2", "lam3", "x1", "x3", "x4", "x5"}) {
    Presentation p = load_preset(name);
    Presentation q = opposite_presentation(p);
    EXPECT_TRUE(is_string_algebra(q)) << name;
    Presentation r = opposite_presentation(q);
    EXPECT_EQ(serialize_presentation(r), serialize_presentation(p)) << name;
  }
}

TEST(HSets, KronSidesSplitTheKroneckerPair) {
  Presentation p = load_preset("kron");
  HAssignment h = h_assignment(p);
  Letter a{p.arrow_id("a"), false}, b{p.arrow_id("b"), false};
  EXPECT_NE(h.side_of(p, a), 0);
  EXPECT_NE(h.side_of(p, a), h.side_of(p, b));
}

TEST(HSets, X3PartitionGroupsEachLoopWithItsInverse) {
  Presentation p = load_preset("x3");
  HAssignment h = h_assignment(p);
  Letter a{p.arrow_id("a"), false}, ai{p.arrow_id("a"), true};
  Letter b{p.arrow_id("b"), false}, bi{p.arrow_id("b"), true};
  EXPECT_EQ(h.side_of(p, a), h.side_of(p, ai));
  EXPECT_EQ(h.side_of(p, b), h.side_of(p, bi));
  EXPECT_NE(h.side_of(p, a), h.side_of(p, b));
}

TEST(HSets, SingleEnteringLetter) {
  Presentation p = load_preset("a2");
  HAssignment h = h_assignment(p);
  Letter a{p.arrow_id("a"), false};
  EXPECT_NE(h.side_of(p, a), 0);
}

TEST(HSets, ConflictingLettersLandOnDifferentSides) {
  for (const char* name : {"kron", "lam2", "lam3", "x1", "x3", "x4", "x5"}) {
    Presentation p = load_preset(name);
    HAssignment h = h_assignment(p);
    for (int v = 0; v < (int)p.vertices.size(); ++v) {
      std::vector<Letter> entering;
      for (int a = 0; a < (int)p.arrows.size(); ++a) {
        if (p.arrows[a].tgt == v) entering.push_back({a, false});
        if (p.arrows[a].src == v) entering.push_back({a, true});
      }
      for (auto l1 : entering)
        for (auto l2 : entering)
          if (h_conflict(p, l1, l2)) {
            EXPECT_NE(h.side_of(p, l1), h.side_of(p, l2)) << name;
          }
    }
  }
}

TEST(RoundTrip, PresetsSurviveSerialisation) {
  for (const char* name :
       {"kron", "lam2", "lam3", "x1", "x3", "x4", "x5", "gp23", "a2"}) {
    Presentation p = load_preset(name);
    Presentation q = parse_presentation(serialize_presentation(p));
    EXPECT_EQ(serialize_presentation(q), serialize_presentation(p)) << name;
  }
}
