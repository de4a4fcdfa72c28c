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

#include <vector>

#include "stringz/bands.hpp"

namespace stringz {

enum class EdgeFlag { Ascending, Descending };

struct BridgeEdge {
  int src = -1;
  int dst = -1;
  Word label;  // the bridge word, possibly empty
  EdgeFlag flag = EdgeFlag::Ascending;
};

/// Finite DAG on the cyclic band classes; edges are bridges with their
/// ascend/descend flag relative to the source band.
struct BridgeQuiver {
  std::vector<BandClass> vertices;  // same order as BandSystem::classes
  std::vector<BridgeEdge> edges;

  std::vector<int> out_edges(int v) const {
    std::vector<int> r;
    for (int e = 0; e < (int)edges.size(); ++e)
      if (edges[e].src == v) r.push_back(e);
    return r;
  }
};

namespace detail {

inline void band_free_dfs(const Presentation& p, const BandSystem& bands,
                          Word& cur, std::vector<Word>& out, size_t cap) {
  if (cur.size() > cap)
    throw std::logic_error("band-free search exceeded the length bound");
  out.push_back(cur);
  Letter last = cur.letters.back();
  for (int a = 0; a < (int)p.arrows.size(); ++a) {
    for (bool inv : {false, true}) {
      Letter m{a, inv};
      if (letter_left(p, m) != letter_right(p, last)) continue;
      cur.letters.push_back(m);
      if (is_string(p, cur) && !contains_band_rotation(bands, cur))
        band_free_dfs(p, bands, cur, out, cap);
      cur.letters.pop_back();
    }
  }
}

}  // namespace detail

/// All strings containing no band rotation as a substring, plus the empty
/// words 1_{s,i}.  Finite: a longer word would revisit a state of the
/// letter automaton, and the stretch between the visits is a power of an
/// automaton cycle, hence contains a band rotation.  (Revisiting a mere
/// letter is not enough when relations are longer than two arrows.)
inline std::vector<Word> band_free_strings(const Presentation& p,
                                           const BandSystem& bands) {
  if (!bands.domestic)
    throw std::invalid_argument(
        "band-free strings exist in finite number only for domestic algebras");
  std::vector<Word> out;
  for (int v = 0; v < (int)p.vertices.size(); ++v) {
    out.push_back(make_empty_word(v, +1));
    out.push_back(make_empty_word(v, -1));
  }
  size_t cap = LetterAutomaton::build(p).states.size() + 1;
  for (int a = 0; a < (int)p.arrows.size(); ++a) {
    for (bool inv : {false, true}) {
      Word w;
      w.letters.push_back({a, inv});
      if (is_string(p, w) && !contains_band_rotation(bands, w))
        detail::band_free_dfs(p, bands, w, out, cap);
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const Word& x, const Word& y) { return word_less(p, x, y); });
  return out;
}

/// Bridges from class b to class b': band-free u (possibly empty) such that
/// b·u·b' is a string and no decomposition u = u1 u2 admits an intermediate
/// band: u1·r·u2 a string for a rotation r of some third class.  Rotations
/// of the endpoint classes do not disqualify; they merely re-phase the
/// endpoints' own periods.
inline std::vector<Word> bridges(const Presentation& p,
                                 const BandSystem& bands,
                                 const std::vector<Word>& band_free, int b,
                                 int b2) {
  std::vector<Word> out;
  if (b == b2) return out;
  const Word& rb = bands.classes[b].repr;
  const Word& rb2 = bands.classes[b2].repr;
  for (const Word& u : band_free) {
    if (u.empty() && u.base_side < 0) continue;  // 1_{s,-} duplicates 1_{s,+}
    Word whole = concat(rb, concat(u, rb2));
    if (!is_string(p, whole)) continue;
    bool split = false;
    for (size_t cut = 1; cut < u.size() && !split; ++cut) {
      Word u1 = subword(p, u, 1, cut);
      Word u2 = subword(p, u, cut + 1, u.size() - cut);
      for (auto& bc : bands.classes) {
        if (bc.id == b || bc.id == b2) continue;
        for (auto& r : detail::word_rotations(bc.repr)) {
          if (is_string(p, concat(u1, concat(r, u2)))) {
            split = true;
            break;
          }
        }
        if (split) break;
      }
    }
    if (!split) out.push_back(u);
  }
  std::sort(out.begin(), out.end(),
            [&](const Word& x, const Word& y) { return word_less(p, x, y); });
  return out;
}

/// Ascend/descend flag of a bridge: decided at the first divergence of
/// b·u·b'-expansion from b^∞, which lies inside the bridge or the first
/// period of the target band.
inline EdgeFlag bridge_flag(const Presentation& p, const Word& b,
                            const Word& u, const Word& b2) {
  Word x = concat(b, concat(u, repeat_word(b2, 3)));
  auto c = compare_to_band_power(p, x, b);
  if (c == BandPowerCompare::PeriodicPrefix)
    throw std::logic_error(
        "bridge expansion may not be a periodic prefix (bands would overlap)");
  return c == BandPowerCompare::Ascends ? EdgeFlag::Ascending
                                        : EdgeFlag::Descending;
}

inline BridgeQuiver bridge_quiver(const Presentation& p,
                                  const BandSystem& bands) {
  if (!bands.domestic)
    throw std::invalid_argument(
        "the bridge quiver is defined for domestic algebras only");
  BridgeQuiver q;
  q.vertices = bands.classes;
  auto bf = band_free_strings(p, bands);
  for (auto& src : bands.classes) {
    for (auto& dst : bands.classes) {
      if (src.id == dst.id) continue;
      for (auto& u : bridges(p, bands, bf, src.id, dst.id)) {
        q.edges.push_back({src.id, dst.id, u,
                           bridge_flag(p, src.repr, u, dst.repr)});
      }
    }
  }
  return q;
}

enum class IndentFilter { All, Ascending, Descending };

namespace detail {

inline int longest_path_from(const BridgeQuiver& q, int v,
                             std::vector<int>& memo,
                             std::vector<int>& visiting) {
  if (memo[v] >= 0) return memo[v];
  if (visiting[v])
    throw std::logic_error("bridge quiver has an oriented cycle");
  visiting[v] = 1;
  int best = 0;
  for (int e : q.out_edges(v))
    best = std::max(best, 1 + longest_path_from(q, q.edges[e].dst, memo,
                                                visiting));
  visiting[v] = 0;
  memo[v] = best;
  return best;
}

}  // namespace detail

/// Indent of a band-class vertex: All gives the longest path length from it;
/// Ascending/Descending restrict the flag of the first edge only.
inline int indent(const BridgeQuiver& q, int class_id, IndentFilter filter) {
  std::vector<int> memo(q.vertices.size(), -1), visiting(q.vertices.size(), 0);
  if (filter == IndentFilter::All)
    return detail::longest_path_from(q, class_id, memo, visiting);
  int best = 0;
  for (int e : q.out_edges(class_id)) {
    bool want_asc = filter == IndentFilter::Ascending;
    if ((q.edges[e].flag == EdgeFlag::Ascending) != want_asc) continue;
    best = std::max(best, 1 + detail::longest_path_from(q, q.edges[e].dst,
                                                        memo, visiting));
  }
  return best;
}

inline int longest_path(const BridgeQuiver& q) {
  int best = 0;
  for (auto& v : q.vertices)
    best = std::max(best, indent(q, v.id, IndentFilter::All));
  return best;
}

// ---------------------------------------------------------------------------
// Band factorisation
// ---------------------------------------------------------------------------

/// Unique decomposition w = c1 b1^{k1} c2 ... cs bs^{ks} c_{s+1} where the
/// bi are occurrences of the chosen representatives and the ci contain no
/// representative.  band_length is s-1.
struct BandFactorisation {
  struct Power {
    int class_id = -1;
    long k = 1;  // -1 encodes ∞ (tail powers of infinite words)
  };
  std::vector<Word> gaps;     // s+1 entries (possibly empty words)
  std::vector<Power> powers;  // s entries
  int band_length() const { return (int)powers.size() - 1; }
};

/// Factorise a finite string.  Representative occurrences of distinct
/// classes never overlap, so the greedy maximal grouping is the unique one.
inline BandFactorisation band_factorise(const Presentation& p,
                                        const BandSystem& bands,
                                        const Word& w) {
  if (!bands.domestic)
    throw std::invalid_argument("factorisation requires a domestic algebra");
  struct Hit {
    size_t pos;
    int cls;
    size_t len;
  };
  std::vector<Hit> hits;
  for (size_t i = 0; i < w.size(); ++i) {
    for (auto& bc : bands.classes) {
      size_t L = bc.repr.size();
      if (i + L > w.size()) continue;
      if (std::equal(bc.repr.letters.begin(), bc.repr.letters.end(),
                     w.letters.begin() + i))
        hits.push_back({i, bc.id, L});
    }
  }
  std::sort(hits.begin(), hits.end(),
            [](const Hit& a, const Hit& b) { return a.pos < b.pos; });
  for (size_t i = 0; i + 1 < hits.size(); ++i)
    if (hits[i + 1].pos < hits[i].pos + hits[i].len)
      throw std::logic_error("representative band occurrences overlap");

  BandFactorisation f;
  size_t cursor = 0;  // next unconsumed letter index
  size_t i = 0;
  auto gap_word = [&](size_t from, size_t to) {
    if (from == to) {
      int v = (from == 0) ? word_left(p, w)
                          : letter_right(p, w.letters[from - 1]);
      return make_empty_word(v, +1);
    }
    return subword(p, w, from + 1, to - from);
  };
  while (i < hits.size()) {
    size_t start = hits[i].pos;
    int cls = hits[i].cls;
    size_t L = hits[i].len;
    long k = 1;
    while (i + 1 < hits.size() && hits[i + 1].cls == cls &&
           hits[i + 1].pos == hits[i].pos + L) {
      ++k;
      ++i;
    }
    f.gaps.push_back(gap_word(cursor, start));
    f.powers.push_back({cls, k});
    cursor = hits[i].pos + L;
    ++i;
  }
  f.gaps.push_back(gap_word(cursor, w.size()));
  return f;
}

/// Symbolic factorisation of an almost periodic word: tail powers are ∞.
inline BandFactorisation band_factorise(const Presentation& p,
                                        const BandSystem& bands,
                                        const InfiniteWord& w0) {
  InfiniteWord w = canonical_infword(p, w0);
  if (w.finite()) return band_factorise(p, bands, w.core);

  // Re-phase each tail so its period is a representative occurrence:
  //   ^∞(t) = ^∞(repr) · t[off+1..]      (t)^∞ = t[1..off] · (repr)^∞
  // where repr = rotate_left(t, off).  The phase remainders join the core.
  Word extended = w.core;
  std::optional<BandFactorisation::Power> leftp, rightp;
  if (w.left_tail) {
    auto br = canonical_band(p, bands, *w.left_tail);
    if (!br) throw std::invalid_argument("left tail is not a band rotation");
    Word suffix = br->offset == 0
                      ? make_empty_word(word_left(p, *w.left_tail), +1)
                      : subword(p, *w.left_tail, br->offset + 1,
                                w.left_tail->size() - br->offset);
    extended = concat(suffix, extended);
    leftp = BandFactorisation::Power{br->class_id, -1};
  }
  if (w.right_tail) {
    auto br = canonical_band(p, bands, *w.right_tail);
    if (!br) throw std::invalid_argument("right tail is not a band rotation");
    extended = concat(extended, subword(p, *w.right_tail, 1, br->offset));
    rightp = BandFactorisation::Power{br->class_id, -1};
  }

  BandFactorisation mid = band_factorise(p, bands, extended);
  size_t s = mid.powers.size();
  // finite periods adjacent to a tail of the same class merge into it
  size_t lo = 0, hi = s;
  if (leftp && hi > lo && mid.powers[0].class_id == leftp->class_id &&
      mid.gaps[0].empty())
    lo = 1;
  if (rightp && hi > lo && mid.powers[s - 1].class_id == rightp->class_id &&
      mid.gaps[s].empty())
    hi = s - 1;

  BandFactorisation f;
  if (leftp) {
    f.powers.push_back(*leftp);
    f.gaps.push_back(make_empty_word(word_left(p, extended), +1));
  }
  f.gaps.push_back(mid.gaps[lo]);
  for (size_t k = lo; k < hi; ++k) {
    f.powers.push_back(mid.powers[k]);
    f.gaps.push_back(mid.gaps[k + 1]);
  }
  if (rightp) {
    f.powers.push_back(*rightp);
    f.gaps.push_back(make_empty_word(word_right(p, extended), +1));
  }
  if (f.gaps.size() != f.powers.size() + 1)
    throw std::logic_error("factorisation shape mismatch");
  return f;
}

}  // namespace stringz
