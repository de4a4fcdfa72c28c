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

#include <cassert>
#include <optional>
#include <string>
#include <vector>

#include "stringz/presentation.hpp"

namespace stringz {

/// An arrow or a formal inverse of an arrow.
struct Letter {
  int arrow = -1;
  bool inv = false;
  friend bool operator==(const Letter& a, const Letter& b) {
    return a.arrow == b.arrow && a.inv == b.inv;
  }
  friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
};

inline Letter inverse(Letter l) { return {l.arrow, !l.inv}; }

/// Vertex at the left end of the letter when it appears in a word:
/// direct letters walk right-to-left along the arrow.
inline int letter_left(const Presentation& p, Letter l) {
  return l.inv ? p.arrows[l.arrow].src : p.arrows[l.arrow].tgt;
}
inline int letter_right(const Presentation& p, Letter l) {
  return l.inv ? p.arrows[l.arrow].tgt : p.arrows[l.arrow].src;
}

inline int letter_lex_key(const Presentation& p, Letter l) {
  return 2 * p.arrow_lex_rank[l.arrow] + (l.inv ? 1 : 0);
}

/// A finite walk of letters; the empty walk carries a basepoint so the
/// formal symbols 1_{s,i} are first-class values.
struct Word {
  std::vector<Letter> letters;
  int base_vertex = -1;  // used only when letters is empty
  int base_side = +1;    // +1 or -1, used only when letters is empty

  bool empty() const { return letters.empty(); }
  size_t size() const { return letters.size(); }
  friend bool operator==(const Word& a, const Word& b) {
    if (a.empty() != b.empty()) return false;
    if (a.empty())
      return a.base_vertex == b.base_vertex && a.base_side == b.base_side;
    return a.letters == b.letters;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
};

inline Word make_empty_word(int vertex, int side = +1) {
  Word w;
  w.base_vertex = vertex;
  w.base_side = side;
  return w;
}

inline int word_left(const Presentation& p, const Word& w) {
  return w.empty() ? w.base_vertex : letter_left(p, w.letters.front());
}
inline int word_right(const Presentation& p, const Word& w) {
  return w.empty() ? w.base_vertex : letter_right(p, w.letters.back());
}

/// Reverse the sequence and invert each letter; basepoints flip side.
inline Word invert_word(const Word& w) {
  Word r;
  if (w.empty()) {
    r.base_vertex = w.base_vertex;
    r.base_side = -w.base_side;
    return r;
  }
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(inverse(*it));
  return r;
}

inline Word concat(const Word& a, const Word& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  Word r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

inline Word subword(const Presentation& p, const Word& w, size_t pos,
                    size_t len) {
  // pos is a 1-based letter index; len == 0 yields the empty word based at
  // the basis position pos-1.
  Word r;
  if (len == 0) {
    // basis position q = pos-1 has vertex right(l_q) (or word_left for q=0)
    size_t q = pos - 1;
    r.base_vertex = (q == 0) ? word_left(p, w)
                             : letter_right(p, w.letters[q - 1]);
    r.base_side = +1;
    return r;
  }
  r.letters.assign(w.letters.begin() + (pos - 1),
                   w.letters.begin() + (pos - 1 + len));
  return r;
}

/// Canonical ordering used for deterministic output: by length, then
/// letterwise by (arrow name, direct < inverse); empty words by vertex/side.
inline bool word_less(const Presentation& p, const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.empty()) {
    if (a.base_vertex != b.base_vertex) return a.base_vertex < b.base_vertex;
    return a.base_side > b.base_side;  // +1 before -1
  }
  for (size_t i = 0; i < a.size(); ++i) {
    int x = letter_lex_key(p, a.letters[i]), y = letter_lex_key(p, b.letters[i]);
    if (x != y) return x < y;
  }
  return false;
}

struct WordIssue {
  int pos;          // 1-based letter position (or 0 for basepoint problems)
  std::string rule; // "composability", "backtrack", "relation", ...
};

namespace detail {

// Does the arrows-in-word-order sequence of a maximal run hit a relation?
// Direct runs read composition order left to right; inverse runs match the
// reversed relation words.
inline bool run_hits_relation(const Presentation& p,
                              const std::vector<int>& run_arrows,
                              bool inverted_run, int* bad_end = nullptr) {
  for (auto& rel : p.relations) {
    size_t L = rel.size();
    if (L > run_arrows.size()) continue;
    for (size_t i = 0; i + L <= run_arrows.size(); ++i) {
      bool hit = true;
      for (size_t k = 0; k < L; ++k) {
        int want = inverted_run ? rel[L - 1 - k] : rel[k];
        if (run_arrows[i + k] != want) {
          hit = false;
          break;
        }
      }
      if (hit) {
        if (bad_end) *bad_end = (int)(i + L);
        return true;
      }
    }
  }
  return false;
}

}  // namespace detail

/// First violation of the word axioms, or nullopt when w is a string.
inline std::optional<WordIssue> word_violation(const Presentation& p,
                                               const Word& w) {
  if (w.empty()) {
    if (w.base_vertex < 0 || w.base_vertex >= (int)p.vertices.size())
      return WordIssue{0, "basepoint"};
    return std::nullopt;
  }
  auto& ls = w.letters;
  for (auto& l : ls)
    if (l.arrow < 0 || l.arrow >= (int)p.arrows.size())
      return WordIssue{0, "unknown-arrow"};
  for (size_t i = 0; i + 1 < ls.size(); ++i) {
    if (letter_right(p, ls[i]) != letter_left(p, ls[i + 1]))
      return WordIssue{(int)i + 2, "composability"};
    if (ls[i + 1] == inverse(ls[i])) return WordIssue{(int)i + 2, "backtrack"};
  }
  // maximal same-direction runs against the relation ideal
  size_t i = 0;
  while (i < ls.size()) {
    size_t j = i;
    while (j + 1 < ls.size() && ls[j + 1].inv == ls[i].inv) ++j;
    std::vector<int> run;
    for (size_t k = i; k <= j; ++k) run.push_back(ls[k].arrow);
    int bad_end = 0;
    if (detail::run_hits_relation(p, run, ls[i].inv, &bad_end))
      return WordIssue{(int)(i + bad_end), "relation"};
    i = j + 1;
  }
  return std::nullopt;
}

inline bool is_string(const Presentation& p, const Word& w) {
  return !word_violation(p, w).has_value();
}

// ---------------------------------------------------------------------------
// H-sets and the string order
// ---------------------------------------------------------------------------

/// For each vertex s, the letters entering s split into two sides so that a
/// walk enters by one side and leaves via the other.
struct HAssignment {
  // keyed by (vertex, letter lex key) -> side (+1/-1)
  std::map<std::pair<int, int>, int> side;

  int side_of(const Presentation& p, Letter l) const {
    auto it = side.find({letter_left(p, l), letter_lex_key(p, l)});
    return it == side.end() ? 0 : it->second;
  }
};

/// Letters l1 != l2 entering the same vertex may share a side iff
/// l1^{-1} l2 is not a string.
inline bool h_conflict(const Presentation& p, Letter l1, Letter l2) {
  if (l1 == l2) return false;
  Word w;
  w.letters = {inverse(l1), l2};
  return is_string(p, w);
}

/// Deterministic greedy assignment: letters entering each vertex are
/// processed in lexicographic order; each goes to side +1 unless a conflict
/// or side capacity (one direct, one inverse) forces -1.
inline HAssignment h_assignment(const Presentation& p) {
  HAssignment h;
  for (int v = 0; v < (int)p.vertices.size(); ++v) {
    std::vector<Letter> entering;
    for (int a = 0; a < (int)p.arrows.size(); ++a) {
      if (p.arrows[a].tgt == v) entering.push_back({a, false});
      if (p.arrows[a].src == v) entering.push_back({a, true});
    }
    std::sort(entering.begin(), entering.end(), [&](Letter a, Letter b) {
      return letter_lex_key(p, a) < letter_lex_key(p, b);
    });
    std::vector<Letter> plus, minus;
    for (auto l : entering) {
      auto fits = [&](const std::vector<Letter>& side_set) {
        int ndir = l.inv ? 0 : 1, ninv = l.inv ? 1 : 0;
        for (auto m : side_set) {
          if (h_conflict(p, m, l)) return false;
          (m.inv ? ninv : ndir)++;
        }
        return ndir <= 1 && ninv <= 1;
      };
      if (fits(plus)) {
        plus.push_back(l);
        h.side[{v, letter_lex_key(p, l)}] = +1;
      } else if (fits(minus)) {
        minus.push_back(l);
        h.side[{v, letter_lex_key(p, l)}] = -1;
      } else {
        throw std::logic_error(
            "internal invariant violation: no legal H-side for letter at "
            "vertex " +
            p.vertices[v]);
      }
    }
  }
  return h;
}

/// Which H-set a word belongs to: (start vertex, side); empty words use
/// their basepoint, nonempty words the side of their first letter.
inline std::pair<int, int> h_set_of(const Presentation& p,
                                    const HAssignment& h, const Word& w) {
  if (w.empty()) return {w.base_vertex, w.base_side};
  return {word_left(p, w), h.side_of(p, w.letters.front())};
}

/// Total order on the strings of one H-set: c < d iff d extends c by a
/// direct letter, or c extends d by an inverse letter, or after a common
/// prefix c continues with an inverse letter where d continues direct.
/// Throws when the two words lie in different H-sets.
inline int h_compare(const Presentation& p, const HAssignment& h,
                     const Word& c, const Word& d) {
  if (h_set_of(p, h, c) != h_set_of(p, h, d))
    throw std::invalid_argument("words lie in different H-sets");
  size_t i = 0;
  while (i < c.size() && i < d.size()) {
    if (c.letters[i] != d.letters[i]) {
      bool c_dir = !c.letters[i].inv;
      bool d_dir = !d.letters[i].inv;
      assert(c_dir != d_dir);  // forced by the string-algebra axioms
      return c_dir ? +1 : -1;
    }
    ++i;
  }
  if (i < d.size()) return d.letters[i].inv ? +1 : -1;  // c is a prefix
  if (i < c.size()) return c.letters[i].inv ? -1 : +1;  // d is a prefix
  return 0;
}

// ---------------------------------------------------------------------------
// Infinite words
// ---------------------------------------------------------------------------

/// Almost periodic word: a finite core with an optional periodic tail on
/// either side.  Tails are band rotations repeated forever.
struct InfiniteWord {
  std::optional<Word> left_tail;   // ^∞(t) to the left of the core
  Word core;                       // may be empty (with basepoint)
  std::optional<Word> right_tail;  // (t)^∞ to the right

  bool right_infinite() const {
    return right_tail.has_value() && !left_tail.has_value();
  }
  bool left_infinite() const {
    return left_tail.has_value() && !right_tail.has_value();
  }
  bool two_sided() const {
    return left_tail.has_value() && right_tail.has_value();
  }
  bool finite() const { return !left_tail && !right_tail; }

  friend bool operator==(const InfiniteWord& a, const InfiniteWord& b) {
    return a.left_tail == b.left_tail && a.core == b.core &&
           a.right_tail == b.right_tail;
  }
};

inline InfiniteWord invert_infword(const InfiniteWord& w) {
  InfiniteWord r;
  r.core = invert_word(w.core);
  if (w.right_tail) r.left_tail = invert_word(*w.right_tail);
  if (w.left_tail) r.right_tail = invert_word(*w.left_tail);
  return r;
}

inline Word rotate_left(const Word& w, int k) {
  if (w.empty()) return w;
  int n = (int)w.size();
  k = ((k % n) + n) % n;
  Word r;
  r.letters.insert(r.letters.end(), w.letters.begin() + k, w.letters.end());
  r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.begin() + k);
  return r;
}
inline Word rotate_right(const Word& w, int k = 1) {
  return rotate_left(w, (int)w.size() - k);
}

inline Word repeat_word(const Word& w, int k) {
  Word r;
  for (int i = 0; i < k; ++i)
    r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
  if (r.letters.empty()) r = w;
  return r;
}

/// Validity of the symbolic representation: tails are nonempty cyclic walks
/// and core·tail^k is a string, checked to k = 3.
inline std::optional<std::string> infword_problem(const Presentation& p,
                                                  const InfiniteWord& w) {
  if (w.right_tail) {
    const Word& t = *w.right_tail;
    if (t.empty()) return "empty right tail";
    if (word_left(p, t) != word_right(p, t)) return "right tail is not cyclic";
    if (!is_string(p, concat(w.core, repeat_word(t, 3))))
      return "core with right tail repeated is not a string";
  }
  if (w.left_tail) {
    const Word& t = *w.left_tail;
    if (t.empty()) return "empty left tail";
    if (word_left(p, t) != word_right(p, t)) return "left tail is not cyclic";
    if (!is_string(p, concat(repeat_word(t, 3), w.core)))
      return "left tail repeated with core is not a string";
  }
  if (w.two_sided()) {
    if (!is_string(p, concat(repeat_word(*w.left_tail, 3),
                             concat(w.core, repeat_word(*w.right_tail, 3)))))
      return "tails do not compose through the core";
  } else if (w.finite()) {
    if (!is_string(p, w.core)) return "core is not a string";
  }
  return std::nullopt;
}

/// Minimal-core form: absorb periods into the tails as far as possible.
/// Rejects completely periodic two-sided words (^∞b^∞) with an exception.
inline InfiniteWord canonical_infword(const Presentation& p,
                                      const InfiniteWord& w0) {
  InfiniteWord w = w0;
  if (auto prob = infword_problem(p, w))
    throw std::invalid_argument("invalid infinite word: " + *prob);
  long guard = (long)w.core.size() + 8;
  if (w.left_tail && w.right_tail)
    guard += (long)(w.left_tail->size() * w.right_tail->size());
  long steps = 0;
  // absorb on the right: while the letter before the right tail equals the
  // tail's last letter, shift the tail one step left
  while (w.right_tail) {
    Letter tl = w.right_tail->letters.back();
    if (!w.core.empty()) {
      if (w.core.letters.back() != tl) break;
      w.core.letters.pop_back();
      if (w.core.letters.empty())
        w.core = make_empty_word(letter_left(p, tl), +1);
      *w.right_tail = rotate_right(*w.right_tail);
    } else if (w.left_tail) {
      if (w.left_tail->letters.back() != tl) break;
      *w.left_tail = rotate_right(*w.left_tail);
      *w.right_tail = rotate_right(*w.right_tail);
    } else {
      break;
    }
    if (++steps > guard)
      throw std::invalid_argument(
          "completely periodic two-sided word is rejected");
  }
  // absorb on the left: mirror
  while (w.left_tail) {
    Letter tf = w.left_tail->letters.front();
    if (!w.core.empty()) {
      if (w.core.letters.front() != tf) break;
      w.core.letters.erase(w.core.letters.begin());
      if (w.core.letters.empty())
        w.core = make_empty_word(letter_right(p, tf), +1);
      *w.left_tail = rotate_left(*w.left_tail, 1);
    } else if (w.right_tail) {
      if (w.right_tail->letters.front() != tf) break;
      *w.left_tail = rotate_left(*w.left_tail, 1);
      *w.right_tail = rotate_left(*w.right_tail, 1);
    } else {
      break;
    }
    if (++steps > guard)
      throw std::invalid_argument(
          "completely periodic two-sided word is rejected");
  }
  if (w.finite() && w.core.empty() && w.core.base_vertex < 0)
    throw std::invalid_argument("empty word without basepoint");
  if (!w.finite() && w.core.empty()) {
    // canonical basepoint at the tail junction
    int v = w.right_tail ? word_left(p, *w.right_tail)
                         : word_right(p, *w.left_tail);
    w.core = make_empty_word(v, +1);
  }
  return w;
}

enum class EndKind { Expanding, Contracting };

struct EndLabels {
  std::optional<EndKind> left;
  std::optional<EndKind> right;
};

/// Per-end classification of the shift behaviour.  In minimal-core form the
/// right end expands iff the tail period ends with an inverse letter (for a
/// nonempty core this is the same as the junction letter of the core being
/// direct); the left end is classified on the inverted word.
inline EndLabels classify_ends(const Presentation& p, const InfiniteWord& w0) {
  InfiniteWord w = canonical_infword(p, w0);
  EndLabels out;
  if (w.right_tail)
    out.right = w.right_tail->letters.back().inv ? EndKind::Expanding
                                                 : EndKind::Contracting;
  if (w.left_tail)
    out.left = !w.left_tail->letters.front().inv ? EndKind::Expanding
                                                 : EndKind::Contracting;
  return out;
}

// ---------------------------------------------------------------------------
// Occurrences
// ---------------------------------------------------------------------------

/// One occurrence of a pattern inside a host.  For letter patterns, pos is
/// the 1-based index of the host letter where the (possibly inverted)
/// pattern starts; for empty patterns, pos is the basis position (0-based)
/// where the basepoint sits, and len 0 distinguishes it.
struct Occurrence {
  long pos = 0;
  long len = 0;
  bool inverted = false;
  friend bool operator==(const Occurrence& a, const Occurrence& b) {
    return a.pos == b.pos && a.len == b.len && a.inverted == b.inverted;
  }
};

namespace detail {

enum class OccKind { Image, Factor };

// Boundary test for an occurrence covering letters [i, i+m-1] of the host
// (1-based), where the adjacent letters may be absent (real word end).
// Image substrings are closed under successors: the adjacent letters, if
// any, point toward the occurrence (left neighbour inverse, right direct).
// Factor substrings are the dual.
inline bool boundary_ok(OccKind kind, const std::optional<Letter>& before,
                        const std::optional<Letter>& after) {
  if (kind == OccKind::Image) {
    if (before && !before->inv) return false;
    if (after && after->inv) return false;
  } else {
    if (before && before->inv) return false;
    if (after && !after->inv) return false;
  }
  return true;
}

// Expanded view of a host: finite letter vector plus flags telling whether
// the two ends are real word ends or truncations of periodic tails.
struct HostView {
  std::vector<Letter> letters;
  bool left_open = false;   // more letters exist to the left
  bool right_open = false;  // more letters exist to the right
  long origin = 1;          // coordinate of letters[0] in host numbering
  long left_period = 0;
  long right_period = 0;
  long core_len = 0;
  int empty_vertex = -1;  // basepoint vertex when the host has no letters
};

inline HostView expand_host(const Word& host) {
  HostView v;
  v.letters = host.letters;
  v.core_len = (long)host.letters.size();
  v.empty_vertex = host.base_vertex;
  return v;
}

inline HostView expand_host(const InfiniteWord& host, int periods) {
  HostView v;
  long left = 0;
  if (host.left_tail) {
    v.left_open = true;
    v.left_period = (long)host.left_tail->size();
    for (int k = 0; k < periods; ++k)
      v.letters.insert(v.letters.end(), host.left_tail->letters.begin(),
                       host.left_tail->letters.end());
    left = (long)v.letters.size();
  }
  v.letters.insert(v.letters.end(), host.core.letters.begin(),
                   host.core.letters.end());
  v.core_len = (long)host.core.size();
  if (host.right_tail) {
    v.right_open = true;
    v.right_period = (long)host.right_tail->size();
    for (int k = 0; k < periods; ++k)
      v.letters.insert(v.letters.end(), host.right_tail->letters.begin(),
                       host.right_tail->letters.end());
  }
  v.origin = 1 - left;  // core starts at coordinate 1
  return v;
}

inline std::vector<Occurrence> occurrences_in_view(
    const Presentation& p, const Word& pattern, const HostView& host,
    OccKind kind) {
  std::vector<Occurrence> out;
  long n = (long)host.letters.size();
  auto letter_at = [&](long idx) -> std::optional<Letter> {
    // idx is 0-based into the view
    if (idx < 0) {
      if (!host.left_open) return std::nullopt;
      long P = host.left_period;
      long k = ((idx % P) + P) % P;
      return host.letters[k];  // periodic continuation of the left tail
    }
    if (idx >= n) {
      if (!host.right_open) return std::nullopt;
      long P = host.right_period;
      return host.letters[n - P + ((idx - n) % P)];
    }
    return host.letters[idx];
  };
  if (pattern.empty()) {
    // occurrences at basis positions with the matching vertex
    for (long q = 0; q <= n; ++q) {
      int vtx = (q == 0) ? (n ? letter_left(p, host.letters[0])
                              : host.empty_vertex)
                         : letter_right(p, host.letters[q - 1]);
      if (vtx != pattern.base_vertex) continue;
      std::optional<Letter> before =
          (q == 0) ? letter_at(-1) : std::optional<Letter>(host.letters[q - 1]);
      std::optional<Letter> after =
          (q == n) ? letter_at(n) : std::optional<Letter>(host.letters[q]);
      if (boundary_ok(kind, before, after))
        out.push_back({host.origin + q - 1, 0, false});
    }
    return out;
  }
  Word ipattern = invert_word(pattern);
  long m = (long)pattern.size();
  for (long i = 0; i + m <= n; ++i) {
    bool plain = true, flipped = true;
    for (long k = 0; k < m && (plain || flipped); ++k) {
      if (host.letters[i + k] != pattern.letters[k]) plain = false;
      if (host.letters[i + k] != ipattern.letters[k]) flipped = false;
    }
    if (!plain && !flipped) continue;
    std::optional<Letter> before = letter_at(i - 1);
    std::optional<Letter> after = letter_at(i + m);
    if (!boundary_ok(kind, before, after)) continue;
    if (plain) out.push_back({host.origin + i, m, false});
    if (flipped) out.push_back({host.origin + i, m, true});
  }
  return out;
}

// Canonicalise occurrences of an infinite host modulo the tail periods:
// occurrences lying entirely inside a tail keep the representative nearest
// the core, which does not depend on how many periods were expanded.
inline std::vector<Occurrence> dedupe_periodic(const HostView& host,
                                               std::vector<Occurrence> occs) {
  std::vector<Occurrence> out;
  for (auto& o : occs) {
    bool in_right = host.right_open && o.pos > host.core_len;
    bool in_left = host.left_open && (o.pos + std::max(o.len, 1L) - 1) <= 0;
    bool dup = false;
    for (auto& q : out) {
      if (q.len != o.len || q.inverted != o.inverted) continue;
      long d = o.pos - q.pos;
      if (in_right && q.pos > host.core_len && d > 0 &&
          d % host.right_period == 0)
        dup = true;  // q is the copy nearest the core
      if (dup) break;
    }
    if (dup) continue;
    if (in_left) {
      // keep only the copy nearest the core: drop o if a shifted copy
      // o.pos + k*P still fits in the left region (occurrences come sorted
      // by position, so replace any kept farther-out copy)
      bool replaced = false;
      for (auto& q : out) {
        if (q.len != o.len || q.inverted != o.inverted) continue;
        long d = o.pos - q.pos;
        if ((q.pos + std::max(q.len, 1L) - 1) <= 0 && d > 0 &&
            d % host.left_period == 0) {
          q = o;
          replaced = true;
          break;
        }
      }
      if (replaced) continue;
    }
    out.push_back(o);
  }
  return out;
}

}  // namespace detail

/// Occurrences of pattern in host closed under successors (submodule
/// embeddings): the adjacent host letters, if any, point toward the
/// occurrence.  Inverted-pattern matches are reported with a flag.
inline std::vector<Occurrence> image_occurrences(const Presentation& p,
                                                 const Word& pattern,
                                                 const Word& host) {
  return detail::occurrences_in_view(p, pattern, detail::expand_host(host),
                                     detail::OccKind::Image);
}

inline std::vector<Occurrence> image_occurrences(const Presentation& p,
                                                 const Word& pattern,
                                                 const InfiniteWord& host,
                                                 int periods = 3) {
  auto v = detail::expand_host(host, periods);
  return detail::dedupe_periodic(
      v, detail::occurrences_in_view(p, pattern, v, detail::OccKind::Image));
}

/// Dual notion: occurrences closed under predecessors (quotient maps):
/// adjacent letters point away from the occurrence.
inline std::vector<Occurrence> factor_occurrences(const Presentation& p,
                                                  const Word& pattern,
                                                  const Word& host) {
  return detail::occurrences_in_view(p, pattern, detail::expand_host(host),
                                     detail::OccKind::Factor);
}

inline std::vector<Occurrence> factor_occurrences(const Presentation& p,
                                                  const Word& pattern,
                                                  const InfiniteWord& host,
                                                  int periods = 3) {
  auto v = detail::expand_host(host, periods);
  return detail::dedupe_periodic(
      v, detail::occurrences_in_view(p, pattern, v, detail::OccKind::Factor));
}

// ---------------------------------------------------------------------------
// Comparison against a band power
// ---------------------------------------------------------------------------

enum class BandPowerCompare { Ascends, Descends, PeriodicPrefix };

/// Compare a string x beginning with the rotation b against b^∞ in the
/// H-order.  Divergence is guaranteed within |x| letters or x is a periodic
/// prefix.
inline BandPowerCompare compare_to_band_power(const Presentation& p,
                                              const Word& x, const Word& b) {
  (void)p;
  if (b.empty() || x.size() < b.size() ||
      !std::equal(b.letters.begin(), b.letters.end(), x.letters.begin()))
    throw std::invalid_argument("word does not begin with the band rotation");
  for (size_t i = 0; i < x.size(); ++i) {
    Letter exp = b.letters[i % b.size()];
    if (x.letters[i] != exp) {
      bool x_dir = !x.letters[i].inv;
      bool e_dir = !exp.inv;
      assert(x_dir != e_dir);  // two direct or two inverse continuations
                               // would contradict the algebra axioms
      return x_dir ? BandPowerCompare::Ascends : BandPowerCompare::Descends;
    }
  }
  return BandPowerCompare::PeriodicPrefix;
}

}  // namespace stringz
