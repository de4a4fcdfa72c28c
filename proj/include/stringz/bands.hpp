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

#include <map>
#include <optional>
#include <vector>

#include "stringz/words.hpp"

namespace stringz {

/// Search structure for bands: nodes are letters carrying enough recent run
/// context to see every relation, edges are the legal one-letter
/// continuations.  Periodic words correspond to cycles.
struct LetterAutomaton {
  // state: last letter + the trailing window (word order, at most
  // max_relation_length-1 arrows) of the current unidirectional run
  struct State {
    Letter last;
    std::vector<int> window;
    bool operator<(const State& o) const {
      if (last.arrow != o.last.arrow) return last.arrow < o.last.arrow;
      if (last.inv != o.last.inv) return last.inv < o.last.inv;
      return window < o.window;
    }
  };
  std::vector<State> states;
  std::vector<std::vector<int>> succ;
  std::map<State, int> index;

  static LetterAutomaton build(const Presentation& p) {
    LetterAutomaton la;
    int R = p.max_relation_length();
    auto intern = [&](const State& s) {
      auto it = la.index.find(s);
      if (it != la.index.end()) return it->second;
      int n = (int)la.states.size();
      la.index[s] = n;
      la.states.push_back(s);
      la.succ.emplace_back();
      return n;
    };
    auto run_ok = [&](const std::vector<int>& run, bool inv) {
      return !detail::run_hits_relation(p, run, inv);
    };
    for (int a = 0; a < (int)p.arrows.size(); ++a) {
      intern({{a, false}, {a}});
      intern({{a, true}, {a}});
    }
    for (int s = 0; s < (int)la.states.size(); ++s) {
      State st = la.states[s];
      for (int a = 0; a < (int)p.arrows.size(); ++a) {
        for (bool inv : {false, true}) {
          Letter m{a, inv};
          if (letter_left(p, m) != letter_right(p, st.last)) continue;
          if (m == inverse(st.last)) continue;
          std::vector<int> win;
          if (m.inv == st.last.inv) {
            win = st.window;
            win.push_back(a);
            if (!run_ok(win, m.inv)) continue;
            if ((int)win.size() > R - 1)
              win.erase(win.begin(), win.end() - (R - 1));
          } else {
            win = {a};
          }
          int t = intern({m, win});  // may reallocate la.succ
          la.succ[s].push_back(t);
        }
      }
    }
    return la;
  }
};

/// A band up to cyclic rotation: canonical representative of the form
/// "direct first, inverse last", lexicographically least such rotation.
struct BandClass {
  Word repr;
  int id = -1;
  int inverse_id = -1;
};

struct NonDomesticWitness {
  Word band1;
  Word band2;  // distinct bands sharing the same first letter
};

struct BandSystem {
  bool domestic = true;
  std::vector<BandClass> classes;  // cyclic classes, closed under inversion
  int n_domestic = 0;              // classes up to cyclic rotation + inversion
  std::optional<NonDomesticWitness> witness;
};

namespace detail {

inline std::vector<Word> word_rotations(const Word& w) {
  std::vector<Word> out;
  for (int k = 0; k < (int)w.size(); ++k) out.push_back(rotate_left(w, k));
  return out;
}

/// Lexicographically least rotation of the form α c β⁻¹.
inline Word canonical_rotation(const Presentation& p, const Word& cyc) {
  std::optional<Word> best;
  for (auto& r : word_rotations(cyc)) {
    if (r.letters.front().inv || !r.letters.back().inv) continue;
    if (!best || word_less(p, r, *best)) best = r;
  }
  if (!best)
    throw std::logic_error("cyclic word has no direct-first inverse-last form");
  return *best;
}

inline bool word_is_primitive(const Word& w) {
  int n = (int)w.size();
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    bool per = true;
    for (int i = d; i < n && per; ++i)
      per = (w.letters[i] == w.letters[i % d]);
    if (per) return false;
  }
  return true;
}

/// All powers of the cyclic word are strings (a relation spans at most
/// max_relation_length letters, so a bounded power certifies all of them).
inline bool all_powers_are_strings(const Presentation& p, const Word& w) {
  int R = p.max_relation_length();
  int m = (R + (int)w.size() - 1) / (int)w.size() + 1;
  return is_string(p, repeat_word(w, std::max(m, 2)));
}

// Extract the cyclic word read along a state cycle (each state contributes
// its letter), rotated to start after `from`.
inline Word cycle_word(const LetterAutomaton& la, const std::vector<int>& cyc) {
  Word w;
  for (int s : cyc) w.letters.push_back(la.states[s].last);
  return w;
}

}  // namespace detail

/// Enumerate the bands of a valid string algebra up to cyclic equivalence
/// (classes are closed under inversion), or detect non-domesticity with a
/// first-letter witness.
inline BandSystem enumerate_bands(const Presentation& p) {
  BandSystem out;
  LetterAutomaton la = LetterAutomaton::build(p);
  int n = (int)la.states.size();

  // Tarjan SCC
  std::vector<int> comp(n, -1), low(n, 0), num(n, -1), stk;
  std::vector<bool> onstk(n, false);
  int counter = 0, ncomp = 0;
  std::function<void(int)> dfs = [&](int u) {
    num[u] = low[u] = counter++;
    stk.push_back(u);
    onstk[u] = true;
    for (int v : la.succ[u]) {
      if (num[v] < 0) {
        dfs(v);
        low[u] = std::min(low[u], low[v]);
      } else if (onstk[v]) {
        low[u] = std::min(low[u], num[v]);
      }
    }
    if (low[u] == num[u]) {
      while (true) {
        int w = stk.back();
        stk.pop_back();
        onstk[w] = false;
        comp[w] = ncomp;
        if (w == u) break;
      }
      ++ncomp;
    }
  };
  for (int s = 0; s < n; ++s)
    if (num[s] < 0) dfs(s);

  std::vector<std::vector<int>> members(ncomp);
  for (int s = 0; s < n; ++s) members[comp[s]].push_back(s);

  std::vector<Word> cycles;
  for (int c = 0; c < ncomp; ++c) {
    auto& mem = members[c];
    bool has_cycle = false;
    for (int u : mem)
      for (int v : la.succ[u])
        if (comp[v] == c) has_cycle = true;
    if (!has_cycle) continue;
    // a domestic SCC is one simple cycle: every member has exactly one
    // successor inside the component
    int bad = -1;
    for (int u : mem) {
      int deg = 0;
      for (int v : la.succ[u])
        if (comp[v] == c) ++deg;
      if (deg > 1) bad = u;
    }
    if (bad >= 0) {
      out.domestic = false;
      // two distinct cycles through `bad`: follow each branch back to it
      std::vector<Word> two;
      for (int v0 : la.succ[bad]) {
        if (comp[v0] != c || (int)two.size() == 2) continue;
        // BFS within the SCC back to bad
        std::map<int, int> par;
        std::vector<int> q{v0};
        par[v0] = bad;
        bool done = false;
        for (size_t h = 0; h < q.size() && !done; ++h) {
          for (int w : la.succ[q[h]]) {
            if (comp[w] != c || par.count(w)) continue;
            par[w] = q[h];
            if (w == bad) continue;
            q.push_back(w);
          }
          if (q[h] == bad) done = true;
        }
        // reconstruct bad -> v0 -> ... -> bad
        std::vector<int> path;
        // find some u in SCC with succ containing bad and reachable from v0
        std::function<bool(int, std::vector<int>&)> walk =
            [&](int u, std::vector<int>& acc) -> bool {
          acc.push_back(u);
          if (u == bad) return true;
          for (int w : la.succ[u]) {
            if (comp[w] != c) continue;
            if (w == bad) {
              acc.push_back(bad);
              return true;
            }
          }
          for (int w : la.succ[u]) {
            if (comp[w] != c) continue;
            if (std::find(acc.begin(), acc.end(), w) != acc.end()) continue;
            if (walk(w, acc)) return true;
          }
          acc.pop_back();
          return false;
        };
        std::vector<int> acc;
        if (walk(v0, acc)) {
          Word w;
          w.letters.push_back(la.states[bad].last);
          for (size_t i = 0; i + 1 < acc.size(); ++i)
            w.letters.push_back(la.states[acc[i]].last);
          two.push_back(w);
        }
      }
      if (two.size() == 2) {
        // normalise: rotate the pair (or its inverse pair) to a common
        // direct first letter, lexicographically least over both choices
        auto common_direct = [&](const Word& x, const Word& y) {
          std::optional<Letter> best;
          for (auto& l : x.letters) {
            if (l.inv) continue;
            bool in_y = std::find(y.letters.begin(), y.letters.end(), l) !=
                        y.letters.end();
            if (!in_y) continue;
            if (!best || letter_lex_key(p, l) < letter_lex_key(p, *best))
              best = l;
          }
          return best;
        };
        auto rotated_to = [&](Word w, Letter l) {
          for (int k = 0; k < (int)w.size(); ++k)
            if (w.letters[k] == l) return rotate_left(w, k);
          return w;
        };
        std::vector<Word> alt{invert_word(two[0]), invert_word(two[1])};
        auto c1 = common_direct(two[0], two[1]);
        auto c2 = common_direct(alt[0], alt[1]);
        bool use_alt =
            !c1 || (c2 && letter_lex_key(p, *c2) < letter_lex_key(p, *c1));
        auto& pair = use_alt ? alt : two;
        Letter shared = use_alt ? *c2 : *c1;
        out.witness = NonDomesticWitness{rotated_to(pair[0], shared),
                                         rotated_to(pair[1], shared)};
      }
      return out;
    }
    // extract the unique cycle
    std::vector<int> cyc;
    int u = mem[0];
    do {
      cyc.push_back(u);
      int nx = -1;
      for (int v : la.succ[u])
        if (comp[v] == c) nx = v;
      u = nx;
    } while (u != mem[0]);
    Word w = detail::cycle_word(la, cyc);
    if (!detail::word_is_primitive(w))
      throw std::logic_error("automaton cycle produced an imprimitive word");
    if (!detail::all_powers_are_strings(p, w)) continue;  // not a true band
    cycles.push_back(w);
  }

  // canonical representatives, deduped (one SCC can shadow another only in
  // the non-domestic case, but dedupe defensively)
  std::vector<Word> reps;
  for (auto& w : cycles) {
    Word r = detail::canonical_rotation(p, w);
    bool seen = false;
    for (auto& q : reps) seen = seen || q == r;
    if (!seen) reps.push_back(r);
  }
  std::sort(reps.begin(), reps.end(),
            [&](const Word& a, const Word& b) { return word_less(p, a, b); });
  for (int i = 0; i < (int)reps.size(); ++i)
    out.classes.push_back({reps[i], i, -1});
  for (auto& bc : out.classes) {
    Word inv_rep = detail::canonical_rotation(p, invert_word(bc.repr));
    for (auto& other : out.classes)
      if (other.repr == inv_rep) bc.inverse_id = other.id;
    if (bc.inverse_id < 0)
      throw std::logic_error("band classes not closed under inversion");
    if (bc.inverse_id == bc.id)
      throw std::logic_error("band class equal to its own inverse");
  }
  out.n_domestic = (int)out.classes.size() / 2;
  return out;
}

/// Reference into the band system: class and the rotation offset k such
/// that rotate_left(w, k) is the class representative.
struct BandRef {
  int class_id = -1;
  int offset = 0;
};

/// Identify a cyclic word as a rotation of an enumerated band.
inline std::optional<BandRef> canonical_band(const Presentation& p,
                                             const BandSystem& bands,
                                             const Word& w) {
  (void)p;
  for (auto& bc : bands.classes) {
    if (bc.repr.size() != w.size()) continue;
    for (int k = 0; k < (int)w.size(); ++k) {
      if (rotate_left(w, k) == bc.repr) return BandRef{bc.id, k};
    }
  }
  return std::nullopt;
}

/// True when this cyclic class is the inverse partner of the smaller-id
/// class of its equivalence pair.
inline bool is_inverted_class(const BandSystem& bands, int class_id) {
  return bands.classes[class_id].inverse_id < class_id;
}

/// All rotations of all enumerated bands (used for band-freeness tests).
inline std::vector<Word> all_band_rotations(const BandSystem& bands) {
  std::vector<Word> out;
  for (auto& bc : bands.classes)
    for (auto& r : detail::word_rotations(bc.repr)) out.push_back(r);
  return out;
}

/// Does w contain any band rotation as a (contiguous) substring?
inline bool contains_band_rotation(const BandSystem& bands, const Word& w) {
  for (auto& bc : bands.classes) {
    size_t L = bc.repr.size();
    if (L > w.size()) continue;
    for (size_t i = 0; i + L <= w.size(); ++i) {
      Word sub;
      sub.letters.assign(w.letters.begin() + i, w.letters.begin() + i + L);
      for (int k = 0; k < (int)L; ++k)
        if (rotate_left(sub, k) == bc.repr) goto found;
      continue;
    found:
      return true;
    }
  }
  return false;
}

}  // namespace stringz
