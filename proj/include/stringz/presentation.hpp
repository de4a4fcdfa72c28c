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

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace stringz {

/// A quiver arrow.  Vertices are indices into Presentation::vertices.
struct Arrow {
  std::string name;
  int src = -1;
  int tgt = -1;
};

/// A quiver with monomial relations.  Relations are stored as arrow-id
/// sequences in right-to-left composition order: {a, b} means "first b,
/// then a" (the path a∘b).
struct Presentation {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::vector<int>> relations;

  // lexicographic rank of each arrow name, used for all canonical orderings
  std::vector<int> arrow_lex_rank;

  int vertex_id(const std::string& v) const {
    for (int i = 0; i < (int)vertices.size(); ++i)
      if (vertices[i] == v) return i;
    return -1;
  }
  int arrow_id(const std::string& a) const {
    for (int i = 0; i < (int)arrows.size(); ++i)
      if (arrows[i].name == a) return i;
    return -1;
  }
  int max_relation_length() const {
    int m = 2;
    for (auto& r : relations) m = std::max(m, (int)r.size());
    return m;
  }

  void finalize() {
    arrow_lex_rank.assign(arrows.size(), 0);
    std::vector<int> idx(arrows.size());
    for (int i = 0; i < (int)idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return arrows[a].name < arrows[b].name;
    });
    for (int r = 0; r < (int)idx.size(); ++r) arrow_lex_rank[idx[r]] = r;
  }

  /// True iff the arrow-id path (composition order) lies in the relation
  /// ideal, i.e. contains some relation as a contiguous subpath.
  bool path_in_ideal(const std::vector<int>& path) const {
    for (auto& r : relations) {
      if (r.size() > path.size()) continue;
      for (size_t i = 0; i + r.size() <= path.size(); ++i) {
        if (std::equal(r.begin(), r.end(), path.begin() + i)) return true;
      }
    }
    return false;
  }
};

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", col " +
                           std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
};

namespace detail {

struct Tok {
  std::string text;
  int col;
};

inline std::vector<Tok> tokenize_line(const std::string& line) {
  std::vector<Tok> out;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace((unsigned char)line[i])) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    size_t j = i;
    if (line[i] == ',' || line[i] == ':') {
      j = i + 1;
    } else if (line.compare(i, 2, "->") == 0) {
      j = i + 2;
    } else {
      while (j < line.size() && !std::isspace((unsigned char)line[j]) &&
             line[j] != ',' && line[j] != ':' && line[j] != '#' &&
             line.compare(j, 2, "->") != 0)
        ++j;
    }
    out.push_back({line.substr(i, j - i), (int)i + 1});
    i = j;
  }
  return out;
}

}  // namespace detail

/// Parse the line-oriented presentation DSL:
///
///   algebra <name>
///   vertices: v1 v2 ...
///   arrows: a: v -> w , b: v -> w , ...
///   relations: a b , c d e , ...     # right-to-left composition order
///
/// Comments start with '#'.  Sections may repeat; missing sections are empty.
inline Presentation parse_presentation(const std::string& text) {
  Presentation p;
  bool saw_algebra = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::set<std::string> vnames, anames;

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::tokenize_line(line);
    if (toks.empty()) continue;
    const std::string& head = toks[0].text;

    if (head == "algebra") {
      if (toks.size() != 2)
        throw ParseError("expected: algebra <name>", lineno, toks[0].col);
      p.name = toks[1].text;
      saw_algebra = true;
    } else if (head == "vertices") {
      if (toks.size() < 2 || toks[1].text != ":")
        throw ParseError("expected ':' after 'vertices'", lineno, toks[0].col);
      for (size_t i = 2; i < toks.size(); ++i) {
        if (toks[i].text == ",") continue;
        if (!vnames.insert(toks[i].text).second)
          throw ParseError("duplicate vertex '" + toks[i].text + "'", lineno,
                           toks[i].col);
        p.vertices.push_back(toks[i].text);
      }
    } else if (head == "arrows") {
      if (toks.size() < 2 || toks[1].text != ":")
        throw ParseError("expected ':' after 'arrows'", lineno, toks[0].col);
      size_t i = 2;
      while (i < toks.size()) {
        if (toks[i].text == ",") {
          ++i;
          continue;
        }
        // name : src -> tgt
        if (i + 4 >= toks.size() || toks[i + 1].text != ":" ||
            toks[i + 3].text != "->")
          throw ParseError("expected arrow of the form 'a: v -> w'", lineno,
                           toks[i].col);
        const std::string& an = toks[i].text;
        if (!anames.insert(an).second)
          throw ParseError("duplicate arrow name '" + an + "'", lineno,
                           toks[i].col);
        int s = p.vertex_id(toks[i + 2].text);
        if (s < 0)
          throw ParseError("unknown vertex '" + toks[i + 2].text + "'", lineno,
                           toks[i + 2].col);
        int t = p.vertex_id(toks[i + 4].text);
        if (t < 0)
          throw ParseError("unknown vertex '" + toks[i + 4].text + "'", lineno,
                           toks[i + 4].col);
        p.arrows.push_back({an, s, t});
        i += 5;
      }
    } else if (head == "relations") {
      if (toks.size() < 2 || toks[1].text != ":")
        throw ParseError("expected ':' after 'relations'", lineno,
                         toks[0].col);
      std::vector<int> rel;
      int relcol = 0;
      auto flush = [&](int col) {
        if (rel.empty()) return;
        if (rel.size() < 2)
          throw ParseError(
              "relation of length 1; remove the arrow instead of relating it",
              lineno, col);
        // composability: {a,b} means a∘b, so tgt(b) must equal src(a)
        for (size_t k = 0; k + 1 < rel.size(); ++k) {
          if (p.arrows[rel[k + 1]].tgt != p.arrows[rel[k]].src)
            throw ParseError("relation path is not composable", lineno, col);
        }
        p.relations.push_back(rel);
        rel.clear();
      };
      for (size_t i = 2; i < toks.size(); ++i) {
        if (toks[i].text == ",") {
          flush(relcol);
          continue;
        }
        int a = -1;
        for (int k = 0; k < (int)p.arrows.size(); ++k)
          if (p.arrows[k].name == toks[i].text) a = k;
        if (a < 0)
          throw ParseError("relation mentions unknown arrow '" + toks[i].text +
                               "'",
                           lineno, toks[i].col);
        if (rel.empty()) relcol = toks[i].col;
        rel.push_back(a);
      }
      flush(relcol);
    } else {
      throw ParseError("unexpected token '" + head + "'", lineno, toks[0].col);
    }
  }
  if (!saw_algebra) throw ParseError("missing 'algebra <name>' line", 1, 1);
  p.finalize();
  return p;
}

inline std::string serialize_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "algebra " << p.name << "\n";
  out << "vertices:";
  for (auto& v : p.vertices) out << " " << v;
  out << "\n";
  if (!p.arrows.empty()) {
    out << "arrows: ";
    for (size_t i = 0; i < p.arrows.size(); ++i) {
      if (i) out << " , ";
      out << p.arrows[i].name << ": " << p.vertices[p.arrows[i].src] << " -> "
          << p.vertices[p.arrows[i].tgt];
    }
    out << "\n";
  }
  if (!p.relations.empty()) {
    out << "relations: ";
    for (size_t i = 0; i < p.relations.size(); ++i) {
      if (i) out << " , ";
      for (size_t k = 0; k < p.relations[i].size(); ++k) {
        if (k) out << " ";
        out << p.arrows[p.relations[i][k]].name;
      }
    }
    out << "\n";
  }
  return out.str();
}

/// One failed string-algebra axiom.
struct Violation {
  std::string axiom;  // stable identifier, e.g. "out-degree"
  std::string where;  // vertex or arrow name
};

namespace detail {

// Finite-dimensionality scan: nonzero paths form a finite automaton whose
// states are relation-free path windows of length < max relation length.
// An oriented cycle among states means arbitrarily long nonzero paths.
inline bool has_infinite_path(const Presentation& p) {
  int R = p.max_relation_length();
  // state: window of at most R-1 arrow ids (most recent path suffix,
  // composition order grows to the left: path a∘b stored {a,b}; we extend
  // paths on the left).  Extending path w by arrow a gives a∘w.
  std::map<std::vector<int>, int> id;
  std::vector<std::vector<int>> states;
  std::vector<std::vector<int>> succ;
  auto intern = [&](const std::vector<int>& w) {
    auto it = id.find(w);
    if (it != id.end()) return it->second;
    int n = (int)states.size();
    id[w] = n;
    states.push_back(w);
    succ.emplace_back();
    return n;
  };
  for (int a = 0; a < (int)p.arrows.size(); ++a) intern({a});
  for (int s = 0; s < (int)states.size(); ++s) {
    std::vector<int> w = states[s];
    for (int a = 0; a < (int)p.arrows.size(); ++a) {
      if (p.arrows[a].src != p.arrows[w[0]].tgt) continue;
      std::vector<int> ext;
      ext.push_back(a);
      ext.insert(ext.end(), w.begin(), w.end());
      if (p.path_in_ideal(ext)) continue;
      if ((int)ext.size() > R - 1) ext.resize(R - 1);
      int t = intern(ext);  // may reallocate succ
      succ[s].push_back(t);
    }
  }
  // cycle detection
  std::vector<int> color(states.size(), 0);
  std::function<bool(int)> dfs = [&](int u) -> bool {
    color[u] = 1;
    for (int v : succ[u]) {
      if (color[v] == 1) return true;
      if (color[v] == 0 && dfs(v)) return true;
    }
    color[u] = 2;
    return false;
  };
  for (int s = 0; s < (int)states.size(); ++s)
    if (color[s] == 0 && dfs(s)) return true;
  return false;
}

}  // namespace detail

/// Check the string-algebra axioms.  Returns the complete violation list;
/// empty means the presentation is a (finite-dimensional) string algebra.
inline std::vector<Violation> string_algebra_violations(const Presentation& p) {
  std::vector<Violation> out;
  for (int v = 0; v < (int)p.vertices.size(); ++v) {
    int in = 0, outd = 0;
    for (auto& a : p.arrows) {
      if (a.tgt == v) ++in;
      if (a.src == v) ++outd;
    }
    if (in > 2) out.push_back({"in-degree", p.vertices[v]});
    if (outd > 2) out.push_back({"out-degree", p.vertices[v]});
  }
  for (int a = 0; a < (int)p.arrows.size(); ++a) {
    int left = 0, right = 0;  // b with b∘a nonzero / c with a∘c nonzero
    for (int b = 0; b < (int)p.arrows.size(); ++b) {
      if (p.arrows[b].src == p.arrows[a].tgt &&
          !p.path_in_ideal({b, a}))
        ++left;
      if (p.arrows[b].tgt == p.arrows[a].src &&
          !p.path_in_ideal({a, b}))
        ++right;
    }
    if (left > 1) out.push_back({"unique-continuation-left", p.arrows[a].name});
    if (right > 1)
      out.push_back({"unique-continuation-right", p.arrows[a].name});
  }
  if (detail::has_infinite_path(p))
    out.push_back({"infinite-dimensional", p.name});
  return out;
}

inline bool is_string_algebra(const Presentation& p) {
  return string_algebra_violations(p).empty();
}

/// Reverse all arrows and all relation sequences.  The opposite of the
/// opposite equals the original up to nothing at all: orderings are kept.
inline Presentation opposite_presentation(const Presentation& p) {
  Presentation q;
  q.name = p.name;
  q.vertices = p.vertices;
  for (auto& a : p.arrows) q.arrows.push_back({a.name, a.tgt, a.src});
  for (auto& r : p.relations) {
    std::vector<int> rr(r.rbegin(), r.rend());
    q.relations.push_back(rr);
  }
  q.finalize();
  return q;
}

}  // namespace stringz
