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

#include <boost/multiprecision/cpp_int.hpp>

#include "stringz/bands.hpp"

namespace stringz {

using Rat = boost::multiprecision::cpp_rational;

struct RatMatrix {
  int rows = 0, cols = 0;
  std::vector<Rat> a;
  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}
  Rat& at(int i, int j) { return a[(size_t)i * cols + j]; }
  const Rat& at(int i, int j) const { return a[(size_t)i * cols + j]; }
  bool is_zero() const {
    for (auto& x : a)
      if (x != 0) return false;
    return true;
  }
};

inline RatMatrix mat_mul(const RatMatrix& A, const RatMatrix& B) {
  RatMatrix C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      if (A.at(i, k) == 0) continue;
      for (int j = 0; j < B.cols; ++j) C.at(i, j) += A.at(i, k) * B.at(k, j);
    }
  return C;
}

/// Rank by fraction-free-ish Gaussian elimination over the rationals.
inline int mat_rank(RatMatrix M) {
  int r = 0;
  for (int c = 0; c < M.cols && r < M.rows; ++c) {
    int piv = -1;
    for (int i = r; i < M.rows; ++i)
      if (M.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < M.cols; ++j) std::swap(M.at(piv, j), M.at(r, j));
    Rat d = M.at(r, c);
    for (int i = r + 1; i < M.rows; ++i) {
      if (M.at(i, c) == 0) continue;
      Rat f = M.at(i, c) / d;
      for (int j = c; j < M.cols; ++j) M.at(i, j) -= f * M.at(r, j);
    }
    ++r;
  }
  return r;
}

/// Explicit matrix representation: per-vertex dimensions and one exact
/// rational matrix per arrow (rows at the target, columns at the source).
struct ExplicitModule {
  std::vector<int> dims;           // per vertex
  std::vector<RatMatrix> action;   // per arrow
  std::string provenance;

  bool relations_annihilate(const Presentation& p) const {
    for (auto& rel : p.relations) {
      // rel is composition order {a, b, ...}: apply rightmost first
      RatMatrix m = action[rel.back()];
      for (int k = (int)rel.size() - 2; k >= 0; --k)
        m = mat_mul(action[rel[k]], m);
      if (!m.is_zero()) return false;
    }
    return true;
  }
};

/// String module M(w): a one-dimensional space at every basis position of
/// the walk, arrows acting along the word letters.
inline ExplicitModule build_module(const Presentation& p, const Word& w) {
  if (!is_string(p, w))
    throw std::invalid_argument("not a string; no module to build");
  ExplicitModule m;
  m.dims.assign(p.vertices.size(), 0);
  int k = (int)w.size();
  // basis position i = 0..k sits at vertex trace[i]
  std::vector<int> vtx(k + 1), slot(k + 1);
  for (int i = 0; i <= k; ++i) {
    vtx[i] = (i == 0) ? word_left(p, w) : letter_right(p, w.letters[i - 1]);
    slot[i] = m.dims[vtx[i]]++;
  }
  for (int a = 0; a < (int)p.arrows.size(); ++a)
    m.action.emplace_back(m.dims[p.arrows[a].tgt], m.dims[p.arrows[a].src]);
  for (int i = 1; i <= k; ++i) {
    Letter l = w.letters[i - 1];
    if (!l.inv)  // arrow maps position i to position i-1
      m.action[l.arrow].at(slot[i - 1], slot[i]) = 1;
    else  // arrow maps position i-1 to position i
      m.action[l.arrow].at(slot[i], slot[i - 1]) = 1;
  }
  return m;
}

/// Band module M(b, λ, n): K^n at every position of one turn around the
/// band, identity maps along the letters and an n×n Jordan block with
/// eigenvalue λ at the final inverse letter (the twist).
inline ExplicitModule build_band_module(const Presentation& p, const Word& b,
                                        const Rat& lambda, int n) {
  if (lambda == 0) throw std::invalid_argument("band parameter must be nonzero");
  if (n < 1) throw std::invalid_argument("band module size must be >= 1");
  if (b.empty() || b.letters.front().inv || !b.letters.back().inv ||
      word_left(p, b) != word_right(p, b) ||
      !is_string(p, repeat_word(b, 2)))
    throw std::invalid_argument("not a band representative");
  ExplicitModule m;
  m.dims.assign(p.vertices.size(), 0);
  int k = (int)b.size();
  std::vector<int> vtx(k), base(k);
  for (int i = 0; i < k; ++i) {
    vtx[i] = letter_left(p, b.letters[i]);
    base[i] = m.dims[vtx[i]];
    m.dims[vtx[i]] += n;
  }
  for (int a = 0; a < (int)p.arrows.size(); ++a)
    m.action.emplace_back(m.dims[p.arrows[a].tgt], m.dims[p.arrows[a].src]);
  auto block = [&](int arrow, int row_base, int col_base, bool jordan) {
    RatMatrix& A = m.action[arrow];
    for (int i = 0; i < n; ++i) {
      if (jordan) {
        A.at(row_base + i, col_base + i) = lambda;
        if (i + 1 < n) A.at(row_base + i, col_base + i + 1) = 1;
      } else {
        A.at(row_base + i, col_base + i) = 1;
      }
    }
  };
  for (int i = 1; i <= k; ++i) {
    Letter l = b.letters[i - 1];
    int lo = i - 1;  // position before the letter
    int hi = i % k;  // position after the letter (wraps to the start)
    if (!l.inv)
      block(l.arrow, base[lo], base[hi], false);  // arrow sends hi to lo
    else
      block(l.arrow, base[hi], base[lo], i == k);  // lo to hi; twist at wrap
  }
  return m;
}

/// One graph map between finite string modules: a factor substring of the
/// source matched with an equal (up to inversion) image substring of the
/// target.
struct GraphMap {
  Word mediator;
  Occurrence factor_in_source;
  Occurrence image_in_target;
  bool inverted = false;
};

/// Count the graph maps from M(u) to M(v).  Inverted matches are counted
/// once: occurrences are compared by position, and a mediator can never
/// equal its own inverse.
inline long graph_map_count(const Presentation& p, const Word& u,
                            const Word& v,
                            std::vector<GraphMap>* maps = nullptr) {
  long count = 0;
  auto emit = [&](const Word& d, const Occurrence& f, const Occurrence& i,
                  bool inverted) {
    ++count;
    if (maps) maps->push_back({d, f, i, inverted});
  };
  // letter mediators: enumerate all subword ranges of u that are factor
  // occurrences, then match image occurrences of the same subword in v
  for (size_t len = 1; len <= u.size(); ++len) {
    for (size_t pos = 1; pos + len - 1 <= u.size(); ++pos) {
      Word d = subword(p, u, pos, len);
      bool have_f = false;
      Occurrence fo;
      for (auto& f : factor_occurrences(p, d, u))
        if (f.pos == (long)pos && !f.inverted) {
          have_f = true;
          fo = f;
        }
      if (!have_f) continue;
      for (auto& i : image_occurrences(p, d, v)) emit(d, fo, i, i.inverted);
    }
  }
  // empty mediators: simple modules between factor and image basis slots
  for (long qf = 0; qf <= (long)u.size(); ++qf) {
    Word d = subword(p, u, qf + 1, 0);
    bool have_f = false;
    Occurrence fo;
    for (auto& f : factor_occurrences(p, d, u))
      if (f.pos == qf) {
        have_f = true;
        fo = f;
      }
    if (!have_f) continue;
    for (auto& i : image_occurrences(p, d, v)) emit(d, fo, i, false);
  }
  return count;
}

/// Dimension of Hom(A, B) by exact linear algebra: the intertwiner
/// equations f_t(a) A(a) = B(a) f_s(a) over all arrows, solved over Q.
inline long hom_dim_oracle(const Presentation& p, const ExplicitModule& A,
                           const ExplicitModule& B) {
  // unknowns: one matrix f_v per vertex, B.dims[v] x A.dims[v]
  std::vector<int> offset(p.vertices.size() + 1, 0);
  for (int v = 0; v < (int)p.vertices.size(); ++v)
    offset[v + 1] = offset[v] + A.dims[v] * B.dims[v];
  int unknowns = offset.back();
  if (unknowns == 0) return 0;
  auto idx = [&](int v, int r, int c) {  // f_v entry (r, c), r < B.dims[v]
    return offset[v] + r * A.dims[v] + c;
  };
  std::vector<std::vector<Rat>> rows;
  for (int a = 0; a < (int)p.arrows.size(); ++a) {
    int s = p.arrows[a].src, t = p.arrows[a].tgt;
    // f_t * A(a) - B(a) * f_s = 0, entrywise (i < B.dims[t], j < A.dims[s])
    for (int i = 0; i < B.dims[t]; ++i) {
      for (int j = 0; j < A.dims[s]; ++j) {
        std::vector<Rat> row(unknowns);
        for (int k = 0; k < A.dims[t]; ++k)
          row[idx(t, i, k)] += A.action[a].at(k, j);
        for (int k = 0; k < B.dims[s]; ++k)
          row[idx(s, k, j)] -= B.action[a].at(i, k);
        rows.push_back(std::move(row));
      }
    }
  }
  if (rows.empty()) return unknowns;
  RatMatrix M((int)rows.size(), unknowns);
  for (int i = 0; i < (int)rows.size(); ++i)
    for (int j = 0; j < unknowns; ++j) M.at(i, j) = rows[i][j];
  return unknowns - mat_rank(std::move(M));
}

}  // namespace stringz
