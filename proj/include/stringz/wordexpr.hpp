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

#include <cstdlib>
#include <string>

#include "stringz/words.hpp"

namespace stringz {

// Word grammar: letters are arrow names, a trailing '-' inverts, whitespace
// separates letters.  `( ... )^n` is a finite power, `( ... )^inf` a right
// tail, `inf^( ... )` a left tail (tails only at the ends).  `1_<vertex>`
// is the empty word based at that vertex.
//
//   inf^(e d-) e g (a b-)^inf

struct WordExprError : std::runtime_error {
  size_t pos;
  WordExprError(const std::string& msg, size_t pos_)
      : std::runtime_error(msg + " (at offset " + std::to_string(pos_) + ")"),
        pos(pos_) {}
};

namespace detail {

struct WordLexer {
  const std::string& s;
  size_t i = 0;
  explicit WordLexer(const std::string& text) : s(text) {}
  void skip_ws() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  bool peek(const std::string& lit) {
    skip_ws();
    return s.compare(i, lit.size(), lit) == 0;
  }
  bool eat(const std::string& lit) {
    if (!peek(lit)) return false;
    i += lit.size();
    return true;
  }
  std::string ident() {
    skip_ws();
    size_t j = i;
    while (j < s.size() && !std::isspace((unsigned char)s[j]) && s[j] != '(' &&
           s[j] != ')' && s[j] != '^')
      ++j;
    std::string t = s.substr(i, j - i);
    i = j;
    return t;
  }
};

inline Letter parse_letter_token(const Presentation& p, const std::string& t,
                                 size_t pos) {
  bool inv = !t.empty() && t.back() == '-';
  std::string name = inv ? t.substr(0, t.size() - 1) : t;
  int a = p.arrow_id(name);
  if (a < 0) throw WordExprError("unknown arrow '" + name + "'", pos);
  return {a, inv};
}

}  // namespace detail

/// Parse a (possibly infinite) word expression over p.
inline InfiniteWord parse_word_expr(const Presentation& p,
                                    const std::string& text,
                                    bool validate = true) {
  detail::WordLexer lx(text);
  InfiniteWord w;
  bool saw_right_tail = false;
  bool saw_basepoint = false;

  if (lx.eat("inf^")) {
    if (!lx.eat("(")) throw WordExprError("expected '(' after inf^", lx.i);
    Word t;
    while (!lx.peek(")")) {
      if (lx.eof()) throw WordExprError("unterminated left tail", lx.i);
      size_t at = lx.i;
      t.letters.push_back(detail::parse_letter_token(p, lx.ident(), at));
    }
    lx.eat(")");
    w.left_tail = t;
  }
  while (!lx.eof()) {
    if (saw_right_tail)
      throw WordExprError("nothing may follow a right tail", lx.i);
    if (lx.eat("(")) {
      Word grp;
      while (!lx.peek(")")) {
        if (lx.eof()) throw WordExprError("unterminated group", lx.i);
        size_t at = lx.i;
        grp.letters.push_back(detail::parse_letter_token(p, lx.ident(), at));
      }
      lx.eat(")");
      if (!lx.eat("^")) throw WordExprError("expected '^' after group", lx.i);
      if (lx.eat("inf")) {
        if (grp.empty()) throw WordExprError("empty tail group", lx.i);
        w.right_tail = grp;
        saw_right_tail = true;
      } else {
        size_t at = lx.i;
        std::string n = lx.ident();
        char* end = nullptr;
        long k = std::strtol(n.c_str(), &end, 10);
        if (n.empty() || *end != '\0' || k < 0)
          throw WordExprError("expected a power or 'inf'", at);
        for (long r = 0; r < k; ++r)
          w.core.letters.insert(w.core.letters.end(), grp.letters.begin(),
                                grp.letters.end());
      }
    } else {
      size_t at = lx.i;
      std::string t = lx.ident();
      if (t.empty()) throw WordExprError("expected a letter", lx.i);
      if (t.rfind("1_", 0) == 0) {
        std::string vn = t.substr(2);
        int side = +1;
        if (!vn.empty() && (vn.back() == '+' || vn.back() == '-')) {
          side = vn.back() == '+' ? +1 : -1;
          vn.pop_back();
        }
        int v = p.vertex_id(vn);
        if (v < 0) throw WordExprError("unknown vertex '" + vn + "'", at);
        w.core.base_vertex = v;
        w.core.base_side = side;
        saw_basepoint = true;
      } else {
        w.core.letters.push_back(detail::parse_letter_token(p, t, at));
      }
    }
  }
  if (!w.core.empty() && saw_basepoint)
    throw WordExprError("basepoint symbol inside a nonempty word", 0);
  if (w.core.empty() && !saw_basepoint && w.finite())
    throw WordExprError("empty word needs a basepoint (1_<vertex>)", 0);
  if (validate) {
    if (auto prob = infword_problem(p, w))
      throw WordExprError("invalid word: " + *prob, 0);
  }
  if (w.core.empty() && !saw_basepoint && !w.finite()) {
    // fill a basepoint for the empty core from a tail, for uniformity
    if (w.right_tail) w.core = make_empty_word(word_left(p, *w.right_tail));
    else w.core = make_empty_word(word_right(p, *w.left_tail));
  }
  return w;
}

/// Parse a finite word (no tails allowed).
inline Word parse_finite_word(const Presentation& p, const std::string& text,
                              bool validate = true) {
  InfiniteWord w = parse_word_expr(p, text, validate);
  if (!w.finite()) throw WordExprError("expected a finite word", 0);
  return w.core;
}

inline std::string print_word(const Presentation& p, const Word& w) {
  if (w.empty()) {
    std::string s = "1_" + p.vertices[w.base_vertex];
    if (w.base_side < 0) s += "-";
    return s;
  }
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += p.arrows[w.letters[i].arrow].name;
    if (w.letters[i].inv) s += "-";
  }
  return s;
}

inline std::string print_infword(const Presentation& p,
                                 const InfiniteWord& w) {
  std::string s;
  if (w.left_tail) s += "inf^(" + print_word(p, *w.left_tail) + ")";
  if (!w.core.empty()) {
    if (!s.empty()) s += " ";
    s += print_word(p, w.core);
  } else if (w.finite()) {
    s = print_word(p, w.core);
  }
  if (w.right_tail) {
    if (!s.empty()) s += " ";
    s += "(" + print_word(p, *w.right_tail) + ")^inf";
  }
  return s;
}

}  // namespace stringz
