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

#include <variant>

#include "stringz/bridge.hpp"
#include "stringz/wordexpr.hpp"

namespace stringz {

// ---------------------------------------------------------------------------
// Point descriptors
// ---------------------------------------------------------------------------

enum class PointKind {
  FiniteString,
  FiniteBand,
  InfString,
  Prufer,
  Adic,
  Generic,
};

enum class ModuleShape { DirectSum, DirectProduct, Mixed };

/// Tagged descriptor of an indecomposable pure-injective.
struct SpectrumPoint {
  PointKind kind = PointKind::FiniteString;
  Word word;              // FiniteString
  InfiniteWord inf;       // InfString
  int class_id = -1;      // band-backed kinds
  std::string param;      // opaque quasisimple / eigenvalue label
  int size = 1;           // FiniteBand: n >= 1

  friend bool operator==(const SpectrumPoint& a, const SpectrumPoint& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case PointKind::FiniteString: return a.word == b.word;
      case PointKind::InfString: return a.inf == b.inf;
      case PointKind::FiniteBand:
        return a.class_id == b.class_id && a.param == b.param &&
               a.size == b.size;
      case PointKind::Prufer:
      case PointKind::Adic:
        return a.class_id == b.class_id && a.param == b.param;
      case PointKind::Generic: return a.class_id == b.class_id;
    }
    return false;
  }
};

inline const char* point_kind_name(PointKind k) {
  switch (k) {
    case PointKind::FiniteString: return "finite-string";
    case PointKind::FiniteBand: return "finite-band";
    case PointKind::InfString: return "infinite-string";
    case PointKind::Prufer: return "prufer";
    case PointKind::Adic: return "adic";
    case PointKind::Generic: return "generic";
  }
  return "?";
}

struct RankReport {
  bool defined = true;  // false means undefined (∞), non-domestic only
  int rank = 0;
  std::string rule;  // which recipe fixed the value
  int s = 0, t = 0;  // the indents entering the formula
  std::string trace;
};

// ---------------------------------------------------------------------------
// Point expressions
// ---------------------------------------------------------------------------
//
//   string:[ <word> ]           band:[ <band word> ]@<label>#<n>
//   prufer:[ <band word> ]@<label>       adic:[ <band word> ]@<label>
//   generic:[ <band word> ]

inline SpectrumPoint parse_point(const Presentation& p,
                                 const BandSystem& bands,
                                 const std::string& expr) {
  auto fail = [&](const std::string& m) -> SpectrumPoint {
    throw std::invalid_argument("bad point expression '" + expr + "': " + m);
  };
  size_t colon = expr.find(':');
  if (colon == std::string::npos) return fail("missing ':'");
  std::string kind = expr.substr(0, colon);
  size_t lb = expr.find('[', colon);
  size_t rb = expr.rfind(']');
  if (lb == std::string::npos || rb == std::string::npos || rb < lb)
    return fail("missing [ ... ]");
  std::string inner = expr.substr(lb + 1, rb - lb - 1);
  std::string suffix = expr.substr(rb + 1);

  auto band_class = [&](const std::string& text) {
    Word b = parse_finite_word(p, text);
    auto br = canonical_band(p, bands, b);
    if (!br) fail("'" + text + "' is not a band rotation");
    return br->class_id;
  };
  auto label_of = [&](bool allow_size) {
    std::string label;
    int n = 1;
    size_t at = suffix.find('@');
    if (at == std::string::npos) fail("missing @<label>");
    size_t hash = suffix.find('#');
    if (hash != std::string::npos) {
      if (!allow_size) fail("unexpected #<n>");
      label = suffix.substr(at + 1, hash - at - 1);
      n = std::atoi(suffix.c_str() + hash + 1);
      if (n < 1) fail("size must be >= 1");
    } else {
      if (allow_size) fail("missing #<n>");
      label = suffix.substr(at + 1);
    }
    if (label.empty()) fail("empty label");
    return std::make_pair(label, n);
  };

  SpectrumPoint pt;
  if (kind == "string") {
    InfiniteWord w = parse_word_expr(p, inner);
    w = canonical_infword(p, w);
    if (w.finite()) {
      pt.kind = PointKind::FiniteString;
      pt.word = w.core;
    } else {
      pt.kind = PointKind::InfString;
      for (auto t : {w.left_tail, w.right_tail})
        if (t && !canonical_band(p, bands, *t))
          fail("tail is not a band rotation");
      pt.inf = w;
    }
  } else if (kind == "band") {
    auto [label, n] = label_of(true);
    pt.kind = PointKind::FiniteBand;
    pt.class_id = band_class(inner);
    pt.param = label;
    pt.size = n;
  } else if (kind == "prufer" || kind == "adic") {
    auto [label, n] = label_of(false);
    (void)n;
    pt.kind = kind == "prufer" ? PointKind::Prufer : PointKind::Adic;
    pt.class_id = band_class(inner);
    pt.param = label;
  } else if (kind == "generic") {
    pt.kind = PointKind::Generic;
    pt.class_id = band_class(inner);
  } else {
    fail("unknown point kind '" + kind + "'");
  }
  return pt;
}

inline std::string print_point(const Presentation& p, const BandSystem& bands,
                               const SpectrumPoint& pt) {
  switch (pt.kind) {
    case PointKind::FiniteString:
      return "string:[" + print_word(p, pt.word) + "]";
    case PointKind::InfString:
      return "string:[" + print_infword(p, pt.inf) + "]";
    case PointKind::FiniteBand:
      return "band:[" + print_word(p, bands.classes[pt.class_id].repr) + "]@" +
             pt.param + "#" + std::to_string(pt.size);
    case PointKind::Prufer:
      return "prufer:[" + print_word(p, bands.classes[pt.class_id].repr) +
             "]@" + pt.param;
    case PointKind::Adic:
      return "adic:[" + print_word(p, bands.classes[pt.class_id].repr) + "]@" +
             pt.param;
    case PointKind::Generic:
      return "generic:[" + print_word(p, bands.classes[pt.class_id].repr) +
             "]";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Ranks
// ---------------------------------------------------------------------------

namespace detail {

/// Cyclic class of a tail rotation; throws when the tail is not a band.
inline int tail_class(const Presentation& p, const BandSystem& bands,
                      const Word& tail) {
  auto br = canonical_band(p, bands, tail);
  if (!br) throw std::invalid_argument("tail is not a band rotation");
  return br->class_id;
}

}  // namespace detail

/// Cantor–Bendixson rank of a point over a domestic algebra.  Finite
/// points are the isolated ones; the infinite-dimensional kinds follow the
/// bridge-quiver recipes, with the trace recording the indents used.
inline RankReport cb_rank(const Presentation& p, const BandSystem& bands,
                          const BridgeQuiver& q, const SpectrumPoint& pt) {
  if (!bands.domestic)
    throw std::invalid_argument("ranks require a domestic algebra");
  RankReport r;
  auto fmt = [&](const std::string& rule, int s, int t, int rank) {
    r.rule = rule;
    r.s = s;
    r.t = t;
    r.rank = rank;
    r.trace = rule + ": s=" + std::to_string(s) + ",t=" + std::to_string(t);
  };
  switch (pt.kind) {
    case PointKind::FiniteString:
    case PointKind::FiniteBand:
      r.rank = 0;
      r.rule = "isolated";
      r.trace = "isolated: finite-dimensional point";
      return r;
    case PointKind::InfString: {
      InfiniteWord w = canonical_infword(p, pt.inf);
      if (w.left_infinite()) w = canonical_infword(p, invert_infword(w));
      if (w.right_infinite()) {
        int cls = detail::tail_class(p, bands, *w.right_tail);
        int t = indent(q, cls, IndentFilter::All);
        fmt("1stringrank", 0, t, t + 1);
        return r;
      }
      // two-sided: s from the left terminal band, t from the right
      int lcls = detail::tail_class(p, bands, *w.left_tail);
      int rcls = detail::tail_class(p, bands, *w.right_tail);
      int s = indent(q, bands.classes[lcls].inverse_id, IndentFilter::All);
      int t = indent(q, rcls, IndentFilter::All);
      // orientation invariance: the inverted word gives the same sum
      {
        int s2 = indent(q, bands.classes[rcls].id, IndentFilter::All);
        int t2 = indent(q, bands.classes[lcls].inverse_id, IndentFilter::All);
        assert(s2 + t2 == s + t);
      }
      fmt("2stringrank", s, t, s + t + 2);
      return r;
    }
    case PointKind::Prufer: {
      int b = pt.class_id, bi = bands.classes[b].inverse_id;
      int s = indent(q, b, IndentFilter::Ascending);
      int t = indent(q, bi, IndentFilter::Ascending);
      fmt("bandsprufer", s, t, s + t + 1);
      return r;
    }
    case PointKind::Adic: {
      int b = pt.class_id, bi = bands.classes[b].inverse_id;
      int s = indent(q, b, IndentFilter::Descending);
      int t = indent(q, bi, IndentFilter::Descending);
      fmt("bandsadic", s, t, s + t + 1);
      return r;
    }
    case PointKind::Generic: {
      int b = pt.class_id, bi = bands.classes[b].inverse_id;
      int s = indent(q, bi, IndentFilter::All);  // left indent
      int t = indent(q, b, IndentFilter::All);   // right indent
      fmt("genc", s, t, s + t + 2);
      return r;
    }
  }
  return r;
}

/// Krull–Gabriel dimension: undefined for non-domestic algebras, 0 without
/// bands, otherwise (longest bridge-quiver path) + 2.
inline std::optional<int> kg_dimension(const Presentation& p) {
  BandSystem bands = enumerate_bands(p);
  if (!bands.domestic) return std::nullopt;
  if (bands.classes.empty()) return 0;
  BridgeQuiver q = bridge_quiver(p, bands);
  return longest_path(q) + 2;
}

/// m-dimension of a 1-sided infinite string, computed through the rank
/// correspondence for the associated point.
inline int mdim_string(const Presentation& p, const BandSystem& bands,
                       const BridgeQuiver& q, const InfiniteWord& w,
                       RankReport* report = nullptr) {
  InfiniteWord c = canonical_infword(p, w);
  if (c.finite()) {
    if (report) {
      report->rank = 0;
      report->rule = "isolated";
      report->trace = "finite interval: m-dimension 0";
    }
    return 0;
  }
  if (c.two_sided())
    throw std::invalid_argument("string m-dimension expects a 1-sided word");
  SpectrumPoint pt;
  pt.kind = PointKind::InfString;
  pt.inf = c;
  RankReport r = cb_rank(p, bands, q, pt);
  r.trace = "mdim equals point rank; " + r.trace;
  if (report) *report = r;
  return r.rank;
}

// ---------------------------------------------------------------------------
// Elementary duality
// ---------------------------------------------------------------------------

/// Letter-wise opposite: same arrow names in the same order with every
/// direction flipped; a word over p becomes a word over opposite(p).
inline Word flip_word(const Word& w) {
  Word r = w;
  for (auto& l : r.letters) l.inv = !l.inv;
  return r;
}

inline InfiniteWord flip_infword(const InfiniteWord& w) {
  InfiniteWord r;
  r.core = flip_word(w.core);
  if (w.left_tail) r.left_tail = flip_word(*w.left_tail);
  if (w.right_tail) r.right_tail = flip_word(*w.right_tail);
  return r;
}

/// Elementary dual of a point, as a point over the opposite presentation.
/// Prüfer and adic swap; string words flip letter directions; parameters
/// are transported untouched (they are opaque labels).
inline SpectrumPoint dual_point(const Presentation& p,
                                const BandSystem& bands,
                                const Presentation& op,
                                const BandSystem& op_bands,
                                const SpectrumPoint& pt) {
  (void)p;
  auto dual_class = [&](int cls) {
    Word flipped = flip_word(bands.classes[cls].repr);
    auto br = canonical_band(op, op_bands, flipped);
    if (!br)
      throw std::logic_error("dual band not found over the opposite algebra");
    return br->class_id;
  };
  SpectrumPoint d;
  d.param = pt.param;
  d.size = pt.size;
  switch (pt.kind) {
    case PointKind::FiniteString:
      d.kind = PointKind::FiniteString;
      d.word = flip_word(pt.word);
      break;
    case PointKind::InfString:
      d.kind = PointKind::InfString;
      d.inf = canonical_infword(op, flip_infword(pt.inf));
      break;
    case PointKind::FiniteBand:
      d.kind = PointKind::FiniteBand;
      d.class_id = dual_class(pt.class_id);
      break;
    case PointKind::Prufer:
      d.kind = PointKind::Adic;
      d.class_id = dual_class(pt.class_id);
      break;
    case PointKind::Adic:
      d.kind = PointKind::Prufer;
      d.class_id = dual_class(pt.class_id);
      break;
    case PointKind::Generic:
      d.kind = PointKind::Generic;
      d.class_id = dual_class(pt.class_id);
      break;
  }
  return d;
}

// ---------------------------------------------------------------------------
// Neighbourhood bases
// ---------------------------------------------------------------------------

enum class NbhdResult { Member, NotMember, NotCovered };

namespace detail {

/// Rotate the tail phase of an infinite word so each tail is written with a
/// band representative of the canonical form (direct first, inverse last);
/// the phase remainder moves into the core.  Needed so the cutoff words
/// w_n = b0^n c b^n are built from genuine bands.
inline InfiniteWord form_phase(const Presentation& p, const BandSystem& bands,
                               const InfiniteWord& w0) {
  InfiniteWord w = canonical_infword(p, w0);
  if (w.left_tail) {
    auto br = canonical_band(p, bands, *w.left_tail);
    if (!br) throw std::invalid_argument("left tail is not a band rotation");
    // ^∞(t) = ^∞(repr) · t[off+1..] with repr = rotate_left(t, off)
    if (br->offset != 0) {
      Word rem = subword(p, *w.left_tail, br->offset + 1,
                         w.left_tail->size() - br->offset);
      w.core = concat(rem, w.core);
    }
    *w.left_tail = bands.classes[br->class_id].repr;
  }
  if (w.right_tail) {
    auto br = canonical_band(p, bands, *w.right_tail);
    if (!br) throw std::invalid_argument("right tail is not a band rotation");
    Word rem = subword(p, *w.right_tail, 1, br->offset);
    w.core = concat(w.core, rem);
    *w.right_tail = bands.classes[br->class_id].repr;
  }
  return w;
}

/// Normalise an InfString candidate to carry a right tail when 1-sided.
inline InfiniteWord rightward(const Presentation& p, const InfiniteWord& w0) {
  InfiniteWord w = canonical_infword(p, w0);
  if (w.left_infinite()) w = canonical_infword(p, invert_infword(w));
  return w;
}

inline bool same_equiv_class(const BandSystem& bands, int a, int b) {
  return a == b || bands.classes[a].inverse_id == b;
}

/// Does host y contain, as an image substring, a factor fragment of ^∞r^∞
/// containing n full periods of r?  The fragment may extend beyond r^n on
/// either side; its ends must sit after a direct letter and before an
/// inverse letter of the periodic word, while the adjacent letters of y, if
/// any, point toward the occurrence.
template <typename Host>
inline bool hosts_periodic_fragment(const Presentation& p, const Word& r,
                                    int n, const Host& host, int periods,
                                    bool image_in_y) {
  (void)p;
  detail::HostView v;
  if constexpr (std::is_same_v<Host, Word>)
    v = detail::expand_host(host);
  else
    v = detail::expand_host(host, periods);
  long N = (long)v.letters.size();
  long m = (long)r.size();
  Word rn = repeat_word(r, n);
  auto y_at = [&](long idx) -> std::optional<Letter> {
    if (idx < 0) {
      if (!v.left_open) return std::nullopt;
      long P = v.left_period;
      return v.letters[((idx % P) + P) % P];
    }
    if (idx >= N) {
      if (!v.right_open) return std::nullopt;
      long P = v.right_period;
      return v.letters[N - P + ((idx - N) % P)];
    }
    return v.letters[idx];
  };
  auto per_at = [&](long k) {  // letter of ...rrr... at signed offset k,
    return r.letters[((k % m) + m) % m];  // offset 0 = first letter of r^n
  };
  for (long i = 0; i + (long)rn.size() <= N; ++i) {
    bool match = true;
    for (long k = 0; k < (long)rn.size() && match; ++k)
      match = (v.letters[i + k] == rn.letters[k]);
    if (!match) continue;
    // extend left to the fragment boundary
    bool left_ok = false;
    for (long k = 0;; ++k) {
      auto yl = y_at(i - 1 - k);
      Letter pl = per_at(-1 - k);
      bool y_matches = yl && *yl == pl;
      bool boundary_period = image_in_y ? !pl.inv : pl.inv;
      bool boundary_y =
          !yl || (image_in_y ? yl->inv : !yl->inv);
      if (boundary_period && boundary_y) {
        left_ok = true;
        break;
      }
      if (!y_matches) break;  // cannot extend further; no boundary here
      if (k > (long)(N + 2 * m)) break;  // periodic forever: no boundary
    }
    if (!left_ok) continue;
    bool right_ok = false;
    long e = i + (long)rn.size();  // first index after the matched block
    for (long k = 0;; ++k) {
      auto yr = y_at(e + k);
      Letter pr = per_at((long)rn.size() + k);
      bool y_matches = yr && *yr == pr;
      bool boundary_period = image_in_y ? pr.inv : !pr.inv;
      bool boundary_y = !yr || (image_in_y ? !yr->inv : yr->inv);
      if (boundary_period && boundary_y) {
        right_ok = true;
        break;
      }
      if (!y_matches) break;
      if (k > (long)(N + 2 * m)) break;
    }
    if (right_ok) return true;
  }
  return false;
}

}  // namespace detail

/// Membership of a candidate point in the n-th basic neighbourhood of a
/// center.  Pairs the underlying theory does not address yield NotCovered.
inline NbhdResult in_basic_nbhd(const Presentation& p, const BandSystem& bands,
                                const BridgeQuiver& q,
                                const SpectrumPoint& center, int n,
                                const SpectrumPoint& cand) {
  (void)q;
  if (n < 1) throw std::invalid_argument("neighbourhood index must be >= 1");
  auto is_band_kind = [](PointKind k) {
    return k == PointKind::FiniteBand || k == PointKind::Prufer ||
           k == PointKind::Adic || k == PointKind::Generic;
  };
  auto is_string_kind = [](PointKind k) {
    return k == PointKind::FiniteString || k == PointKind::InfString;
  };

  switch (center.kind) {
    case PointKind::FiniteString:
    case PointKind::FiniteBand:
      throw std::invalid_argument(
          "neighbourhood bases are provided for infinite-dimensional points");

    case PointKind::InfString: {
      InfiniteWord w = detail::form_phase(
          p, bands, detail::rightward(p, center.inf));
      if (w.two_sided()) {
        // w_n = b0^n c b^n; members are the string modules containing it as
        // an image substring; the set separates the center from all band
        // modules.
        if (is_band_kind(cand.kind)) return NbhdResult::NotMember;
        Word wn = concat(repeat_word(*w.left_tail, n),
                         concat(w.core, repeat_word(*w.right_tail, n)));
        bool in = false;
        if (cand.kind == PointKind::FiniteString)
          in = !image_occurrences(p, wn, cand.word).empty();
        else
          in = !image_occurrences(p, wn, detail::rightward(p, cand.inf),
                                  (int)wn.size() + 3)
                    .empty();
        return in ? NbhdResult::Member : NbhdResult::NotMember;
      }
      // 1-sided: w_n = c b^n as an initial image substring
      if (is_band_kind(cand.kind)) return NbhdResult::NotCovered;
      Word wn = concat(w.core, repeat_word(*w.right_tail, n));
      auto initial_in = [&](auto&& host) {
        for (auto& o : image_occurrences(p, wn, host, (int)wn.size() + 3))
          if (o.pos == 1 && !o.inverted) return true;
        return false;
      };
      bool in = false;
      if (cand.kind == PointKind::FiniteString) {
        for (auto& o : image_occurrences(p, wn, cand.word))
          if (o.pos == 1 && !o.inverted) in = true;
        Word iw = invert_word(cand.word);
        for (auto& o : image_occurrences(p, wn, iw))
          if (o.pos == 1 && !o.inverted) in = true;
      } else {
        InfiniteWord y = detail::rightward(p, cand.inf);
        if (y.right_infinite()) in = initial_in(y);
        // two-sided candidates have no initial position
      }
      return in ? NbhdResult::Member : NbhdResult::NotMember;
    }

    case PointKind::Prufer: {
      int b = center.class_id;
      if (cand.kind == PointKind::FiniteBand) {
        if (!detail::same_equiv_class(bands, cand.class_id, b) ||
            cand.param != center.param)
          return NbhdResult::NotMember;
        return cand.size >= n ? NbhdResult::Member : NbhdResult::NotMember;
      }
      if (cand.kind == PointKind::Prufer)
        return (detail::same_equiv_class(bands, cand.class_id, b) &&
                cand.param == center.param)
                   ? NbhdResult::Member
                   : NbhdResult::NotMember;
      if (is_band_kind(cand.kind)) return NbhdResult::NotMember;
      // string candidates: image occurrence of a factor fragment of ^∞b^∞
      // around c^n, c the inverse-first direct-last rotation of b
      Word repr = bands.classes[b].repr;
      std::optional<Word> c;
      for (auto& r : detail::word_rotations(repr))
        if (r.letters.front().inv && !r.letters.back().inv) {
          if (!c || word_less(p, r, *c)) c = r;
        }
      if (!c) throw std::logic_error("band without an inverse-first rotation");
      bool in = false;
      if (cand.kind == PointKind::FiniteString)
        in = detail::hosts_periodic_fragment(p, *c, n, cand.word, 0, true) ||
             detail::hosts_periodic_fragment(p, invert_word(*c), n,
                                             cand.word, 0, true);
      else {
        InfiniteWord y = detail::rightward(p, cand.inf);
        int span = n * (int)c->size() + 3;
        in = detail::hosts_periodic_fragment(p, *c, n, y, span, true) ||
             detail::hosts_periodic_fragment(p, invert_word(*c), n, y, span,
                                             true);
      }
      return in ? NbhdResult::Member : NbhdResult::NotMember;
    }

    case PointKind::Adic: {
      int b = center.class_id;
      if (cand.kind == PointKind::FiniteBand) {
        if (!detail::same_equiv_class(bands, cand.class_id, b) ||
            cand.param != center.param)
          return NbhdResult::NotMember;
        return cand.size >= n ? NbhdResult::Member : NbhdResult::NotMember;
      }
      if (cand.kind == PointKind::Adic)
        return (detail::same_equiv_class(bands, cand.class_id, b) &&
                cand.param == center.param)
                   ? NbhdResult::Member
                   : NbhdResult::NotMember;
      if (is_band_kind(cand.kind)) return NbhdResult::NotMember;
      // dual condition: factor occurrence in y of an image fragment x'b^n x''
      Word repr = bands.classes[b].repr;
      bool in = false;
      if (cand.kind == PointKind::FiniteString)
        in = detail::hosts_periodic_fragment(p, repr, n, cand.word, 0,
                                             false) ||
             detail::hosts_periodic_fragment(p, invert_word(repr), n,
                                             cand.word, 0, false);
      else {
        InfiniteWord y = detail::rightward(p, cand.inf);
        int span = n * (int)repr.size() + 3;
        in = detail::hosts_periodic_fragment(p, repr, n, y, span, false) ||
             detail::hosts_periodic_fragment(p, invert_word(repr), n, y,
                                             span, false);
      }
      return in ? NbhdResult::Member : NbhdResult::NotMember;
    }

    case PointKind::Generic: {
      int b = center.class_id;
      if (is_band_kind(cand.kind)) {
        if (!detail::same_equiv_class(bands, cand.class_id, b))
          return NbhdResult::NotMember;
        if (cand.kind == PointKind::FiniteBand)
          return cand.size >= n ? NbhdResult::Member : NbhdResult::NotMember;
        return NbhdResult::Member;  // all infinite-dimensional b-band points
      }
      if (!is_string_kind(cand.kind)) return NbhdResult::NotCovered;
      // string modules containing b^n as an image subword
      bool in = false;
      for (int cls : {b, bands.classes[b].inverse_id}) {
        for (auto& r : detail::word_rotations(bands.classes[cls].repr)) {
          Word rn = repeat_word(r, n);
          if (cand.kind == PointKind::FiniteString) {
            if (!image_occurrences(p, rn, cand.word).empty()) in = true;
          } else {
            if (!image_occurrences(p, rn, detail::rightward(p, cand.inf),
                                   (int)rn.size() + 3)
                     .empty())
              in = true;
          }
          if (in) break;
        }
        if (in) break;
      }
      return in ? NbhdResult::Member : NbhdResult::NotMember;
    }
  }
  return NbhdResult::NotCovered;
}

// ---------------------------------------------------------------------------
// Bounded point enumeration
// ---------------------------------------------------------------------------

struct EnumBounds {
  int max_word_len = 4;
  int max_band_power = 2;
  int max_prefix = 4;
};

namespace detail {

inline void all_strings_upto(const Presentation& p, int maxlen, Word& cur,
                             std::vector<Word>& out) {
  out.push_back(cur);
  if ((int)cur.size() >= maxlen) return;
  Letter last = cur.letters.back();
  for (int a = 0; a < (int)p.arrows.size(); ++a) {
    for (bool inv : {false, true}) {
      Letter m{a, inv};
      if (letter_left(p, m) != letter_right(p, last)) continue;
      cur.letters.push_back(m);
      if (is_string(p, cur)) all_strings_upto(p, maxlen, cur, out);
      cur.letters.pop_back();
    }
  }
}

inline std::string serial_inf(const Presentation& p, const InfiniteWord& w) {
  return print_infword(p, w);
}

}  // namespace detail

/// All finite strings of p up to the given length (including the empty
/// words, one per vertex), in canonical order.
inline std::vector<Word> all_strings(const Presentation& p, int maxlen) {
  std::vector<Word> out;
  for (int v = 0; v < (int)p.vertices.size(); ++v)
    out.push_back(make_empty_word(v, +1));
  for (int a = 0; a < (int)p.arrows.size(); ++a) {
    for (bool inv : {false, true}) {
      Word w;
      w.letters.push_back({a, inv});
      if (is_string(p, w) && maxlen >= 1)
        detail::all_strings_upto(p, maxlen, w, out);
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const Word& x, const Word& y) { return word_less(p, x, y); });
  return out;
}

/// Deterministic bounded listing of spectrum points with their ranks:
/// finite strings to the length bound (modulo inversion), symbolic band
/// entries per class, infinite strings with band-free bounded cores (modulo
/// inversion), and the Prüfer/adic/generic points per class.
inline std::vector<std::pair<SpectrumPoint, RankReport>> enumerate_points(
    const Presentation& p, const BandSystem& bands, const BridgeQuiver& q,
    const EnumBounds& bounds) {
  if (!bands.domestic)
    throw std::invalid_argument("enumeration requires a domestic algebra");
  std::vector<std::pair<SpectrumPoint, RankReport>> out;
  auto push = [&](SpectrumPoint pt) {
    out.push_back({pt, cb_rank(p, bands, q, pt)});
  };

  // finite strings modulo inversion
  for (auto& w : all_strings(p, bounds.max_word_len)) {
    Word iw = invert_word(w);
    if (word_less(p, iw, w)) continue;
    SpectrumPoint pt;
    pt.kind = PointKind::FiniteString;
    pt.word = w;
    push(pt);
  }

  // finite band modules, symbolic parameter, per equivalence class
  for (auto& bc : bands.classes) {
    if (is_inverted_class(bands, bc.id)) continue;
    for (int nn = 1; nn <= bounds.max_band_power; ++nn) {
      SpectrumPoint pt;
      pt.kind = PointKind::FiniteBand;
      pt.class_id = bc.id;
      pt.param = "s";
      pt.size = nn;
      push(pt);
    }
  }

  // infinite strings with band-free bounded cores, modulo inversion
  std::vector<Word> cores = band_free_strings(p, bands);
  std::set<std::string> seen;
  std::vector<std::pair<std::string, SpectrumPoint>> infs;
  auto consider = [&](const InfiniteWord& w) {
    InfiniteWord c;
    try {
      c = canonical_infword(p, w);
    } catch (const std::invalid_argument&) {
      return;  // completely periodic
    }
    std::string k1 = detail::serial_inf(p, c);
    std::string k2 = detail::serial_inf(p, canonical_infword(
                                                p, invert_infword(c)));
    std::string key = std::min(k1, k2);
    if (!seen.insert(key).second) return;
    SpectrumPoint pt;
    pt.kind = PointKind::InfString;
    pt.inf = k1 <= k2 ? c : canonical_infword(p, invert_infword(c));
    infs.push_back({key, pt});
  };
  for (auto& bc : bands.classes) {
    for (auto& core : cores) {
      if ((int)core.size() > bounds.max_prefix) continue;
      InfiniteWord w;
      w.core = core;
      w.right_tail = bc.repr;
      if (!infword_problem(p, w)) consider(w);
    }
    for (auto& bc2 : bands.classes) {
      for (auto& core : cores) {
        if ((int)core.size() > bounds.max_prefix) continue;
        InfiniteWord w;
        w.left_tail = bc.repr;
        w.core = core;
        w.right_tail = bc2.repr;
        if (!infword_problem(p, w)) consider(w);
      }
    }
  }
  std::sort(infs.begin(), infs.end(),
            [](auto& a, auto& b) { return a.first < b.first; });
  for (auto& [k, pt] : infs) push(pt);

  // band-infinite points per equivalence class
  for (auto kind : {PointKind::Prufer, PointKind::Adic, PointKind::Generic}) {
    for (auto& bc : bands.classes) {
      if (is_inverted_class(bands, bc.id)) continue;
      SpectrumPoint pt;
      pt.kind = kind;
      pt.class_id = bc.id;
      if (kind != PointKind::Generic) pt.param = "s";
      push(pt);
    }
  }
  return out;
}

}  // namespace stringz
