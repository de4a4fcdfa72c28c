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

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "stringz/wordexpr.hpp"

namespace stringz::testing {

inline std::string preset_path(const std::string& name) {
  return std::string(STRINGZ_PRESET_DIR) + "/" + name + ".alg";
}

inline Presentation load_preset(const std::string& name) {
  std::ifstream in(preset_path(name));
  if (!in) throw std::runtime_error("missing preset " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

/// Random valid word of length at most maxlen; may come out empty (with a
/// random basepoint) or shorter when the walk gets stuck.
inline Word random_word(const Presentation& p, std::mt19937& rng, int maxlen) {
  std::uniform_int_distribution<int> lend(0, maxlen);
  int want = lend(rng);
  if (want == 0 || p.arrows.empty()) {
    std::uniform_int_distribution<int> vd(0, (int)p.vertices.size() - 1);
    return make_empty_word(vd(rng), rng() % 2 ? +1 : -1);
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    Word w;
    std::uniform_int_distribution<int> ad(0, (int)p.arrows.size() - 1);
    w.letters.push_back({ad(rng), rng() % 2 == 0});
    if (!is_string(p, w)) continue;
    while ((int)w.size() < want) {
      std::vector<Letter> next;
      for (int a = 0; a < (int)p.arrows.size(); ++a) {
        for (bool inv : {false, true}) {
          Letter m{a, inv};
          if (letter_left(p, m) != letter_right(p, w.letters.back())) continue;
          w.letters.push_back(m);
          if (is_string(p, w)) next.push_back(m);
          w.letters.pop_back();
        }
      }
      if (next.empty()) break;
      w.letters.push_back(next[rng() % next.size()]);
    }
    return w;
  }
  return make_empty_word(0, +1);
}

}  // namespace stringz::testing
