// Copyright 2026 The tbl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tbl/words.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "tbl/error.hpp"

namespace tbl {

Word free_reduce_unchecked(std::span<const Letter> letters) {
  Word w;
  auto& out = w.letters_;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return w;
}

Word free_reduce(std::span<const Letter> letters, std::size_t generator_count) {
  for (const Letter& l : letters) {
    if (l.gen >= generator_count) {
      throw InputError("generator index " + std::to_string(l.gen) + " out of range (" +
                       std::to_string(generator_count) + " generators)");
    }
    if (l.exp != 1 && l.exp != -1) {
      throw InputError("letter exponent must be +1 or -1");
    }
  }
  return free_reduce_unchecked(letters);
}

Word word_inverse(const Word& w) {
  std::vector<Letter> inv;
  inv.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) inv.push_back(inverse(*it));
  return free_reduce_unchecked(inv);
}

Word word_concat(const Word& a, const Word& b) {
  std::vector<Letter> all(a.letters().begin(), a.letters().end());
  all.insert(all.end(), b.letters().begin(), b.letters().end());
  return free_reduce_unchecked(all);
}

Word cyclic_reduce(const Word& w) {
  auto s = w.letters();
  std::size_t lo = 0;
  std::size_t hi = s.size();
  while (hi - lo >= 2 && s[lo].gen == s[hi - 1].gen && s[lo].exp == -s[hi - 1].exp) {
    ++lo;
    --hi;
  }
  return free_reduce_unchecked(s.subspan(lo, hi - lo));
}

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)) {
  std::unordered_set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.empty()) throw InputError("generator names must be nonempty");
    if (g.find_first_of(" \t\n^") != std::string::npos) {
      throw InputError("generator name '" + g + "' contains whitespace or '^'");
    }
    if (!seen.insert(g).second) throw InputError("duplicate generator name '" + g + "'");
  }
  relators_.reserve(relators.size());
  for (const auto& r : relators) relators_.push_back(free_reduce(r.letters(), generators_.size()));
}

std::optional<std::size_t> Presentation::index_of(std::string_view name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generators_.begin());
}

Word parse_word(std::string_view text, const Presentation& p) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::int8_t exp = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      const std::string suffix = tok.substr(caret);
      if (suffix == "^-1") {
        exp = -1;
      } else if (suffix != "^1" && suffix != "^+1") {
        throw InputError("bad exponent in token '" + tok + "'");
      }
      tok.resize(caret);
    }
    auto idx = p.index_of(tok);
    if (!idx) throw InputError("unknown generator '" + tok + "'");
    letters.push_back({static_cast<std::uint32_t>(*idx), exp});
  }
  return p.word(letters);
}

std::string format_word(const Word& w, const Presentation& p) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += p.generators().at(w[k].gen);
    if (w[k].exp < 0) out += "^-1";
  }
  return out;
}

}  // namespace tbl
