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

#pragma once

// Words in free groups and finite group presentations.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tbl {

struct Letter {
  std::uint32_t gen = 0;
  std::int8_t exp = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) { return {l.gen, static_cast<std::int8_t>(-l.exp)}; }

/// A freely reduced word. Only constructible through `free_reduce` and the
/// helpers below, so the reduced invariant always holds.
class Word {
 public:
  Word() = default;

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t k) const { return letters_[k]; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  friend Word free_reduce(std::span<const Letter>, std::size_t);
  friend Word free_reduce_unchecked(std::span<const Letter>);
  std::vector<Letter> letters_;
};

/// Freely reduces `letters`. Throws InputError if a generator index is not
/// below `generator_count` or an exponent is not +-1.
Word free_reduce(std::span<const Letter> letters, std::size_t generator_count);
/// Same without index validation; callers own the range guarantee.
Word free_reduce_unchecked(std::span<const Letter> letters);

Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b);
/// Conjugate-reduces w: strips matching first/last letter pairs x ... x^-1.
Word cyclic_reduce(const Word& w);

/// Finite presentation <generators | relators>. Names are unique and
/// nonempty; relators are freely reduced but not cyclically reduced.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generators, std::vector<Word> relators);

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  std::size_t generator_count() const { return generators_.size(); }
  std::size_t relator_count() const { return relators_.size(); }

  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Builds a word from raw letters over this presentation's generators.
  Word word(std::span<const Letter> letters) const {
    return free_reduce(letters, generators_.size());
  }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

/// Parses whitespace-separated tokens `name` or `name^-1`.
Word parse_word(std::string_view text, const Presentation& p);
/// Inverse of parse_word; the empty word prints as "".
std::string format_word(const Word& w, const Presentation& p);

}  // namespace tbl
