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

#include "tbl/torus_braid.hpp"

#include "tbl/error.hpp"

namespace tbl {

namespace {

void require_strands(std::size_t n) {
  if (n < 2) throw InputError("braid groups need n >= 2 strands, got " + std::to_string(n));
  if (n > Permutation::kMaxDegree) {
    throw InputError("n above " + std::to_string(Permutation::kMaxDegree) + " is not supported");
  }
}

// Letter builders; s(i) is the 1-based sigma_i, a(k) the 1-based a_k.
struct Alphabet {
  std::size_t n;
  Letter s(std::size_t i, int e = 1) const { return {static_cast<std::uint32_t>(i - 1), static_cast<std::int8_t>(e)}; }
  Letter a(std::size_t k, int e = 1) const {
    return {static_cast<std::uint32_t>(n - 1 + (k - 1)), static_cast<std::int8_t>(e)};
  }
};

// L * R^-1, freely reduced.
Word relation(const std::vector<Letter>& lhs, const std::vector<Letter>& rhs) {
  std::vector<Letter> all = lhs;
  for (auto it = rhs.rbegin(); it != rhs.rend(); ++it) all.push_back(inverse(*it));
  return free_reduce_unchecked(all);
}

struct Builder {
  std::vector<Word> relators;
  std::vector<RelatorFamily> families;

  void begin(std::string label) { families.push_back({std::move(label), relators.size(), 0}); }
  void add(Word w) {
    relators.push_back(std::move(w));
    ++families.back().count;
  }
};

void add_artin_families(Builder& b, const Alphabet& x) {
  const std::size_t n = x.n;
  b.begin("commute");
  for (std::size_t i = 1; i <= n - 1; ++i) {
    for (std::size_t j = i + 2; j <= n - 1; ++j) b.add(relation({x.s(i), x.s(j)}, {x.s(j), x.s(i)}));
  }
  b.begin("braid");
  for (std::size_t i = 1; i + 1 <= n - 1; ++i) {
    b.add(relation({x.s(i), x.s(i + 1), x.s(i)}, {x.s(i + 1), x.s(i), x.s(i + 1)}));
  }
}

Builder build_zariski(std::size_t n) {
  require_strands(n);
  const Alphabet x{n};
  Builder b;
  add_artin_families(b, x);

  b.begin("a-commute");
  for (std::size_t k = 1; k <= 2; ++k) {
    for (std::size_t i = 2; i <= n - 1; ++i) b.add(relation({x.s(i), x.a(k)}, {x.a(k), x.s(i)}));
  }

  b.begin("square");
  for (std::size_t k = 1; k <= 2; ++k) {
    b.add(relation({x.s(1, -1), x.a(k), x.s(1, -1), x.a(k)}, {x.a(k), x.s(1, -1), x.a(k), x.s(1, -1)}));
  }

  b.begin("long");
  std::vector<Letter> lhs;
  for (std::size_t i = 1; i <= n - 2; ++i) lhs.push_back(x.s(i));
  lhs.push_back(x.s(n - 1));
  lhs.push_back(x.s(n - 1));
  for (std::size_t i = n - 2; i >= 1; --i) lhs.push_back(x.s(i));
  b.add(relation(lhs, {x.a(1), x.a(2, -1), x.a(1, -1), x.a(2)}));

  b.begin("twist");
  b.add(relation({x.a(2), x.s(1, -1), x.a(1, -1), x.s(1), x.a(2, -1), x.s(1, -1), x.a(1), x.s(1)},
                 {x.s(1), x.s(1)}));
  return b;
}

std::vector<std::string> sigma_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n - 1; ++i) names.push_back("s" + std::to_string(i));
  return names;
}

}  // namespace

Presentation zariski_presentation(std::size_t n) {
  Builder b = build_zariski(n);
  auto names = sigma_names(n);
  names.emplace_back("a1");
  names.emplace_back("a2");
  return Presentation(std::move(names), std::move(b.relators));
}

std::vector<RelatorFamily> zariski_relator_families(std::size_t n) { return build_zariski(n).families; }

Presentation artin_presentation(std::size_t n) {
  require_strands(n);
  Builder b;
  add_artin_families(b, Alphabet{n});
  return Presentation(sigma_names(n), std::move(b.relators));
}

std::vector<RelatorFamily> artin_relator_families(std::size_t n) {
  require_strands(n);
  Builder b;
  add_artin_families(b, Alphabet{n});
  return b.families;
}

Presentation braid_presentation(const BraidFamily& family) {
  return family.kind == BraidKind::TorusZariski ? zariski_presentation(family.n) : artin_presentation(family.n);
}

PermHomomorphism mu_homomorphism(std::size_t n) {
  Presentation p = zariski_presentation(n);
  std::vector<Permutation> images;
  for (std::size_t i = 1; i <= n - 1; ++i) {
    images.push_back(Permutation::transposition(n, static_cast<int>(i), static_cast<int>(i + 1)));
  }
  images.emplace_back(n);
  images.emplace_back(n);
  return PermHomomorphism(std::move(p), n, std::move(images));
}

PermHomomorphism artin_permutation_map(std::size_t n) {
  Presentation p = artin_presentation(n);
  std::vector<Permutation> images;
  for (std::size_t i = 1; i <= n - 1; ++i) {
    images.push_back(Permutation::transposition(n, static_cast<int>(i), static_cast<int>(i + 1)));
  }
  return PermHomomorphism(std::move(p), n, std::move(images));
}

std::map<std::string, Word> artin_inclusion_words(std::size_t n) {
  require_strands(n);
  const Presentation target = zariski_presentation(n);
  std::map<std::string, Word> out;
  for (const auto& name : sigma_names(n)) {
    const Letter l{static_cast<std::uint32_t>(*target.index_of(name)), 1};
    out.emplace(name, target.word(std::span<const Letter>(&l, 1)));
  }
  return out;
}

Word apply_artin_inclusion(const Word& w, std::size_t n) {
  require_strands(n);
  // s_i keeps its index: the Zariski generator list starts with s1..s{n-1}.
  for (const Letter& l : w.letters()) {
    if (l.gen >= n - 1) throw InputError("letter is not a generator of B_n");
  }
  return free_reduce(w.letters(), n + 1);
}

std::string SeriesFactor::label() const {
  if (kind == Kind::Abelian) return "Z^" + std::to_string(rank);
  return "F_" + std::to_string(rank);
}

NormalSeriesReport normal_series_factors(std::size_t n) {
  if (n < 2) throw InputError("normal series needs n >= 2, got " + std::to_string(n));
  NormalSeriesReport r;
  r.n = n;
  r.chain.emplace_back("{1}");
  for (std::size_t s = n - 1; s >= 1; --s) {
    r.chain.push_back("P_{" + std::to_string(n - s) + ";" + std::to_string(s) + "}");
  }
  r.chain.push_back("P_{" + std::to_string(n) + ";0}");
  // P_{n-m;m} / P_{n-m-1;m+1} for m = n-1 (bottom, quotient by {1}) down to 1.
  for (std::size_t m = n - 1; m >= 1; --m) r.factors.push_back({SeriesFactor::Kind::Free, m + 1});
  r.factors.push_back({SeriesFactor::Kind::Abelian, 2});
  return r;
}

}  // namespace tbl
