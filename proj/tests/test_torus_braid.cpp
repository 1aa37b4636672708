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

#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "tbl/coset.hpp"
#include "tbl/error.hpp"
#include "tbl/torus_braid.hpp"

using namespace tbl;

namespace {

// Family sizes straight from the index ranges.
std::map<std::string, std::size_t> expected_family_sizes(std::size_t n) {
  std::size_t commute = 0;
  for (std::size_t i = 1; i <= n - 1; ++i) {
    for (std::size_t j = i + 2; j <= n - 1; ++j) ++commute;
  }
  return {{"commute", commute}, {"braid", n - 2}, {"a-commute", 2 * (n - 2)}, {"square", 2}, {"long", 1}, {"twist", 1}};
}

Word relation(const Presentation& p, const std::string& lhs, const std::string& rhs) {
  return word_concat(parse_word(lhs, p), word_inverse(parse_word(rhs, p)));
}

}  // namespace

TEST_CASE("generators") {
  const Presentation p = zariski_presentation(5);
  CHECK(p.generators() == std::vector<std::string>{"s1", "s2", "s3", "s4", "a1", "a2"});
  CHECK(artin_presentation(5).generators() == std::vector<std::string>{"s1", "s2", "s3", "s4"});
  CHECK_THROWS_AS(zariski_presentation(1), InputError);
  CHECK_THROWS_AS(zariski_presentation(17), InputError);
}

TEST_CASE("relator families match their index ranges") {
  for (std::size_t n = 3; n <= 9; ++n) {
    const auto expect = expected_family_sizes(n);
    std::size_t total = 0;
    std::size_t next = 0;
    for (const auto& f : zariski_relator_families(n)) {
      CHECK(f.count == expect.at(f.label));
      CHECK(f.first == next);
      next += f.count;
      total += f.count;
    }
    CHECK(zariski_presentation(n).relator_count() == total);
    CHECK(artin_presentation(n).relator_count() == expect.at("commute") + expect.at("braid"));
  }
  CHECK(zariski_presentation(5).relator_count() == 16);
  CHECK(artin_presentation(5).relator_count() == 6);
}

TEST_CASE("relators are L R^-1 of the defining relations") {
  const Presentation p = zariski_presentation(4);
  const auto& r = p.relators();
  CHECK(r[0] == relation(p, "s1 s3", "s3 s1"));
  CHECK(r[1] == relation(p, "s1 s2 s1", "s2 s1 s2"));
  CHECK(r[2] == relation(p, "s2 s3 s2", "s3 s2 s3"));
  CHECK(r[3] == relation(p, "s2 a1", "a1 s2"));
  CHECK(r[7] == relation(p, "s1^-1 a1 s1^-1 a1", "a1 s1^-1 a1 s1^-1"));
  CHECK(r[9] == relation(p, "s1 s2 s3 s3 s2 s1", "a1 a2^-1 a1^-1 a2"));
  CHECK(r[10] == relation(p, "a2 s1^-1 a1^-1 s1 a2^-1 s1^-1 a1 s1", "s1 s1"));
  CHECK(r.size() == 11);
}

TEST_CASE("artin inclusion keeps generator names") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto images = artin_inclusion_words(n);
    const Presentation a = artin_presentation(n);
    const Presentation z = zariski_presentation(n);
    for (const auto& g : a.generators()) CHECK(format_word(images.at(g), z) == g);
    // Artin relators land on the first zariski relators, verbatim.
    for (std::size_t k = 0; k < a.relator_count(); ++k) {
      CHECK(apply_artin_inclusion(a.relators()[k], n) == z.relators()[k]);
    }
  }
}

TEST_CASE("normal series") {
  auto labels = [](std::size_t n) {
    std::vector<std::string> out;
    for (const auto& f : normal_series_factors(n).factors) out.push_back(f.label());
    return out;
  };
  CHECK(labels(2) == std::vector<std::string>{"F_2", "Z^2"});
  CHECK(labels(3) == std::vector<std::string>{"F_3", "F_2", "Z^2"});
  CHECK(labels(5) == std::vector<std::string>{"F_5", "F_4", "F_3", "F_2", "Z^2"});
  const NormalSeriesReport r = normal_series_factors(4);
  CHECK(r.chain.size() == 5);
  CHECK(r.chain.front() == "{1}");
  CHECK(r.chain.back() == "P_{4;0}");
  CHECK(r.factors.back().kind == SeriesFactor::Kind::Abelian);
}

TEST_CASE("normal series ranks bound the computed abelianization of the pure subgroup") {
  // rank H1(G) <= sum of ranks of consecutive quotients of any normal series.
  for (std::size_t n = 2; n <= 4; ++n) {
    std::size_t bound = 0;
    for (const auto& f : normal_series_factors(n).factors) bound += f.rank;
    const AbelianInvariants h1 =
        kernel_abelianization(zariski_presentation(n), mu_homomorphism(n), TransversalStrategy::Bfs);
    CHECK(h1.torsion.empty());
    CHECK(h1.free_rank == 2 * n);
    CHECK(h1.free_rank <= bound);
    CHECK(h1.free_rank >= 2);
  }
}
