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

// Presentations of the torus braid group B_n(T^2) (Zariski generators
// s1..s{n-1}, a1, a2) and of the Artin braid group B_n, the permutation
// epimorphism s_i -> (i i+1), a_k -> 1, and the pure-subgroup normal series.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tbl/perm.hpp"
#include "tbl/words.hpp"

namespace tbl {

enum class BraidKind { TorusZariski, ArtinPlane };

struct BraidFamily {
  BraidKind kind = BraidKind::TorusZariski;
  std::size_t n = 2;
};

/// A labelled block of consecutive relators in a braid presentation.
struct RelatorFamily {
  std::string label;  // "commute", "braid", "a-commute", "square", "long", "twist"
  std::size_t first = 0;
  std::size_t count = 0;
};

/// Relators, in order:
///   commute    s_i s_j = s_j s_i              1 <= i < j <= n-1, j - i >= 2
///   braid      s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}        i = 1..n-2
///   a-commute  s_i a_k = a_k s_i                  k = 1,2; i = 2..n-1
///   square     (s1^-1 a_k)^2 = (a_k s1^-1)^2                 k = 1,2
///   long       s1..s_{n-2} s_{n-1}^2 s_{n-2}..s1 = a1 a2^-1 a1^-1 a2
///   twist      a2 s1^-1 a1^-1 s1 a2^-1 s1^-1 a1 s1 = s1^2
/// Each relation L = R is stored as the reduced word L R^-1.
Presentation zariski_presentation(std::size_t n);
std::vector<RelatorFamily> zariski_relator_families(std::size_t n);

/// Generators s1..s{n-1}; relators: the commute and braid families.
Presentation artin_presentation(std::size_t n);
std::vector<RelatorFamily> artin_relator_families(std::size_t n);

Presentation braid_presentation(const BraidFamily& family);

/// s_i -> (i i+1); a1, a2 -> identity.
PermHomomorphism mu_homomorphism(std::size_t n);
/// The standard epimorphism B_n -> S(n), s_i -> (i i+1).
PermHomomorphism artin_permutation_map(std::size_t n);

/// Generator of B_n -> word over the Zariski generators (same name).
std::map<std::string, Word> artin_inclusion_words(std::size_t n);
/// Image of a B_n word under the inclusion.
Word apply_artin_inclusion(const Word& w, std::size_t n);

struct SeriesFactor {
  enum class Kind { Free, Abelian } kind = Kind::Free;
  std::size_t rank = 0;
  std::string label() const;  // "F_3", "Z^2"
};

struct NormalSeriesReport {
  std::size_t n = 0;
  /// Bottom to top: "{1}", "P_{1;n-1}", ..., "P_{n-1;1}", "P_{n;0}".
  std::vector<std::string> chain;
  /// factors[k] = chain[k+1] / chain[k].
  std::vector<SeriesFactor> factors;
};

/// P_{n-m;m} is the pure braid group of n-m strands on the torus with m
/// punctures. Consecutive quotients are fundamental groups of punctured
/// tori: P_{n-m;m} / P_{n-m-1;m+1} = pi_1(T^2 minus m points) = F_{m+1} for
/// m >= 1, P_{1;n-1} = F_n, and the top quotient is pi_1(T^2) = Z^2.
NormalSeriesReport normal_series_factors(std::size_t n);

}  // namespace tbl
