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

// Permutations of {1..n} and homomorphisms from finitely presented groups
// into symmetric groups.
//
// Composition convention: words act left to right. `a.then(b)` first applies
// a, then b, so eval(u v) = eval(v) o eval(u) as functions. This is the
// right action used by coset tables.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tbl/words.hpp"

namespace tbl {

class Permutation {
 public:
  static constexpr std::size_t kMaxDegree = 16;

  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity
  /// One-line notation, 1-based: images[k-1] = image of k.
  static Permutation from_one_line(std::span<const int> images);
  /// Cycle (c1 c2 ... ck) in degree n, 1-based points.
  static Permutation cycle(std::size_t degree, std::span<const int> points);
  static Permutation transposition(std::size_t degree, int a, int b);

  std::size_t degree() const { return images_.size(); }
  /// 1-based image of a 1-based point.
  int operator()(int point) const { return images_.at(static_cast<std::size_t>(point - 1)) + 1; }
  std::span<const std::uint8_t> zero_based() const { return images_; }

  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Packs the permutation into 64 bits (4 bits per point).
  std::uint64_t key() const;
  std::vector<int> one_line() const;
  /// Disjoint-cycle notation, e.g. "(1 3 2)"; identity prints as "()".
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> images_;  // 0-based
};

struct ImageGroupInfo {
  std::uint64_t order = 0;
  bool transitive = false;
};

/// A generator -> permutation assignment on a presentation. Construction
/// checks arity and degree only; `verify_perm_hom` checks the relators.
class PermHomomorphism {
 public:
  PermHomomorphism(Presentation domain, std::size_t degree, std::vector<Permutation> images);

  const Presentation& domain() const { return domain_; }
  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& images() const { return images_; }

 private:
  Presentation domain_;
  std::size_t degree_;
  std::vector<Permutation> images_;
};

Permutation evaluate_perm(const PermHomomorphism& h, const Word& w);

struct PermHomReport {
  std::vector<std::size_t> violated;  // relator indices
  ImageGroupInfo image;               // filled only when violated is empty
  bool verified() const { return violated.empty(); }
};

PermHomReport verify_perm_hom(const PermHomomorphism& h);

/// Elements of <gens>, breadth-first from the identity, right-multiplying by
/// generators in index order. Throws InputError if the order exceeds bound.
std::vector<Permutation> enumerate_group(std::span<const Permutation> gens, std::size_t degree,
                                         std::uint64_t bound);

/// Order and transitivity of <gens> on {1..degree}.
ImageGroupInfo image_group_info(std::span<const Permutation> gens, std::size_t degree,
                                std::uint64_t bound);

}  // namespace tbl
