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

// Reidemeister-Schreier rewriting for the kernel of a homomorphism into a
// finite permutation group. The coset table is read off the regular action
// of the image group, so no coset enumeration is needed.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tbl/matrix.hpp"
#include "tbl/perm.hpp"
#include "tbl/words.hpp"

namespace tbl {

inline constexpr std::uint64_t kDefaultDegreeBound = 3628800;  // 10!

class CosetTable {
 public:
  std::size_t degree() const { return elements_.size(); }
  std::size_t generator_count() const { return base_.generator_count(); }
  const Presentation& base() const { return base_; }

  /// Coset reached from c by the letter g^exp.
  std::uint32_t act(std::uint32_t c, Letter l) const {
    const auto& t = l.exp > 0 ? forward_ : backward_;
    return t[static_cast<std::size_t>(c) * generator_count() + l.gen];
  }
  std::uint32_t trace(std::uint32_t c, const Word& w) const;

  /// Image-group element labelling coset c; coset 0 is the identity.
  const Permutation& element(std::uint32_t c) const { return elements_[c]; }

 private:
  friend CosetTable regular_coset_table(const Presentation&, const PermHomomorphism&, std::uint64_t);
  Presentation base_;
  std::vector<Permutation> elements_;
  std::vector<std::uint32_t> forward_;   // degree x gens
  std::vector<std::uint32_t> backward_;  // degree x gens
};

/// Cosets of ker h, enumerated as image elements breadth-first from the
/// identity with generators in index order. Throws InputError if h fails
/// verification or the image order exceeds `degree_bound`.
CosetTable regular_coset_table(const Presentation& p, const PermHomomorphism& h,
                               std::uint64_t degree_bound = kDefaultDegreeBound);

enum class TransversalStrategy { Bfs, Dfs };

struct SchreierTransversal {
  TransversalStrategy strategy = TransversalStrategy::Bfs;
  std::vector<Word> representatives;  // one per coset
  /// Spanning-tree edge into each coset (coset 0 has none): parent and letter.
  std::vector<std::uint32_t> parent;
  std::vector<Letter> via;
};

/// Letters are tried in the order g1, g1^-1, g2, g2^-1, ...; BFS therefore
/// yields shortlex-minimal representatives.
SchreierTransversal schreier_transversal(const CosetTable& t, TransversalStrategy strategy);

struct SubgroupStats {
  std::size_t degree = 0;
  std::size_t schreier_generators = 0;  // after deleting freely trivial ones
  std::size_t relators_rewritten = 0;   // degree x base relators
  std::size_t relators_nonempty = 0;
  std::size_t generators_eliminated = 0;  // by --simplify
};

struct SubgroupPresentation {
  Presentation presentation;
  TransversalStrategy strategy = TransversalStrategy::Bfs;
  /// For each generator of `presentation`: the Schreier pair (coset, base
  /// generator) it stands for.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> origin;
  SubgroupStats stats;
};

/// Schreier generators x_{c,g} = rep(c) g rep(c.g)^-1 (tree edges dropped);
/// relators rep(c) r rep(c)^-1 rewritten for every coset c and relator r,
/// ordered by (coset, relator), cyclically reduced. Empty rewritten relators
/// are dropped.
SubgroupPresentation rewrite_subgroup_presentation(const CosetTable& t, const SchreierTransversal& tr);

/// Word over the base generators that a Schreier generator stands for.
Word schreier_generator_word(const CosetTable& t, const SchreierTransversal& tr, std::uint32_t coset,
                             std::uint32_t gen);

/// Deletes generators killed by length-1 relators, repeatedly.
SubgroupPresentation simplify_unit_relators(SubgroupPresentation sp);

AbelianInvariants kernel_abelianization(const Presentation& p, const PermHomomorphism& h,
                                        TransversalStrategy strategy,
                                        std::uint64_t degree_bound = kDefaultDegreeBound);

std::string to_string(TransversalStrategy s);

}  // namespace tbl
