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

// The complex of differences on the ordered configuration space of n points
// of the torus.
//
// Vertices are differences e_{m;i,j}(q) = m (q_i - q_j) with m in M+ and
// i != j. Two vertices span an edge when their difference is again a
// difference (a "proper remainder"); simplices are the cliques of that graph.
//
// The ground truth for edges is the symbolic oracle, which subtracts the two
// maps as ring-linear combinations of q_1..q_n and asks whether the result
// has the shape u (q_e - q_g) with u a unit. The closed-form rule (same
// marker, exactly one shared index in the same slot) is a fast path checked
// against it.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tbl/perm.hpp"
#include "tbl/torus.hpp"

namespace tbl {

struct Difference {
  std::uint8_t marker = 0;  // index into marker_group(l).positive
  std::uint8_t i = 1;       // 1-based
  std::uint8_t j = 2;

  friend bool operator==(const Difference&, const Difference&) = default;
  friend auto operator<=>(const Difference&, const Difference&) = default;
};

/// Validated constructor.
Difference make_difference(LatticeClass l, std::size_t n, std::size_t marker, std::size_t i, std::size_t j);
std::string to_string(const Difference& d);  // "t:1,3"

/// index -> coefficient, zero coefficients omitted.
using FormalCombination = std::map<std::size_t, RingElement>;

std::string to_string(const FormalCombination& f);

FormalCombination as_formal(LatticeClass l, const Difference& d);
/// mu - nu as a formal combination of q_1..q_n.
FormalCombination formal_difference(LatticeClass l, const Difference& mu, const Difference& nu);
/// Canonical difference if f = u (q_e - q_g) with u a unit; negative units
/// are rewritten as (-u, swapped indices).
std::optional<Difference> is_difference(LatticeClass l, const FormalCombination& f);

/// is_difference(mu - nu). Throws InputError if mu == nu.
std::optional<Difference> proper_remainder_oracle(LatticeClass l, const Difference& mu, const Difference& nu);
/// Same marker and (same first index XOR same second index).
bool proper_remainder_rule(const Difference& mu, const Difference& nu);

/// All differences ordered by (marker, i, j); |M+| n (n-1) of them.
std::vector<Difference> vertex_set(std::size_t n, LatticeClass l);

enum class EdgeSource { Oracle, Rule };

/// Sorted set of vertices.
using Simplex = std::vector<Difference>;

std::string to_string(const Simplex& s);  // "1:1,2;1:1,3"
/// "m:i,j;m:i,j;..." with m in {1, t, t2}; result is sorted.
Simplex parse_simplex(LatticeClass l, std::size_t n, std::string_view text);
/// Same syntax, order preserved (for vertex images).
std::vector<Difference> parse_difference_list(LatticeClass l, std::size_t n, std::string_view text);

/// The proper-remainder graph with bitset adjacency rows.
class DifferenceGraph {
 public:
  DifferenceGraph(std::size_t n, LatticeClass l, EdgeSource source);

  std::size_t n() const { return n_; }
  LatticeClass lattice() const { return lattice_; }
  const std::vector<Difference>& vertices() const { return vertices_; }
  std::size_t index_of(const Difference& d) const;
  bool adjacent(std::size_t u, std::size_t v) const {
    return (adj_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  std::size_t edge_count() const;

  /// All (s+1)-cliques in lexicographic vertex order.
  std::vector<Simplex> simplices(std::size_t s) const;
  /// Largest s with a nonempty set of s-simplices.
  std::size_t max_dimension() const;

 private:
  std::size_t n_;
  LatticeClass lattice_;
  std::vector<Difference> vertices_;
  std::size_t words_;
  std::vector<std::uint64_t> adj_;
};

std::vector<Simplex> enumerate_simplices(std::size_t n, LatticeClass l, std::size_t s,
                                         EdgeSource source = EdgeSource::Oracle);

/// True iff every pair of distinct vertices is an oracle edge.
bool is_simplex(LatticeClass l, const std::vector<Difference>& vertices);

/// e_{m;i,j} -> e_{m;sigma(i),sigma(j)}.
Difference sn_act(const Permutation& sigma, const Difference& d);
Simplex sn_act(const Permutation& sigma, const Simplex& x);
FormalCombination sn_act(const Permutation& sigma, const FormalCombination& f);

enum class NormalShape { Delta, Nabla };
std::string to_string(NormalShape f);

struct NormalForm {
  NormalShape shape = NormalShape::Delta;
  std::size_t marker = 0;
  std::size_t s = 0;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Delta^s_m = {e_{m;1,2},...,e_{m;1,s+2}}, Nabla^s_m = {e_{m;2,1},...,e_{m;s+2,1}}.
Simplex normal_simplex(const NormalForm& f);
std::optional<NormalForm> normal_form_of(const Simplex& x);

struct Normalization {
  Permutation sigma;
  NormalForm form;
};

/// Lexicographically smallest sigma (one-line) carrying x onto its normal
/// form. x must share one marker and one hub index in a fixed slot; a
/// 0-simplex normalizes to Delta^0. Throws StructuralError otherwise.
Normalization normalize_simplex(const Simplex& x, std::size_t n);

struct Orbit {
  Simplex representative;  // first simplex of the orbit in enumeration order
  std::size_t size = 0;
  std::vector<Simplex> normal_simplices;  // s >= 1 only
};

struct OrbitReport {
  std::size_t n = 0;
  LatticeClass lattice = LatticeClass::Generic;
  std::size_t s = 0;
  std::size_t simplex_count = 0;
  std::vector<Orbit> orbits;
};

OrbitReport orbit_classify(std::size_t n, LatticeClass l, std::size_t s, EdgeSource source = EdgeSource::Oracle);

/// lambda o f for f(q) = sigma(sign u q + c): the coefficient sign m u moves
/// to indices (sigma^-1(i), sigma^-1(j)) and is canonicalised. The
/// translation cancels.
Difference induced_vertex_map(LatticeClass l, std::size_t n, const Permutation& sigma, const RingElement& unit,
                              int sign, const Difference& lambda);

struct TameDescriptor {
  Permutation sigma;  // normalizing permutation of the image
  std::size_t marker = 0;
  NormalShape shape = NormalShape::Delta;
};

/// The probe simplex {e_{1;1,2},...,e_{1;1,n}} (marker 1).
Simplex probe_simplex(std::size_t n);

/// image[k] is the image of e_{1;1,k+2}. Throws StructuralError when the
/// image is not an (n-2)-simplex of the oracle complex.
TameDescriptor tame_descriptor(std::size_t n, LatticeClass l, const std::vector<Difference>& image);

struct OrbitCheck {
  std::size_t s = 0;
  std::size_t expected = 0;
  std::size_t observed = 0;
  bool one_normal_per_orbit = true;  // checked for s >= 1
};

struct AuditReport {
  std::size_t n = 0;
  LatticeClass lattice = LatticeClass::Generic;
  /// Vertex pairs (u < v) where rule and oracle disagree.
  std::vector<std::pair<Difference, Difference>> rule_oracle_disagreements;
  /// Oracle simplices violating equal markers / pairwise or total support
  /// intersection of size 1.
  std::vector<std::pair<Simplex, std::string>> structure_violations;
  std::vector<OrbitCheck> orbit_checks;
  std::size_t max_dimension = 0;
  std::size_t expected_max_dimension = 0;

  bool rule_matches_oracle() const { return rule_oracle_disagreements.empty(); }
  bool structure_confirmed() const { return structure_violations.empty(); }
  bool orbits_confirmed() const;
  bool dimension_confirmed() const { return max_dimension == expected_max_dimension; }
  bool confirmed() const {
    return rule_matches_oracle() && structure_confirmed() && orbits_confirmed() && dimension_confirmed();
  }
};

inline constexpr std::size_t kDefaultAuditBound = 6;

AuditReport audit_lemmas(std::size_t n, LatticeClass l, std::size_t bound = kDefaultAuditBound);

}  // namespace tbl
