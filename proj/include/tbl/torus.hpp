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

// Exact arithmetic on the torus T^2 = C / (Z + Z tau).
//
// Three lattice classes are modelled by the multiplication rule for tau:
//   Generic    no complex multiplication; the endomorphism ring is Z
//   Square     tau^2 = -1            (tau = i)
//   Hexagonal  tau^2 = tau - 1       (tau = e^{i pi / 3})
// Ring elements are a + b tau with integer a, b. Points are rational
// coordinates (x, y) over the basis (1, tau), reduced into [0, 1).

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tbl/matrix.hpp"

namespace tbl {

enum class LatticeClass { Generic, Square, Hexagonal };

std::string to_string(LatticeClass l);
LatticeClass parse_lattice(std::string_view name);
inline constexpr std::array<LatticeClass, 3> kAllLattices{LatticeClass::Generic, LatticeClass::Square,
                                                          LatticeClass::Hexagonal};

/// Reduced fraction with positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }

  /// Fractional part, in [0, 1).
  Rational mod1() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::string to_string(const Rational& r);  // "p/q" or "p"
Rational parse_rational(std::string_view text);

struct RingElement {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const RingElement&, const RingElement&) = default;
  friend auto operator<=>(const RingElement&, const RingElement&) = default;
};

/// Validated constructor: b must be 0 on the Generic class.
RingElement ring_element(LatticeClass l, std::int64_t a, std::int64_t b = 0);
RingElement ring_add(const RingElement& x, const RingElement& y);
RingElement ring_sub(const RingElement& x, const RingElement& y);
RingElement ring_neg(const RingElement& x);
RingElement ring_mul(LatticeClass l, const RingElement& x, const RingElement& y);
/// |x|^2: a^2 (Generic), a^2 + b^2 (Square), a^2 + ab + b^2 (Hexagonal).
std::int64_t ring_norm(LatticeClass l, const RingElement& x);
bool is_unit(LatticeClass l, const RingElement& x);

/// "a", "a+b*t", "a-b*t", "b*t", "t", "-t", ...
RingElement parse_ring_element(LatticeClass l, std::string_view text);
std::string to_string(const RingElement& x);

struct MarkerGroup {
  std::vector<RingElement> all;       // the units, positive half first
  std::vector<RingElement> positive;  // units with 0 <= arg < pi
};

/// Generic {1} / Square {1, t} / Hexagonal {1, t, t^2}, plus negatives.
MarkerGroup marker_group(LatticeClass l);

/// Unit u written as sign * positive[index].
struct CanonicalMarker {
  std::size_t index = 0;
  bool negated = false;
};
/// Throws InputError if u is not a unit.
CanonicalMarker canonical_marker(LatticeClass l, const RingElement& u);

/// Textual marker names used in simplex syntax: "1", "t", "t2".
std::string marker_name(std::size_t index);
std::size_t parse_marker_name(LatticeClass l, std::string_view name);

/// Matrix of multiplication by u on (x, y) coordinates: column k is the
/// image of the k-th basis vector. det equals ring_norm(u).
IntegerMatrix marker_matrix(LatticeClass l, const RingElement& u);

struct TorusPoint {
  Rational x;
  Rational y;

  TorusPoint() = default;
  TorusPoint(Rational px, Rational py) : x(px.mod1()), y(py.mod1()) {}

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
  friend auto operator<=>(const TorusPoint&, const TorusPoint&) = default;
};

TorusPoint point_add(const TorusPoint& p, const TorusPoint& q);
TorusPoint point_sub(const TorusPoint& p, const TorusPoint& q);
TorusPoint point_scale(std::int64_t k, const TorusPoint& p);
/// "x:y" with rationals "p/q" or integers.
TorusPoint parse_point(std::string_view text);
std::string to_string(const TorusPoint& p);

/// Ordered configuration of pairwise distinct points.
using Configuration = std::vector<TorusPoint>;
/// Comma-separated points.
Configuration parse_configuration(std::string_view text);
std::string to_string(const Configuration& c);
/// Throws InputError on repeated points.
void require_distinct(const Configuration& c);

/// alpha applied to p (matrix action mod 1). alpha = 0 is rejected.
TorusPoint apply_endo(LatticeClass l, const RingElement& alpha, const TorusPoint& p);
/// {p : alpha p = 0}, sorted; computed from the Smith form of the
/// multiplication matrix. Its size equals ring_norm(alpha).
std::vector<TorusPoint> endo_kernel(LatticeClass l, const RingElement& alpha);

/// lcm of the reduced denominators.
std::int64_t point_order(const TorusPoint& p);

/// Some pair i != j has point_order(q_j - q_i) <= m (m = size).
bool is_exceptional_necessary(LatticeClass l, const Configuration& c);

struct ExceptionalWitness {
  std::size_t i = 0;  // 0-based
  std::size_t j = 0;
  RingElement alpha;
};

/// First (by norm, then (a, b), then i, then j) endomorphism alpha with
/// 2 <= norm <= m collapsing q_i and q_j whose kernel, shifted by q_i,
/// lies inside the configuration.
std::optional<ExceptionalWitness> is_exceptional_exact(LatticeClass l, const Configuration& c);

/// q -> unit * q + translation.
struct TorusAutomorphism {
  RingElement unit{1, 0};
  TorusPoint translation;

  friend bool operator==(const TorusAutomorphism&, const TorusAutomorphism&) = default;
};

TorusAutomorphism make_automorphism(LatticeClass l, const RingElement& unit, const TorusPoint& translation);
/// (outer o inner)(q) = outer(inner(q)).
TorusAutomorphism aut_compose(LatticeClass l, const TorusAutomorphism& outer, const TorusAutomorphism& inner);
TorusAutomorphism aut_invert(LatticeClass l, const TorusAutomorphism& a);
TorusPoint aut_apply(LatticeClass l, const TorusAutomorphism& a, const TorusPoint& p);
Configuration aut_apply(LatticeClass l, const TorusAutomorphism& a, const Configuration& c);

/// Some A in Aut T^2 with A.Q = Q' as unordered sets, if one exists. Units
/// are tried in marker_group order, translations q'_k - u q_1 by k.
std::optional<TorusAutomorphism> diagonal_orbit_equal(LatticeClass l, const Configuration& q,
                                                      const Configuration& qprime);

/// q_1 + ... + q_n. Requires distinct points.
TorusPoint sum_map(const Configuration& q);

/// marker * (q_i - q_j), 1-based indices. Never 0 on a valid configuration.
TorusPoint difference_eval(LatticeClass l, const RingElement& marker, std::size_t i, std::size_t j,
                           const Configuration& q);

}  // namespace tbl
