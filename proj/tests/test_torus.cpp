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

#include <cmath>
#include <complex>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "tbl/error.hpp"
#include "tbl/torus.hpp"

using namespace tbl;

namespace {

std::complex<double> tau_value(LatticeClass l) {
  if (l == LatticeClass::Square) return {0.0, 1.0};
  if (l == LatticeClass::Hexagonal) return {0.5, std::sqrt(3.0) / 2.0};
  return {0.0, 0.0};
}

std::complex<double> as_complex(LatticeClass l, const RingElement& x) {
  return static_cast<double>(x.a) + static_cast<double>(x.b) * tau_value(l);
}

std::vector<RingElement> elements_up_to_norm(LatticeClass l, std::int64_t max_norm) {
  std::vector<RingElement> out;
  const std::int64_t r = 2 * max_norm;
  for (std::int64_t a = -r; a <= r; ++a) {
    for (std::int64_t b = (l == LatticeClass::Generic ? 0 : -r); b <= (l == LatticeClass::Generic ? 0 : r); ++b) {
      const double nrm = std::norm(as_complex(l, {a, b}));
      if (nrm <= static_cast<double>(max_norm) + 0.5 && !(a == 0 && b == 0)) out.push_back({a, b});
    }
  }
  return out;
}

// alpha acting on (i/N, j/N), computed with integers mod N from tau * (x + y tau).
std::pair<std::int64_t, std::int64_t> act_mod(LatticeClass l, const RingElement& alpha, std::int64_t i,
                                              std::int64_t j, std::int64_t N) {
  std::int64_t tx = 0, ty = 0;  // tau (i + j tau)
  if (l == LatticeClass::Square) {
    tx = -j;
    ty = i;
  } else if (l == LatticeClass::Hexagonal) {
    tx = -j;
    ty = i + j;
  }
  const auto mod = [N](std::int64_t v) { return ((v % N) + N) % N; };
  return {mod(alpha.a * i + alpha.b * tx), mod(alpha.a * j + alpha.b * ty)};
}

std::set<TorusPoint> brute_kernel(LatticeClass l, const RingElement& alpha) {
  const std::int64_t N = ring_norm(l, alpha);
  std::set<TorusPoint> out;
  for (std::int64_t i = 0; i < N; ++i) {
    for (std::int64_t j = 0; j < N; ++j) {
      if (act_mod(l, alpha, i, j, N) == std::pair<std::int64_t, std::int64_t>{0, 0}) {
        out.insert(TorusPoint(Rational(i, N), Rational(j, N)));
      }
    }
  }
  return out;
}

TorusPoint random_point(std::mt19937& rng) {
  const std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 7);
  return TorusPoint(Rational(static_cast<std::int64_t>(rng() % 7), d), Rational(static_cast<std::int64_t>(rng() % 7), d));
}

Configuration random_configuration(std::mt19937& rng, std::size_t m) {
  Configuration c;
  while (c.size() < m) {
    const TorusPoint q = random_point(rng);
    if (std::find(c.begin(), c.end(), q) == c.end()) c.push_back(q);
  }
  return c;
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(-1, 3).mod1() == Rational(2, 3));
  CHECK(Rational(7, 2).mod1() == Rational(1, 2));
  CHECK(to_string(Rational(3, 6)) == "1/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(parse_rational("-5/10") == Rational(-1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), InputError);
  CHECK_THROWS_AS(parse_rational("1/x"), InputError);
}

TEST_CASE("ring arithmetic against complex numbers") {
  std::mt19937 rng(17);
  for (auto l : kAllLattices) {
    for (int trial = 0; trial < 300; ++trial) {
      const std::int64_t bmax = l == LatticeClass::Generic ? 0 : 9;
      auto rnd = [&](std::int64_t r) { return r == 0 ? 0 : static_cast<std::int64_t>(rng() % (2 * r + 1)) - r; };
      const RingElement x{rnd(9), rnd(bmax)};
      const RingElement y{rnd(9), rnd(bmax)};
      const auto p = ring_mul(l, x, y);
      const auto expect = as_complex(l, x) * as_complex(l, y);
      CHECK(std::abs(as_complex(l, p) - expect) < 1e-9);
      CHECK(static_cast<double>(ring_norm(l, x)) == doctest::Approx(std::norm(as_complex(l, x))));
      CHECK(ring_add(x, ring_neg(x)) == RingElement{});
      CHECK(ring_sub(x, y) == ring_add(x, ring_neg(y)));
    }
  }
  // |1 + e^{i pi/3}|^2 = 3
  CHECK(ring_norm(LatticeClass::Hexagonal, {1, 1}) == 3);
  CHECK(ring_mul(LatticeClass::Square, {0, 1}, {0, 1}) == RingElement{-1, 0});
  CHECK(ring_mul(LatticeClass::Hexagonal, {0, 1}, {0, 1}) == RingElement{-1, 1});
  CHECK_THROWS_AS(ring_element(LatticeClass::Generic, 1, 1), InputError);
}

TEST_CASE("parsing ring elements and points") {
  const auto H = LatticeClass::Hexagonal;
  CHECK(parse_ring_element(H, "1+2*t") == RingElement{1, 2});
  CHECK(parse_ring_element(H, "3-t") == RingElement{3, -1});
  CHECK(parse_ring_element(H, "-t") == RingElement{0, -1});
  CHECK(parse_ring_element(H, "-4") == RingElement{-4, 0});
  CHECK(to_string(RingElement{-1, 1}) == "-1+t");
  CHECK_THROWS_AS(parse_ring_element(LatticeClass::Generic, "t"), InputError);
  CHECK_THROWS_AS(parse_ring_element(H, "1+"), InputError);
  CHECK(parse_point("1/2:-1/3") == TorusPoint(Rational(1, 2), Rational(2, 3)));
  CHECK(to_string(parse_point("3/2:1")) == "1/2:0");
  CHECK_THROWS_AS(parse_point("1/2"), InputError);
  CHECK(parse_configuration("0:0,1/2:0").size() == 2);
}

TEST_CASE("marker groups") {
  const MarkerGroup g = marker_group(LatticeClass::Generic);
  CHECK(g.all.size() == 2);
  CHECK(g.positive == std::vector<RingElement>{{1, 0}});
  CHECK(marker_group(LatticeClass::Square).all.size() == 4);
  const MarkerGroup h = marker_group(LatticeClass::Hexagonal);
  CHECK(h.positive == std::vector<RingElement>{{1, 0}, {0, 1}, {-1, 1}});
  for (auto l : kAllLattices) {
    const MarkerGroup m = marker_group(l);
    // Units are exactly the elements of norm 1.
    std::size_t units = 0;
    for (const auto& x : elements_up_to_norm(l, 1)) {
      if (ring_norm(l, x) == 1) {
        ++units;
        CHECK(is_unit(l, x));
        CHECK(std::find(m.all.begin(), m.all.end(), x) != m.all.end());
        const CanonicalMarker c = canonical_marker(l, x);
        CHECK((c.negated ? ring_neg(m.positive[c.index]) : m.positive[c.index]) == x);
      }
    }
    CHECK(units == m.all.size());
    CHECK(m.positive.size() * 2 == m.all.size());
    for (const auto& u : m.positive) {
      const double arg = std::arg(as_complex(l, u));
      CHECK(arg >= -1e-12);
      CHECK(arg < M_PI - 1e-9);
    }
  }
  CHECK_THROWS_AS(canonical_marker(LatticeClass::Square, {1, 1}), InputError);
  CHECK(parse_marker_name(LatticeClass::Hexagonal, "t2") == 2);
  CHECK_THROWS_AS(parse_marker_name(LatticeClass::Square, "t2"), InputError);
}

TEST_CASE("multiplication matrices") {
  CHECK(marker_matrix(LatticeClass::Square, {0, 1}) == IntegerMatrix{{0, -1}, {1, 0}});
  CHECK(marker_matrix(LatticeClass::Hexagonal, {0, 1}) == IntegerMatrix{{0, -1}, {1, 1}});
  for (auto l : kAllLattices) {
    for (const auto& x : elements_up_to_norm(l, 12)) CHECK(determinant(marker_matrix(l, x)) == ring_norm(l, x));
  }
}

TEST_CASE("endomorphisms of points") {
  CHECK(apply_endo(LatticeClass::Square, {0, 1}, TorusPoint(Rational(1, 2), Rational(0))) ==
        TorusPoint(Rational(0), Rational(1, 2)));
  CHECK_THROWS_AS(apply_endo(LatticeClass::Square, {0, 0}, TorusPoint()), InputError);
  CHECK(point_order(TorusPoint(Rational(1, 3), Rational(1, 6))) == 6);
  CHECK(point_order(TorusPoint()) == 1);

  CHECK(endo_kernel(LatticeClass::Generic, {2, 0}).size() == 4);
  CHECK(endo_kernel(LatticeClass::Hexagonal, {1, 1}).size() == 3);
  for (auto l : kAllLattices) {
    for (const auto& alpha : elements_up_to_norm(l, 12)) {
      const auto k = endo_kernel(l, alpha);
      const auto brute = brute_kernel(l, alpha);
      CHECK(std::set<TorusPoint>(k.begin(), k.end()) == brute);
      CHECK(std::is_sorted(k.begin(), k.end()));
    }
  }
}

TEST_CASE("exceptional configurations") {
  const auto G = LatticeClass::Generic;
  const Configuration two{TorusPoint(), TorusPoint(Rational(1, 2), Rational(0))};
  CHECK(is_exceptional_necessary(G, two));
  CHECK_FALSE(is_exceptional_exact(G, two).has_value());
  CHECK_FALSE(is_exceptional_exact(LatticeClass::Hexagonal, two).has_value());

  // On the square lattice 1 + t has norm 2 and kernel {0, (1/2, 1/2)}.
  const Configuration diag{TorusPoint(), TorusPoint(Rational(1, 2), Rational(1, 2))};
  const auto sq = is_exceptional_exact(LatticeClass::Square, diag);
  REQUIRE(sq.has_value());
  CHECK(ring_norm(LatticeClass::Square, sq->alpha) == 2);

  const Configuration torsion2 = parse_configuration("0:0,1/2:0,0:1/2,1/2:1/2");
  const auto w = is_exceptional_exact(G, torsion2);
  REQUIRE(w.has_value());
  CHECK(std::llabs(w->alpha.a) == 2);

  CHECK_THROWS_AS(is_exceptional_necessary(G, parse_configuration("0:0,0:0")), InputError);
}

TEST_CASE("property: exact exceptionality agrees with a brute-force search") {
  std::mt19937 rng(23);
  for (auto l : kAllLattices) {
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t m = 2 + rng() % 3;
      const Configuration c = random_configuration(rng, m);
      const std::set<TorusPoint> cs(c.begin(), c.end());
      bool expect = false;
      for (const auto& alpha : elements_up_to_norm(l, static_cast<std::int64_t>(m))) {
        if (ring_norm(l, alpha) < 2 || ring_norm(l, alpha) > static_cast<std::int64_t>(m)) continue;
        const auto ker = brute_kernel(l, alpha);
        for (std::size_t i = 0; i < m && !expect; ++i) {
          for (std::size_t j = 0; j < m && !expect; ++j) {
            if (i == j || !ker.count(point_sub(c[j], c[i]))) continue;
            bool inside = true;
            for (const auto& k : ker) inside = inside && cs.count(point_add(k, c[i]));
            expect = inside;
          }
        }
      }
      const auto got = is_exceptional_exact(l, c);
      CHECK(got.has_value() == expect);
      if (got) CHECK(is_exceptional_necessary(l, c));
    }
  }
}

TEST_CASE("automorphisms") {
  std::mt19937 rng(31);
  for (auto l : kAllLattices) {
    const auto units = marker_group(l).all;
    for (int trial = 0; trial < 100; ++trial) {
      const TorusAutomorphism a = make_automorphism(l, units[rng() % units.size()], random_point(rng));
      const TorusAutomorphism b = make_automorphism(l, units[rng() % units.size()], random_point(rng));
      const TorusPoint q = random_point(rng);
      CHECK(aut_apply(l, aut_compose(l, a, b), q) == aut_apply(l, a, aut_apply(l, b, q)));
      CHECK(aut_apply(l, aut_invert(l, a), aut_apply(l, a, q)) == q);
      CHECK(aut_compose(l, a, aut_invert(l, a)) == TorusAutomorphism{});
    }
  }
  CHECK_THROWS_AS(make_automorphism(LatticeClass::Square, {2, 0}, TorusPoint()), InputError);
}

TEST_CASE("diagonal orbits") {
  const auto G = LatticeClass::Generic;
  CHECK_FALSE(diagonal_orbit_equal(G, parse_configuration("0:0,1/2:0"), parse_configuration("0:0,1/5:0")).has_value());
  std::mt19937 rng(41);
  for (auto l : kAllLattices) {
    const auto units = marker_group(l).all;
    for (int trial = 0; trial < 100; ++trial) {
      const Configuration q = random_configuration(rng, 1 + rng() % 4);
      const TorusAutomorphism a = make_automorphism(l, units[rng() % units.size()], random_point(rng));
      Configuration qp = aut_apply(l, a, q);
      std::shuffle(qp.begin(), qp.end(), rng);
      const auto w = diagonal_orbit_equal(l, q, qp);
      REQUIRE(w.has_value());
      auto img = aut_apply(l, *w, q);
      std::sort(img.begin(), img.end());
      std::sort(qp.begin(), qp.end());
      CHECK(img == qp);
    }
  }
  CHECK_THROWS_AS(diagonal_orbit_equal(G, parse_configuration("0:0"), parse_configuration("0:0,1/2:0")), InputError);
}

TEST_CASE("sum and difference maps") {
  const auto S = LatticeClass::Square;
  const Configuration q = parse_configuration("1/2:0,0:0,1/3:2/3");
  CHECK(sum_map(q) == TorusPoint(Rational(5, 6), Rational(2, 3)));
  CHECK(difference_eval(S, {0, 1}, 1, 2, q) == TorusPoint(Rational(0), Rational(1, 2)));
  for (std::size_t i = 1; i <= 3; ++i) {
    for (std::size_t j = 1; j <= 3; ++j) {
      if (i == j) continue;
      for (const auto& u : marker_group(S).positive) CHECK_FALSE(difference_eval(S, u, i, j, q) == TorusPoint());
    }
  }
  CHECK_THROWS_AS(difference_eval(S, {0, 1}, 1, 1, q), InputError);
  CHECK_THROWS_AS(sum_map(parse_configuration("0:0,0:0")), InputError);
}
