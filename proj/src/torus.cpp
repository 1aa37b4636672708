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

#include "tbl/torus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "tbl/error.hpp"

namespace tbl {

namespace {

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational arithmetic overflow");
  return static_cast<std::int64_t>(v);
}

Rational make_reduced(__int128 num, __int128 den) {
  if (den == 0) throw InputError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num;
  __int128 b = den;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  const __int128 g = a == 0 ? 1 : a;
  return Rational(narrow(num / g), narrow(den / g));
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw InputError("bad integer '" + std::string(s) + "'");
  }
  return v;
}

std::string strip(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  }
  return out;
}

std::int64_t mul64(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("ring arithmetic overflow");
  return r;
}

std::int64_t add64(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("ring arithmetic overflow");
  return r;
}

}  // namespace

std::string to_string(LatticeClass l) {
  switch (l) {
    case LatticeClass::Generic:
      return "generic";
    case LatticeClass::Square:
      return "square";
    case LatticeClass::Hexagonal:
      return "hexagonal";
  }
  return "?";
}

LatticeClass parse_lattice(std::string_view name) {
  if (name == "generic") return LatticeClass::Generic;
  if (name == "square") return LatticeClass::Square;
  if (name == "hexagonal") return LatticeClass::Hexagonal;
  throw InputError("unknown lattice class '" + std::string(name) + "' (generic|square|hexagonal)");
}

// ---------------------------------------------------------------- Rational

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("zero denominator");
  if (den < 0) {
    if (num == INT64_MIN || den == INT64_MIN) throw std::overflow_error("rational arithmetic overflow");
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g ? num / g : 0;
  den_ = g ? den / g : 1;
}

Rational operator+(const Rational& a, const Rational& b) {
  return make_reduced(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                      static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return make_reduced(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational Rational::mod1() const {
  std::int64_t r = num_ % den_;
  if (r < 0) r += den_;
  return Rational(r, den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 l = static_cast<__int128>(a.num_) * b.den_;
  const __int128 r = static_cast<__int128>(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const Rational& r) {
  if (r.den() == 1) return std::to_string(r.num());
  return std::to_string(r.num()) + "/" + std::to_string(r.den());
}

Rational parse_rational(std::string_view text) {
  const std::string s = strip(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  return Rational(parse_int(std::string_view(s).substr(0, slash)), parse_int(std::string_view(s).substr(slash + 1)));
}

// ------------------------------------------------------------------- Ring

RingElement ring_element(LatticeClass l, std::int64_t a, std::int64_t b) {
  if (l == LatticeClass::Generic && b != 0) {
    throw InputError("the generic lattice has no complex multiplication (b must be 0)");
  }
  return {a, b};
}

RingElement ring_add(const RingElement& x, const RingElement& y) { return {add64(x.a, y.a), add64(x.b, y.b)}; }
RingElement ring_neg(const RingElement& x) { return {mul64(-1, x.a), mul64(-1, x.b)}; }
RingElement ring_sub(const RingElement& x, const RingElement& y) { return ring_add(x, ring_neg(y)); }

RingElement ring_mul(LatticeClass l, const RingElement& x, const RingElement& y) {
  const std::int64_t aa = mul64(x.a, y.a);
  const std::int64_t bb = mul64(x.b, y.b);
  const std::int64_t cross = add64(mul64(x.a, y.b), mul64(x.b, y.a));
  switch (l) {
    case LatticeClass::Generic:
      return {aa, 0};
    case LatticeClass::Square:  // t^2 = -1
      return {add64(aa, -bb), cross};
    case LatticeClass::Hexagonal:  // t^2 = t - 1
      return {add64(aa, -bb), add64(cross, bb)};
  }
  return {};
}

std::int64_t ring_norm(LatticeClass l, const RingElement& x) {
  switch (l) {
    case LatticeClass::Generic:
      return mul64(x.a, x.a);
    case LatticeClass::Square:
      return add64(mul64(x.a, x.a), mul64(x.b, x.b));
    case LatticeClass::Hexagonal:
      return add64(add64(mul64(x.a, x.a), mul64(x.a, x.b)), mul64(x.b, x.b));
  }
  return 0;
}

bool is_unit(LatticeClass l, const RingElement& x) { return ring_norm(l, x) == 1; }

RingElement parse_ring_element(LatticeClass l, std::string_view text) {
  const std::string s = strip(text);
  if (s.empty()) throw InputError("empty ring element");
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = pos + 1;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    pos = end;
    bool neg = false;
    if (term.front() == '+' || term.front() == '-') {
      neg = term.front() == '-';
      term.erase(0, 1);
    }
    if (term.empty()) throw InputError("bad ring element '" + s + "'");
    if (term.back() == 't') {
      term.pop_back();
      if (!term.empty() && term.back() == '*') term.pop_back();
      const std::int64_t k = term.empty() ? 1 : parse_int(term);
      b = add64(b, neg ? -k : k);
    } else {
      const std::int64_t k = parse_int(term);
      a = add64(a, neg ? -k : k);
    }
  }
  return ring_element(l, a, b);
}

std::string to_string(const RingElement& x) {
  if (x.b == 0) return std::to_string(x.a);
  std::string t;
  if (x.b == 1) {
    t = "t";
  } else if (x.b == -1) {
    t = "-t";
  } else {
    t = std::to_string(x.b) + "*t";
  }
  if (x.a == 0) return t;
  return std::to_string(x.a) + (x.b > 0 ? "+" : "") + t;
}

// ---------------------------------------------------------------- Markers

MarkerGroup marker_group(LatticeClass l) {
  MarkerGroup g;
  switch (l) {
    case LatticeClass::Generic:
      g.positive = {{1, 0}};
      break;
    case LatticeClass::Square:
      g.positive = {{1, 0}, {0, 1}};
      break;
    case LatticeClass::Hexagonal:
      g.positive = {{1, 0}, {0, 1}, {-1, 1}};  // 1, t, t^2 = t - 1
      break;
  }
  g.all = g.positive;
  for (const auto& u : g.positive) g.all.push_back(ring_neg(u));
  return g;
}

CanonicalMarker canonical_marker(LatticeClass l, const RingElement& u) {
  const auto pos = marker_group(l).positive;
  for (std::size_t k = 0; k < pos.size(); ++k) {
    if (pos[k] == u) return {k, false};
    if (ring_neg(pos[k]) == u) return {k, true};
  }
  throw InputError(to_string(u) + " is not a unit of the " + to_string(l) + " endomorphism ring");
}

std::string marker_name(std::size_t index) {
  switch (index) {
    case 0:
      return "1";
    case 1:
      return "t";
    case 2:
      return "t2";
    default:
      break;
  }
  throw InputError("marker index out of range");
}

std::size_t parse_marker_name(LatticeClass l, std::string_view name) {
  const std::size_t count = marker_group(l).positive.size();
  for (std::size_t k = 0; k < count; ++k) {
    if (name == marker_name(k)) return k;
  }
  throw InputError("marker '" + std::string(name) + "' is not in M+ for the " + to_string(l) + " lattice");
}

IntegerMatrix marker_matrix(LatticeClass l, const RingElement& u) {
  // Column 0: u * 1 = a + b t. Column 1: u * t.
  const RingElement ut = ring_mul(l, u, RingElement{0, 1});
  IntegerMatrix m(2, 2);
  m(0, 0) = u.a;
  m(1, 0) = u.b;
  if (l == LatticeClass::Generic) {
    m(0, 1) = 0;
    m(1, 1) = u.a;
  } else {
    m(0, 1) = ut.a;
    m(1, 1) = ut.b;
  }
  return m;
}

// ----------------------------------------------------------------- Points

TorusPoint point_add(const TorusPoint& p, const TorusPoint& q) { return {p.x + q.x, p.y + q.y}; }
TorusPoint point_sub(const TorusPoint& p, const TorusPoint& q) { return {p.x - q.x, p.y - q.y}; }
TorusPoint point_scale(std::int64_t k, const TorusPoint& p) { return {Rational(k) * p.x, Rational(k) * p.y}; }

TorusPoint parse_point(std::string_view text) {
  const std::string s = strip(text);
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw InputError("point '" + s + "' must be written x:y");
  return {parse_rational(std::string_view(s).substr(0, colon)), parse_rational(std::string_view(s).substr(colon + 1))};
}

std::string to_string(const TorusPoint& p) { return to_string(p.x) + ":" + to_string(p.y); }

Configuration parse_configuration(std::string_view text) {
  Configuration c;
  const std::string s = strip(text);
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto comma = s.find(',', pos);
    const auto end = comma == std::string::npos ? s.size() : comma;
    if (end == pos) throw InputError("empty point in configuration '" + s + "'");
    c.push_back(parse_point(std::string_view(s).substr(pos, end - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return c;
}

std::string to_string(const Configuration& c) {
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) out += (k ? "," : "") + to_string(c[k]);
  return out;
}

void require_distinct(const Configuration& c) {
  Configuration sorted = c;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("configuration points must be pairwise distinct");
  }
}

TorusPoint apply_endo(LatticeClass l, const RingElement& alpha, const TorusPoint& p) {
  if (alpha.a == 0 && alpha.b == 0) throw InputError("the zero endomorphism is constant");
  const IntegerMatrix m = marker_matrix(l, alpha);
  return {Rational(m(0, 0)) * p.x + Rational(m(0, 1)) * p.y, Rational(m(1, 0)) * p.x + Rational(m(1, 1)) * p.y};
}

std::vector<TorusPoint> endo_kernel(LatticeClass l, const RingElement& alpha) {
  if (alpha.a == 0 && alpha.b == 0) throw InputError("the zero endomorphism has no finite kernel");
  // U M V = D, so M v is integral iff D V^-1 v is, i.e. v = V (k1/d1, k2/d2).
  const SmithForm s = smith_normal_form(marker_matrix(l, alpha));
  const std::int64_t d1 = s.d(0, 0);
  const std::int64_t d2 = s.d(1, 1);
  std::vector<TorusPoint> out;
  out.reserve(static_cast<std::size_t>(d1 * d2));
  for (std::int64_t k1 = 0; k1 < d1; ++k1) {
    for (std::int64_t k2 = 0; k2 < d2; ++k2) {
      const Rational y1(k1, d1);
      const Rational y2(k2, d2);
      out.emplace_back(Rational(s.v(0, 0)) * y1 + Rational(s.v(0, 1)) * y2,
                       Rational(s.v(1, 0)) * y1 + Rational(s.v(1, 1)) * y2);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t point_order(const TorusPoint& p) { return std::lcm(p.x.den(), p.y.den()); }

bool is_exceptional_necessary(LatticeClass, const Configuration& c) {
  require_distinct(c);
  const auto m = static_cast<std::int64_t>(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (i != j && point_order(point_sub(c[j], c[i])) <= m) return true;
    }
  }
  return false;
}

std::optional<ExceptionalWitness> is_exceptional_exact(LatticeClass l, const Configuration& c) {
  require_distinct(c);
  const auto m = static_cast<std::int64_t>(c.size());
  if (m < 2) return std::nullopt;
  std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> candidates;  // (norm, a, b)
  const std::int64_t bmax = l == LatticeClass::Generic ? 0 : m;
  for (std::int64_t a = -m; a <= m; ++a) {
    for (std::int64_t b = -bmax; b <= bmax; ++b) {
      const std::int64_t nrm = ring_norm(l, {a, b});
      if (nrm >= 2 && nrm <= m) candidates.emplace_back(nrm, a, b);
    }
  }
  std::sort(candidates.begin(), candidates.end());

  Configuration members = c;
  std::sort(members.begin(), members.end());
  auto contains = [&](const TorusPoint& p) { return std::binary_search(members.begin(), members.end(), p); };

  for (const auto& [nrm, a, b] : candidates) {
    const RingElement alpha{a, b};
    const auto kernel = endo_kernel(l, alpha);
    for (std::size_t i = 0; i < c.size(); ++i) {
      const bool shifted_inside =
          std::all_of(kernel.begin(), kernel.end(), [&](const TorusPoint& t) { return contains(point_add(t, c[i])); });
      if (!shifted_inside) continue;
      for (std::size_t j = 0; j < c.size(); ++j) {
        if (j == i) continue;
        if (std::binary_search(kernel.begin(), kernel.end(), point_sub(c[j], c[i]))) {
          return ExceptionalWitness{i, j, alpha};
        }
      }
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------ Automorphisms

TorusAutomorphism make_automorphism(LatticeClass l, const RingElement& unit, const TorusPoint& translation) {
  if (l == LatticeClass::Generic && unit.b != 0) throw InputError("generic lattice units are +-1");
  if (!is_unit(l, unit)) throw InputError(to_string(unit) + " is not a unit");
  return {unit, translation};
}

TorusAutomorphism aut_compose(LatticeClass l, const TorusAutomorphism& outer, const TorusAutomorphism& inner) {
  return {ring_mul(l, outer.unit, inner.unit),
          point_add(apply_endo(l, outer.unit, inner.translation), outer.translation)};
}

TorusAutomorphism aut_invert(LatticeClass l, const TorusAutomorphism& a) {
  // Units have finite order, so u^-1 is a power of u.
  RingElement inv = a.unit;
  while (ring_mul(l, inv, a.unit) != RingElement{1, 0}) inv = ring_mul(l, inv, a.unit);
  const TorusPoint shifted = apply_endo(l, inv, a.translation);
  return {inv, point_sub(TorusPoint{}, shifted)};
}

TorusPoint aut_apply(LatticeClass l, const TorusAutomorphism& a, const TorusPoint& p) {
  return point_add(apply_endo(l, a.unit, p), a.translation);
}

Configuration aut_apply(LatticeClass l, const TorusAutomorphism& a, const Configuration& c) {
  Configuration out;
  out.reserve(c.size());
  for (const auto& p : c) out.push_back(aut_apply(l, a, p));
  return out;
}

std::optional<TorusAutomorphism> diagonal_orbit_equal(LatticeClass l, const Configuration& q,
                                                      const Configuration& qprime) {
  if (q.size() != qprime.size()) throw InputError("configurations have different sizes");
  require_distinct(q);
  require_distinct(qprime);
  if (q.empty()) return TorusAutomorphism{};
  Configuration target = qprime;
  std::sort(target.begin(), target.end());
  for (const auto& u : marker_group(l).all) {
    const TorusPoint uq1 = apply_endo(l, u, q.front());
    for (const auto& qk : qprime) {
      const TorusAutomorphism cand{u, point_sub(qk, uq1)};
      Configuration image = aut_apply(l, cand, q);
      std::sort(image.begin(), image.end());
      if (image == target) return cand;
    }
  }
  return std::nullopt;
}

TorusPoint sum_map(const Configuration& q) {
  require_distinct(q);
  TorusPoint s;
  for (const auto& p : q) s = point_add(s, p);
  return s;
}

TorusPoint difference_eval(LatticeClass l, const RingElement& marker, std::size_t i, std::size_t j,
                           const Configuration& q) {
  if (i == j) throw InputError("difference needs i != j");
  if (i < 1 || j < 1 || i > q.size() || j > q.size()) throw InputError("difference index out of range");
  if (!is_unit(l, marker)) throw InputError("marker must be a unit");
  return apply_endo(l, marker, point_sub(q[i - 1], q[j - 1]));
}

}  // namespace tbl
