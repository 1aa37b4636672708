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

#include "tbl/complex.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "tbl/error.hpp"
#include "tbl/kernels.hpp"

namespace tbl {

namespace {

constexpr std::size_t kMaxPoints = 15;

void check_n(std::size_t n) {
  if (n < 2) throw InputError("the difference complex needs n >= 2, got " + std::to_string(n));
  if (n > kMaxPoints) throw InputError("n above " + std::to_string(kMaxPoints) + " is not supported");
}

const RingElement& marker_value(LatticeClass l, std::size_t index) {
  static const MarkerGroup groups[3] = {marker_group(LatticeClass::Generic), marker_group(LatticeClass::Square),
                                        marker_group(LatticeClass::Hexagonal)};
  const auto& pos = groups[static_cast<int>(l)].positive;
  if (index >= pos.size()) throw InputError("marker index out of range for the " + to_string(l) + " lattice");
  return pos[index];
}

void add_coefficient(FormalCombination& f, std::size_t k, const RingElement& c) {
  RingElement sum = ring_add(f[k], c);
  if (sum == RingElement{}) {
    f.erase(k);
  } else {
    f[k] = sum;
  }
}

std::string simplex_key(const Simplex& x) {
  std::string key;
  key.reserve(x.size() * 3);
  for (const auto& d : x) {
    key += static_cast<char>(d.marker);
    key += static_cast<char>(d.i);
    key += static_cast<char>(d.j);
  }
  return key;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    const auto k = s.find(sep, pos);
    out.push_back(s.substr(pos, k == std::string_view::npos ? std::string_view::npos : k - pos));
    if (k == std::string_view::npos) break;
    pos = k + 1;
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

std::size_t parse_index(std::string_view s) {
  const std::string t = trim(s);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError("bad index '" + t + "'");
  }
  return std::stoul(t);
}

}  // namespace

Difference make_difference(LatticeClass l, std::size_t n, std::size_t marker, std::size_t i, std::size_t j) {
  check_n(n);
  marker_value(l, marker);
  if (i < 1 || j < 1 || i > n || j > n) throw InputError("difference index out of range 1.." + std::to_string(n));
  if (i == j) throw InputError("difference needs i != j");
  return {static_cast<std::uint8_t>(marker), static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
}

std::string to_string(const Difference& d) {
  return marker_name(d.marker) + ":" + std::to_string(d.i) + "," + std::to_string(d.j);
}

std::string to_string(const FormalCombination& f) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, c] : f) {
    out += (first ? "" : ", ") + std::to_string(k) + ": " + to_string(c);
    first = false;
  }
  return out + "}";
}

FormalCombination as_formal(LatticeClass l, const Difference& d) {
  const RingElement& m = marker_value(l, d.marker);
  FormalCombination f;
  add_coefficient(f, d.i, m);
  add_coefficient(f, d.j, ring_neg(m));
  return f;
}

FormalCombination formal_difference(LatticeClass l, const Difference& mu, const Difference& nu) {
  FormalCombination f = as_formal(l, mu);
  for (const auto& [k, c] : as_formal(l, nu)) add_coefficient(f, k, ring_neg(c));
  return f;
}

std::optional<Difference> is_difference(LatticeClass l, const FormalCombination& f) {
  if (f.size() != 2) return std::nullopt;
  auto it = f.begin();
  const auto [e, ce] = *it++;
  const auto [g, cg] = *it;
  if (ring_add(ce, cg) != RingElement{}) return std::nullopt;
  if (!is_unit(l, ce)) return std::nullopt;
  const CanonicalMarker cm = canonical_marker(l, ce);
  const std::size_t first = cm.negated ? g : e;
  const std::size_t second = cm.negated ? e : g;
  return Difference{static_cast<std::uint8_t>(cm.index), static_cast<std::uint8_t>(first),
                    static_cast<std::uint8_t>(second)};
}

std::optional<Difference> proper_remainder_oracle(LatticeClass l, const Difference& mu, const Difference& nu) {
  if (mu == nu) throw InputError("proper remainder is defined for distinct vertices");
  return is_difference(l, formal_difference(l, mu, nu));
}

bool proper_remainder_rule(const Difference& mu, const Difference& nu) {
  if (mu == nu) throw InputError("proper remainder is defined for distinct vertices");
  return mu.marker == nu.marker && ((mu.i == nu.i) != (mu.j == nu.j));
}

std::vector<Difference> vertex_set(std::size_t n, LatticeClass l) {
  check_n(n);
  std::vector<Difference> out;
  const std::size_t markers = marker_group(l).positive.size();
  for (std::size_t m = 0; m < markers; ++m) {
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        if (i != j) out.push_back(make_difference(l, n, m, i, j));
      }
    }
  }
  return out;
}

std::string to_string(const Simplex& s) {
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? ";" : "") + to_string(s[k]);
  return out;
}

std::vector<Difference> parse_difference_list(LatticeClass l, std::size_t n, std::string_view text) {
  std::vector<Difference> out;
  const std::string t = trim(text);
  if (t.empty()) return out;
  for (auto item : split(t, ';')) {
    const std::string it = trim(item);
    const auto colon = it.find(':');
    if (colon == std::string::npos) throw InputError("vertex '" + it + "' must be written marker:i,j");
    const auto idx = split(std::string_view(it).substr(colon + 1), ',');
    if (idx.size() != 2) throw InputError("vertex '" + it + "' needs two indices");
    out.push_back(make_difference(l, n, parse_marker_name(l, trim(std::string_view(it).substr(0, colon))),
                                  parse_index(idx[0]), parse_index(idx[1])));
  }
  return out;
}

Simplex parse_simplex(LatticeClass l, std::size_t n, std::string_view text) {
  Simplex s = parse_difference_list(l, n, text);
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("repeated vertex in simplex");
  return s;
}

// ------------------------------------------------------------------ Graph

DifferenceGraph::DifferenceGraph(std::size_t n, LatticeClass l, EdgeSource source)
    : n_(n), lattice_(l), vertices_(vertex_set(n, l)), words_((vertices_.size() + 63) / 64),
      adj_(vertices_.size() * words_, 0) {
  const std::size_t v = vertices_.size();
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a + 1; b < v; ++b) {
      const bool edge = source == EdgeSource::Oracle ? proper_remainder_oracle(l, vertices_[a], vertices_[b]).has_value()
                                                     : proper_remainder_rule(vertices_[a], vertices_[b]);
      if (!edge) continue;
      adj_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
      adj_[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
    }
  }
}

std::size_t DifferenceGraph::index_of(const Difference& d) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), d);
  if (it == vertices_.end() || *it != d) throw InputError("vertex " + to_string(d) + " not in complex");
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t DifferenceGraph::edge_count() const {
  return static_cast<std::size_t>(simd::popcount_words(adj_) / 2);
}

std::vector<Simplex> DifferenceGraph::simplices(std::size_t s) const {
  std::vector<Simplex> out;
  const std::size_t target = s + 1;
  const std::size_t v = vertices_.size();
  if (target > v) return out;

  // Depth-first clique extension; cand[d] holds common neighbours of the
  // current clique that come after its last vertex.
  std::vector<std::vector<std::uint64_t>> cand(target + 1, std::vector<std::uint64_t>(words_, 0));
  std::vector<std::size_t> clique;
  auto after_mask = [&](std::size_t u, std::vector<std::uint64_t>& mask) {
    std::fill(mask.begin(), mask.end(), 0);
    for (std::size_t w = 0; w < words_; ++w) {
      const std::size_t base = w * 64;
      std::uint64_t bits = ~std::uint64_t{0};
      if (base + 64 <= u + 1) {
        bits = 0;
      } else if (base <= u) {
        bits = ~std::uint64_t{0} << ((u + 1) - base);
      }
      if (base + 64 > v) bits &= (v - base >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (v - base)) - 1);
      mask[w] = bits;
    }
  };

  std::vector<std::uint64_t> tmp(words_);
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (clique.size() == target) {
      Simplex x;
      for (auto k : clique) x.push_back(vertices_[k]);
      out.push_back(std::move(x));
      return;
    }
    const auto& mine = cand[depth];
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = mine[w];
      while (bits) {
        const std::size_t u = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        bits &= bits - 1;
        after_mask(u, tmp);
        auto& next = cand[depth + 1];
        simd::and_words(next, mine, std::span<const std::uint64_t>(adj_.data() + u * words_, words_));
        simd::and_words(next, next, tmp);
        clique.push_back(u);
        self(self, depth + 1);
        clique.pop_back();
      }
    }
  };
  after_mask(SIZE_MAX, cand[0]);
  // SIZE_MAX + 1 wraps to 0: every vertex is a candidate at the root.
  recurse(recurse, 0);
  return out;
}

std::size_t DifferenceGraph::max_dimension() const {
  std::size_t s = 0;
  while (!simplices(s + 1).empty()) ++s;
  return s;
}

std::vector<Simplex> enumerate_simplices(std::size_t n, LatticeClass l, std::size_t s, EdgeSource source) {
  return DifferenceGraph(n, l, source).simplices(s);
}

bool is_simplex(LatticeClass l, const std::vector<Difference>& vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (vertices[a] == vertices[b] || !proper_remainder_oracle(l, vertices[a], vertices[b])) return false;
    }
  }
  return true;
}

// ----------------------------------------------------------------- Action

Difference sn_act(const Permutation& sigma, const Difference& d) {
  if (d.i > sigma.degree() || d.j > sigma.degree()) throw InputError("permutation degree does not match n");
  return {d.marker, static_cast<std::uint8_t>(sigma(d.i)), static_cast<std::uint8_t>(sigma(d.j))};
}

Simplex sn_act(const Permutation& sigma, const Simplex& x) {
  Simplex out;
  out.reserve(x.size());
  for (const auto& d : x) out.push_back(sn_act(sigma, d));
  std::sort(out.begin(), out.end());
  return out;
}

FormalCombination sn_act(const Permutation& sigma, const FormalCombination& f) {
  FormalCombination out;
  for (const auto& [k, c] : f) {
    if (k < 1 || k > sigma.degree()) throw InputError("permutation degree does not match n");
    out[static_cast<std::size_t>(sigma(static_cast<int>(k)))] = c;
  }
  return out;
}

std::string to_string(NormalShape f) { return f == NormalShape::Delta ? "delta" : "nabla"; }

Simplex normal_simplex(const NormalForm& f) {
  Simplex x;
  for (std::size_t k = 2; k <= f.s + 2; ++k) {
    const auto m = static_cast<std::uint8_t>(f.marker);
    const auto kk = static_cast<std::uint8_t>(k);
    x.push_back(f.shape == NormalShape::Delta ? Difference{m, 1, kk} : Difference{m, kk, 1});
  }
  std::sort(x.begin(), x.end());
  return x;
}

std::optional<NormalForm> normal_form_of(const Simplex& x) {
  if (x.size() < 2) return std::nullopt;  // normal forms start at dimension 1
  const NormalForm delta{NormalShape::Delta, x.front().marker, x.size() - 1};
  if (normal_simplex(delta) == x) return delta;
  const NormalForm nabla{NormalShape::Nabla, x.front().marker, x.size() - 1};
  if (normal_simplex(nabla) == x) return nabla;
  return std::nullopt;
}

Normalization normalize_simplex(const Simplex& x, std::size_t n) {
  check_n(n);
  if (x.empty()) throw InputError("empty simplex");
  const std::uint8_t marker = x.front().marker;
  for (const auto& d : x) {
    if (d.marker != marker) throw StructuralError("mixed-marker simplex " + to_string(x) + " has no normal form");
    if (d.i > n || d.j > n) throw InputError("simplex index above n");
  }
  const bool common_first = std::all_of(x.begin(), x.end(), [&](const Difference& d) { return d.i == x.front().i; });
  const bool common_second = std::all_of(x.begin(), x.end(), [&](const Difference& d) { return d.j == x.front().j; });
  if (!common_first && !common_second) {
    throw StructuralError("simplex " + to_string(x) + " has no common first or second index");
  }
  const NormalShape shape = common_first ? NormalShape::Delta : NormalShape::Nabla;
  const std::size_t hub = common_first ? x.front().i : x.front().j;

  // Class 0: hub -> {1}; class 1: leaves -> {2..s+2}; class 2: the rest.
  std::vector<int> cls(n + 1, 2);
  cls[hub] = 0;
  for (const auto& d : x) cls[common_first ? d.j : d.i] = 1;
  const std::size_t s = x.size() - 1;
  std::size_t next[3] = {1, 2, s + 3};
  std::vector<int> images(n);
  for (std::size_t p = 1; p <= n; ++p) images[p - 1] = static_cast<int>(next[cls[p]]++);

  Normalization out{Permutation::from_one_line(images), {shape, marker, s}};
  return out;
}

// ----------------------------------------------------------------- Orbits

OrbitReport orbit_classify(std::size_t n, LatticeClass l, std::size_t s, EdgeSource source) {
  const auto all = enumerate_simplices(n, l, s, source);
  OrbitReport report;
  report.n = n;
  report.lattice = l;
  report.s = s;
  report.simplex_count = all.size();

  std::vector<Permutation> gens;
  for (std::size_t k = 1; k < n; ++k) gens.push_back(Permutation::transposition(n, static_cast<int>(k), static_cast<int>(k + 1)));

  std::unordered_map<std::string, std::size_t> orbit_of;
  orbit_of.reserve(all.size() * 2);
  for (const auto& x : all) {
    if (orbit_of.count(simplex_key(x))) continue;
    const std::size_t id = report.orbits.size();
    Orbit orbit;
    orbit.representative = x;
    std::deque<Simplex> queue{x};
    orbit_of.emplace(simplex_key(x), id);
    while (!queue.empty()) {
      Simplex y = std::move(queue.front());
      queue.pop_front();
      ++orbit.size;
      if (s >= 1 && normal_form_of(y)) orbit.normal_simplices.push_back(y);
      for (const auto& g : gens) {
        Simplex z = sn_act(g, y);
        if (orbit_of.emplace(simplex_key(z), id).second) queue.push_back(std::move(z));
      }
    }
    std::sort(orbit.normal_simplices.begin(), orbit.normal_simplices.end());
    report.orbits.push_back(std::move(orbit));
  }
  return report;
}

// ------------------------------------------------------------ Tame maps

Difference induced_vertex_map(LatticeClass l, std::size_t n, const Permutation& sigma, const RingElement& unit,
                              int sign, const Difference& lambda) {
  check_n(n);
  if (sigma.degree() != n) throw InputError("permutation degree does not match n");
  if (sign != 1 && sign != -1) throw InputError("sign must be +1 or -1");
  if (!is_unit(l, unit) || (l == LatticeClass::Generic && unit.b != 0)) {
    throw InputError(to_string(unit) + " is not a unit of the " + to_string(l) + " lattice");
  }
  RingElement coeff = ring_mul(l, marker_value(l, lambda.marker), unit);
  if (sign < 0) coeff = ring_neg(coeff);
  const Permutation inv = sigma.inverse();
  const std::size_t a = static_cast<std::size_t>(inv(lambda.i));
  const std::size_t b = static_cast<std::size_t>(inv(lambda.j));
  const CanonicalMarker cm = canonical_marker(l, coeff);
  return cm.negated ? make_difference(l, n, cm.index, b, a) : make_difference(l, n, cm.index, a, b);
}

Simplex probe_simplex(std::size_t n) {
  check_n(n);
  return normal_simplex({NormalShape::Delta, 0, n - 2});
}

TameDescriptor tame_descriptor(std::size_t n, LatticeClass l, const std::vector<Difference>& image) {
  check_n(n);
  if (image.size() != n - 1) {
    throw InputError("image must list " + std::to_string(n - 1) + " vertices, got " + std::to_string(image.size()));
  }
  Simplex sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw StructuralError("image vertices are not pairwise distinct");
  }
  for (std::size_t a = 0; a < image.size(); ++a) {
    for (std::size_t b = a + 1; b < image.size(); ++b) {
      if (!proper_remainder_oracle(l, image[a], image[b])) {
        throw StructuralError("image is not a simplex: " + to_string(image[a]) + " and " + to_string(image[b]) +
                              " are not proper remainders");
      }
    }
  }
  const Normalization norm = normalize_simplex(sorted, n);
  return {norm.sigma, norm.form.marker, norm.form.shape};
}

// ------------------------------------------------------------------ Audit

bool AuditReport::orbits_confirmed() const {
  return std::all_of(orbit_checks.begin(), orbit_checks.end(), [](const OrbitCheck& c) {
    return c.expected == c.observed && c.one_normal_per_orbit;
  });
}

AuditReport audit_lemmas(std::size_t n, LatticeClass l, std::size_t bound) {
  check_n(n);
  if (n > bound) throw InputError("audit bound is n <= " + std::to_string(bound));
  AuditReport r;
  r.n = n;
  r.lattice = l;
  r.expected_max_dimension = n - 2;

  const DifferenceGraph oracle(n, l, EdgeSource::Oracle);
  const auto& verts = oracle.vertices();
  for (std::size_t a = 0; a < verts.size(); ++a) {
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      if (oracle.adjacent(a, b) != proper_remainder_rule(verts[a], verts[b])) {
        r.rule_oracle_disagreements.emplace_back(verts[a], verts[b]);
      }
    }
  }

  r.max_dimension = oracle.max_dimension();
  const std::size_t card_m = marker_group(l).all.size();
  for (std::size_t s = 1; s <= r.max_dimension; ++s) {
    for (const auto& x : oracle.simplices(s)) {
      const bool same_marker =
          std::all_of(x.begin(), x.end(), [&](const Difference& d) { return d.marker == x.front().marker; });
      if (!same_marker) r.structure_violations.emplace_back(x, "markers differ");
      bool pairwise_ok = true;
      for (std::size_t a = 0; a < x.size() && pairwise_ok; ++a) {
        for (std::size_t b = a + 1; b < x.size(); ++b) {
          const int shared = (x[a].i == x[b].i) + (x[a].i == x[b].j) + (x[a].j == x[b].i) + (x[a].j == x[b].j);
          if (shared != 1) {
            pairwise_ok = false;
            break;
          }
        }
      }
      if (!pairwise_ok) r.structure_violations.emplace_back(x, "pairwise support intersection is not a single index");
      std::size_t common = 0;
      for (std::size_t k = 1; k <= n; ++k) {
        const bool in_all = std::all_of(x.begin(), x.end(), [&](const Difference& d) { return d.i == k || d.j == k; });
        common += in_all ? 1 : 0;
      }
      if (common != 1) r.structure_violations.emplace_back(x, "total support intersection is not a single index");
    }
  }

  for (std::size_t s = 0; s + 2 <= n; ++s) {
    const OrbitReport orbits = orbit_classify(n, l, s);
    OrbitCheck c;
    c.s = s;
    c.expected = s == 0 ? card_m / 2 : card_m;
    c.observed = orbits.orbits.size();
    if (s >= 1) {
      c.one_normal_per_orbit = std::all_of(orbits.orbits.begin(), orbits.orbits.end(),
                                           [](const Orbit& o) { return o.normal_simplices.size() == 1; });
    }
    r.orbit_checks.push_back(c);
  }
  return r;
}

}  // namespace tbl
