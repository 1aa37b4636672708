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

#include "tbl/perm.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "tbl/error.hpp"
#include "tbl/kernels.hpp"

namespace tbl {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree > kMaxDegree) throw InputError("permutation degree above " + std::to_string(kMaxDegree));
  std::iota(images_.begin(), images_.end(), std::uint8_t{0});
}

Permutation Permutation::from_one_line(std::span<const int> images) {
  Permutation p(images.size());
  std::vector<bool> hit(images.size(), false);
  for (std::size_t k = 0; k < images.size(); ++k) {
    const int v = images[k];
    if (v < 1 || static_cast<std::size_t>(v) > images.size() || hit[static_cast<std::size_t>(v - 1)]) {
      throw InputError("one-line notation is not a bijection");
    }
    hit[static_cast<std::size_t>(v - 1)] = true;
    p.images_[k] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Permutation Permutation::cycle(std::size_t degree, std::span<const int> points) {
  Permutation p(degree);
  std::vector<bool> seen(degree, false);
  for (int x : points) {
    if (x < 1 || static_cast<std::size_t>(x) > degree || seen[static_cast<std::size_t>(x - 1)]) {
      throw InputError("invalid cycle");
    }
    seen[static_cast<std::size_t>(x - 1)] = true;
  }
  for (std::size_t k = 0; k < points.size(); ++k) {
    const int from = points[k];
    const int to = points[(k + 1) % points.size()];
    p.images_[static_cast<std::size_t>(from - 1)] = static_cast<std::uint8_t>(to - 1);
  }
  return p;
}

Permutation Permutation::transposition(std::size_t degree, int a, int b) {
  const int pts[2] = {a, b};
  return cycle(degree, pts);
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree()) throw InputError("permutation degree mismatch");
  Permutation out;
  out.images_.resize(degree());
  simd::compose_perm(images_, next.images_, out.images_);
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(degree());
  for (std::size_t k = 0; k < degree(); ++k) out.images_[images_[k]] = static_cast<std::uint8_t>(k);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < degree(); ++k) {
    if (images_[k] != k) return false;
  }
  return true;
}

std::uint64_t Permutation::key() const {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < degree(); ++i) k |= static_cast<std::uint64_t>(images_[i]) << (4 * i);
  return k;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(degree());
  for (std::size_t k = 0; k < degree(); ++k) out[k] = images_[k] + 1;
  return out;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = images_[x];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

PermHomomorphism::PermHomomorphism(Presentation domain, std::size_t degree, std::vector<Permutation> images)
    : domain_(std::move(domain)), degree_(degree), images_(std::move(images)) {
  if (images_.size() != domain_.generator_count()) {
    throw InputError("homomorphism needs one image per generator (" + std::to_string(domain_.generator_count()) +
                     "), got " + std::to_string(images_.size()));
  }
  for (const auto& p : images_) {
    if (p.degree() != degree_) throw InputError("generator image has wrong degree");
  }
}

Permutation evaluate_perm(const PermHomomorphism& h, const Word& w) {
  Permutation acc(h.degree());
  for (const Letter& l : w.letters()) {
    if (l.gen >= h.images().size()) throw InputError("word letter outside homomorphism domain");
    const Permutation& g = h.images()[l.gen];
    acc = acc.then(l.exp > 0 ? g : g.inverse());
  }
  return acc;
}

std::vector<Permutation> enumerate_group(std::span<const Permutation> gens, std::size_t degree,
                                         std::uint64_t bound) {
  std::vector<Permutation> elems{Permutation(degree)};
  std::unordered_set<std::uint64_t> seen{elems.front().key()};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = elems[head].then(g);
      if (seen.insert(next.key()).second) {
        if (elems.size() >= bound) {
          throw InputError("image group order exceeds bound " + std::to_string(bound));
        }
        elems.push_back(std::move(next));
      }
    }
  }
  return elems;
}

ImageGroupInfo image_group_info(std::span<const Permutation> gens, std::size_t degree, std::uint64_t bound) {
  ImageGroupInfo info;
  info.order = enumerate_group(gens, degree, bound).size();
  // Orbit of point 1 under the generators.
  std::vector<bool> reached(degree, false);
  std::vector<std::size_t> stack;
  if (degree > 0) {
    reached[0] = true;
    stack.push_back(0);
  }
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      const std::size_t y = g.zero_based()[x];
      if (!reached[y]) {
        reached[y] = true;
        stack.push_back(y);
      }
    }
  }
  info.transitive = std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
  return info;
}

PermHomReport verify_perm_hom(const PermHomomorphism& h) {
  PermHomReport report;
  const auto& rels = h.domain().relators();
  for (std::size_t r = 0; r < rels.size(); ++r) {
    if (!evaluate_perm(h, rels[r]).is_identity()) report.violated.push_back(r);
  }
  if (report.verified()) {
    constexpr std::uint64_t kBound = 3628800;  // 10!
    report.image = image_group_info(h.images(), h.degree(), kBound);
  }
  return report;
}

}  // namespace tbl
