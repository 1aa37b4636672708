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

#include "tbl/coset.hpp"

#include <deque>
#include <unordered_map>

#include "tbl/error.hpp"

namespace tbl {

namespace {

constexpr std::uint32_t kNone = UINT32_MAX;

std::vector<Letter> letter_order(std::size_t gens) {
  std::vector<Letter> out;
  for (std::uint32_t g = 0; g < gens; ++g) {
    out.push_back({g, 1});
    out.push_back({g, -1});
  }
  return out;
}

Word extend(const Word& w, Letter l) {
  std::vector<Letter> v(w.letters().begin(), w.letters().end());
  v.push_back(l);
  return free_reduce_unchecked(v);
}

}  // namespace

std::uint32_t CosetTable::trace(std::uint32_t c, const Word& w) const {
  for (const Letter& l : w.letters()) c = act(c, l);
  return c;
}

CosetTable regular_coset_table(const Presentation& p, const PermHomomorphism& h, std::uint64_t degree_bound) {
  if (h.domain().generators() != p.generators()) {
    throw InputError("homomorphism domain does not match the presentation");
  }
  const PermHomReport report = verify_perm_hom(h);
  if (!report.verified()) {
    throw InputError("homomorphism violates " + std::to_string(report.violated.size()) + " relator(s)");
  }

  CosetTable t;
  t.base_ = p;
  t.elements_ = enumerate_group(h.images(), h.degree(), degree_bound);
  const std::size_t deg = t.elements_.size();
  const std::size_t gens = p.generator_count();

  std::unordered_map<std::uint64_t, std::uint32_t> index;
  index.reserve(deg * 2);
  for (std::uint32_t c = 0; c < deg; ++c) index.emplace(t.elements_[c].key(), c);

  t.forward_.assign(deg * gens, kNone);
  t.backward_.assign(deg * gens, kNone);
  for (std::uint32_t c = 0; c < deg; ++c) {
    for (std::uint32_t g = 0; g < gens; ++g) {
      const std::uint32_t d = index.at(t.elements_[c].then(h.images()[g]).key());
      t.forward_[c * gens + g] = d;
      t.backward_[d * gens + g] = c;
    }
  }
  return t;
}

SchreierTransversal schreier_transversal(const CosetTable& t, TransversalStrategy strategy) {
  const std::size_t deg = t.degree();
  SchreierTransversal tr;
  tr.strategy = strategy;
  tr.representatives.assign(deg, Word{});
  tr.parent.assign(deg, kNone);
  tr.via.assign(deg, Letter{});
  std::vector<bool> seen(deg, false);
  seen[0] = true;
  const auto letters = letter_order(t.generator_count());

  if (strategy == TransversalStrategy::Bfs) {
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
      const std::uint32_t c = queue.front();
      queue.pop_front();
      for (const Letter& l : letters) {
        const std::uint32_t d = t.act(c, l);
        if (seen[d]) continue;
        seen[d] = true;
        tr.parent[d] = c;
        tr.via[d] = l;
        tr.representatives[d] = extend(tr.representatives[c], l);
        queue.push_back(d);
      }
    }
  } else {
    // Preorder depth-first: always follow the first unexplored letter.
    std::vector<std::pair<std::uint32_t, std::size_t>> stack{{0, 0}};
    while (!stack.empty()) {
      auto& [c, next] = stack.back();
      if (next == letters.size()) {
        stack.pop_back();
        continue;
      }
      const Letter l = letters[next++];
      const std::uint32_t d = t.act(c, l);
      if (seen[d]) continue;
      seen[d] = true;
      tr.parent[d] = c;
      tr.via[d] = l;
      tr.representatives[d] = extend(tr.representatives[c], l);
      stack.emplace_back(d, 0);
    }
  }
  return tr;
}

Word schreier_generator_word(const CosetTable& t, const SchreierTransversal& tr, std::uint32_t coset,
                             std::uint32_t gen) {
  const Letter l{gen, 1};
  const std::uint32_t d = t.act(coset, l);
  return word_concat(extend(tr.representatives[coset], l), word_inverse(tr.representatives[d]));
}

SubgroupPresentation rewrite_subgroup_presentation(const CosetTable& t, const SchreierTransversal& tr) {
  const std::size_t deg = t.degree();
  const std::size_t gens = t.generator_count();
  if (tr.representatives.size() != deg) throw InputError("transversal does not match coset table");

  // Schreier generator numbering; tree edges (freely trivial) get kNone.
  std::vector<std::uint32_t> number(deg * gens, kNone);
  std::vector<std::string> names;
  SubgroupPresentation out;
  out.strategy = tr.strategy;
  for (std::uint32_t c = 0; c < deg; ++c) {
    for (std::uint32_t g = 0; g < gens; ++g) {
      if (schreier_generator_word(t, tr, c, g).empty()) continue;
      number[c * gens + g] = static_cast<std::uint32_t>(names.size());
      names.push_back("x" + std::to_string(c) + "_" + t.base().generators()[g]);
      out.origin.emplace_back(c, g);
    }
  }

  std::vector<Word> relators;
  std::vector<Letter> buf;
  std::size_t rewritten = 0;
  for (std::uint32_t c = 0; c < deg; ++c) {
    for (const Word& r : t.base().relators()) {
      ++rewritten;
      buf.clear();
      std::uint32_t cur = c;
      for (const Letter& l : r.letters()) {
        if (l.exp > 0) {
          const std::uint32_t x = number[cur * gens + l.gen];
          if (x != kNone) buf.push_back({x, 1});
          cur = t.act(cur, l);
        } else {
          cur = t.act(cur, l);
          const std::uint32_t x = number[cur * gens + l.gen];
          if (x != kNone) buf.push_back({x, -1});
        }
      }
      Word w = cyclic_reduce(free_reduce_unchecked(buf));
      if (!w.empty()) relators.push_back(std::move(w));
    }
  }

  out.stats.degree = deg;
  out.stats.schreier_generators = names.size();
  out.stats.relators_rewritten = rewritten;
  out.stats.relators_nonempty = relators.size();
  out.presentation = Presentation(std::move(names), std::move(relators));
  return out;
}

SubgroupPresentation simplify_unit_relators(SubgroupPresentation sp) {
  const Presentation& p = sp.presentation;
  std::vector<bool> killed(p.generator_count(), false);
  std::vector<Word> rels = p.relators();
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Word& r : rels) {
      if (r.size() == 1 && !killed[r[0].gen]) {
        killed[r[0].gen] = true;
        changed = true;
      }
    }
    if (!changed) break;
    std::vector<Word> next;
    for (const Word& r : rels) {
      std::vector<Letter> kept;
      for (const Letter& l : r.letters()) {
        if (!killed[l.gen]) kept.push_back(l);
      }
      Word w = free_reduce_unchecked(kept);
      if (!w.empty()) next.push_back(std::move(w));
    }
    rels = std::move(next);
  }

  std::vector<std::uint32_t> renumber(p.generator_count(), kNone);
  std::vector<std::string> names;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> origin;
  for (std::uint32_t g = 0; g < p.generator_count(); ++g) {
    if (killed[g]) continue;
    renumber[g] = static_cast<std::uint32_t>(names.size());
    names.push_back(p.generators()[g]);
    origin.push_back(sp.origin[g]);
  }
  std::vector<Word> out_rels;
  for (const Word& r : rels) {
    std::vector<Letter> v;
    for (const Letter& l : r.letters()) v.push_back({renumber[l.gen], l.exp});
    out_rels.push_back(free_reduce_unchecked(v));
  }
  sp.stats.generators_eliminated = p.generator_count() - names.size();
  sp.stats.relators_nonempty = out_rels.size();
  sp.presentation = Presentation(std::move(names), std::move(out_rels));
  sp.origin = std::move(origin);
  return sp;
}

AbelianInvariants kernel_abelianization(const Presentation& p, const PermHomomorphism& h,
                                        TransversalStrategy strategy, std::uint64_t degree_bound) {
  const CosetTable t = regular_coset_table(p, h, degree_bound);
  const SchreierTransversal tr = schreier_transversal(t, strategy);
  return abelian_invariants(rewrite_subgroup_presentation(t, tr).presentation);
}

std::string to_string(TransversalStrategy s) { return s == TransversalStrategy::Bfs ? "bfs" : "dfs"; }

}  // namespace tbl
