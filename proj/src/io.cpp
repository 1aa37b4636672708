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

#include "tbl/io.hpp"

#include <istream>
#include <iterator>

#include "tbl/error.hpp"

namespace tbl::io {

Json to_json(const Word& w, const Presentation& p) {
  Json out = Json::array();
  for (const Letter& l : w.letters()) out.push_back(Json::array({p.generators()[l.gen], static_cast<int>(l.exp)}));
  return out;
}

Json to_json(const Presentation& p) {
  Json rels = Json::array();
  for (const Word& r : p.relators()) rels.push_back(to_json(r, p));
  return Json{{"generators", p.generators()}, {"relators", std::move(rels)}};
}

Presentation presentation_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("presentation must be a JSON object");
  // Accept the bare presentation or a tool document wrapping it.
  if (!j.contains("generators")) {
    if (j.contains("payload")) return presentation_from_json(j.at("payload"));
    if (j.contains("presentation")) return presentation_from_json(j.at("presentation"));
  }
  if (!j.contains("generators") || !j.at("generators").is_array()) throw InputError("missing \"generators\" array");
  if (!j.contains("relators") || !j.at("relators").is_array()) throw InputError("missing \"relators\" array");

  std::vector<std::string> gens;
  for (const auto& g : j.at("generators")) {
    if (!g.is_string()) throw InputError("generator names must be strings");
    gens.push_back(g.get<std::string>());
  }
  const Presentation names(gens, {});
  std::vector<Word> rels;
  for (const auto& r : j.at("relators")) {
    if (!r.is_array()) throw InputError("each relator must be an array of [name, exponent] pairs");
    std::vector<Letter> letters;
    for (const auto& pair : r) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_number_integer()) {
        throw InputError("relator letters must be [name, exponent] pairs");
      }
      const auto idx = names.index_of(pair[0].get<std::string>());
      if (!idx) throw InputError("unknown generator '" + pair[0].get<std::string>() + "'");
      const auto e = pair[1].get<std::int64_t>();
      if (e != 1 && e != -1) throw InputError("exponents must be +1 or -1");
      letters.push_back({static_cast<std::uint32_t>(*idx), static_cast<std::int8_t>(e)});
    }
    rels.push_back(free_reduce(letters, gens.size()));
  }
  return Presentation(std::move(gens), std::move(rels));
}

Presentation read_presentation(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return presentation_from_json(j);
}

Presentation read_presentation(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return read_presentation(std::string_view(text));
}

Json to_json(const AbelianInvariants& a) {
  return Json{{"torsion", a.torsion}, {"free_rank", a.free_rank}, {"text", to_string(a)}};
}

Json to_json(const SubgroupStats& s) {
  return Json{{"degree", s.degree},
              {"schreier_generators", s.schreier_generators},
              {"relators_rewritten", s.relators_rewritten},
              {"relators", s.relators_nonempty},
              {"generators_eliminated", s.generators_eliminated}};
}

Json to_json(const SubgroupPresentation& sp) {
  Json origin = Json::array();
  for (const auto& [c, g] : sp.origin) origin.push_back(Json::array({c, g}));
  return Json{{"transversal", to_string(sp.strategy)},
              {"presentation", to_json(sp.presentation)},
              {"origin", std::move(origin)},
              {"stats", to_json(sp.stats)}};
}

Json to_json(const Permutation& p) { return p.one_line(); }

Json to_json(const TorusPoint& q) { return Json::array({to_string(q.x), to_string(q.y)}); }

Json to_json(const Configuration& c) {
  Json out = Json::array();
  for (const auto& q : c) out.push_back(to_json(q));
  return out;
}

Json to_json(const RingElement& x) { return to_string(x); }

Json to_json(const Simplex& x) {
  Json out = Json::array();
  for (const auto& d : x) out.push_back(to_string(d));
  return out;
}

Json to_json(const OrbitReport& r) {
  Json orbits = Json::array();
  for (const auto& o : r.orbits) {
    Json normals = Json::array();
    for (const auto& x : o.normal_simplices) normals.push_back(to_json(x));
    orbits.push_back(Json{{"representative", to_json(o.representative)},
                          {"size", o.size},
                          {"normal_simplices", std::move(normals)}});
  }
  return Json{{"n", r.n},
              {"lattice", to_string(r.lattice)},
              {"dim", r.s},
              {"simplices", r.simplex_count},
              {"orbit_count", r.orbits.size()},
              {"orbits", std::move(orbits)}};
}

Json to_json(const AuditReport& r) {
  Json dis = Json::array();
  for (const auto& [u, v] : r.rule_oracle_disagreements) dis.push_back(Json::array({to_string(u), to_string(v)}));
  Json viol = Json::array();
  for (const auto& [x, why] : r.structure_violations) viol.push_back(Json{{"simplex", to_json(x)}, {"reason", why}});
  Json orbits = Json::array();
  for (const auto& c : r.orbit_checks) {
    orbits.push_back(Json{{"dim", c.s},
                          {"expected", c.expected},
                          {"observed", c.observed},
                          {"one_normal_per_orbit", c.one_normal_per_orbit}});
  }
  return Json{{"n", r.n},
              {"lattice", to_string(r.lattice)},
              {"confirmed", r.confirmed()},
              {"rule_matches_oracle", r.rule_matches_oracle()},
              {"structure_confirmed", r.structure_confirmed()},
              {"orbits_confirmed", r.orbits_confirmed()},
              {"dimension_confirmed", r.dimension_confirmed()},
              {"max_dimension", r.max_dimension},
              {"expected_max_dimension", r.expected_max_dimension},
              {"rule_oracle_disagreements", std::move(dis)},
              {"structure_violations", std::move(viol)},
              {"orbit_checks", std::move(orbits)}};
}

}  // namespace tbl::io
