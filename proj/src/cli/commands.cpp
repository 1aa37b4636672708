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

#include "tbl/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "tbl/complex.hpp"
#include "tbl/coset.hpp"
#include "tbl/error.hpp"
#include "tbl/io.hpp"
#include "tbl/torus.hpp"
#include "tbl/torus_braid.hpp"

namespace tbl::cli {

namespace {

using io::Json;

enum class Status { Ok, InputError, Finding };

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok:
      return "ok";
    case Status::InputError:
      return "input_error";
    case Status::Finding:
      return "finding";
  }
  return "ok";
}

struct Result {
  Status status = Status::Ok;
  Json payload = Json::object();
  std::string text;
  std::vector<std::string> diagnostics;
};

struct Globals {
  std::string format = "text";
  std::uint64_t seed = 0;  // accepted for helper commands; core paths ignore it
};

const std::vector<std::string> kGroups{"torus", "artin"};
const std::vector<std::string> kLatticeNames{"generic", "square", "hexagonal"};

BraidFamily family(const std::string& group, std::size_t n) {
  return {group == "artin" ? BraidKind::ArtinPlane : BraidKind::TorusZariski, n};
}

PermHomomorphism projection(const std::string& group, std::size_t n) {
  return group == "artin" ? artin_permutation_map(n) : mu_homomorphism(n);
}

std::vector<RelatorFamily> families_of(const std::string& group, std::size_t n) {
  return group == "artin" ? artin_relator_families(n) : zariski_relator_families(n);
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) out += (k ? sep : "") + items[k];
  return out;
}

std::string one_line_string(const Permutation& p) {
  std::vector<std::string> parts;
  for (int v : p.one_line()) parts.push_back(std::to_string(v));
  return "[" + join(parts, " ") + "]";
}

Json matrix_json(const IntegerMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    rows.push_back(std::vector<std::int64_t>(row.begin(), row.end()));
  }
  return rows;
}

std::string relators_text(const Presentation& p, const std::vector<RelatorFamily>& fams) {
  std::ostringstream s;
  for (std::size_t k = 0; k < p.relator_count(); ++k) {
    std::string label;
    for (const auto& f : fams) {
      if (k >= f.first && k < f.first + f.count) label = f.label;
    }
    s << "  " << (label.empty() ? "" : "[" + label + "] ") << format_word(p.relators()[k], p) << "\n";
  }
  return s.str();
}

// ------------------------------------------------------------- Commands

Result cmd_present(const std::string& group, std::size_t n) {
  const Presentation p = braid_presentation(family(group, n));
  const auto fams = families_of(group, n);
  Result r;
  Json fj = Json::array();
  for (const auto& f : fams) fj.push_back(Json{{"label", f.label}, {"first", f.first}, {"count", f.count}});
  r.payload = Json{{"group", group}, {"n", n}};
  r.payload.update(io::to_json(p));
  r.payload["families"] = std::move(fj);

  std::ostringstream s;
  s << "group " << group << " n=" << n << "\n";
  s << "generators (" << p.generator_count() << "): " << join(p.generators(), " ") << "\n";
  s << "relators (" << p.relator_count() << "):\n" << relators_text(p, fams);
  r.text = s.str();
  return r;
}

Result cmd_abelianize(const std::optional<std::string>& in_path, std::istream& in, const std::string& group,
                      std::optional<std::size_t> n) {
  Presentation p;
  std::string source;
  if (in_path) {
    if (*in_path == "-") {
      p = io::read_presentation(in);
    } else {
      std::ifstream f(*in_path);
      if (!f) throw InputError("cannot open '" + *in_path + "'");
      p = io::read_presentation(f);
    }
    source = *in_path == "-" ? "stdin" : *in_path;
  } else if (n) {
    p = braid_presentation(family(group, *n));
    source = group + " n=" + std::to_string(*n);
  } else {
    throw InputError("abelianize needs --in FILE|- or -n N");
  }
  const AbelianInvariants a = abelian_invariants(p);
  Result r;
  r.payload = Json{{"source", source},
                   {"generators", p.generator_count()},
                   {"relators", p.relator_count()},
                   {"invariants", io::to_json(a)}};
  r.text = to_string(a) + "\n";
  return r;
}

Result cmd_mu_check(const std::string& group, std::size_t n) {
  const PermHomomorphism h = projection(group, n);
  const PermHomReport rep = verify_perm_hom(h);
  Result r;
  Json violated = Json::array();
  std::ostringstream s;
  for (auto k : rep.violated) {
    violated.push_back(Json{{"index", k + 1}, {"relator", format_word(h.domain().relators()[k], h.domain())}});
  }
  r.payload = Json{{"group", group},
                   {"n", n},
                   {"relators", h.domain().relator_count()},
                   {"verified", rep.verified()},
                   {"violated", std::move(violated)}};
  if (rep.verified()) {
    r.payload["image_order"] = rep.image.order;
    r.payload["transitive"] = rep.image.transitive;
    s << "verified: " << h.domain().relator_count() << " relators map to the identity\n";
    s << "image order " << rep.image.order << (rep.image.transitive ? ", transitive" : ", not transitive") << "\n";
  } else {
    r.status = Status::Finding;
    s << "violated relators:";
    for (auto k : rep.violated) s << " " << k + 1;
    s << "\n";
  }
  r.text = s.str();
  return r;
}

Result cmd_normal_series(std::size_t n) {
  const NormalSeriesReport rep = normal_series_factors(n);
  Result r;
  std::vector<std::string> labels;
  for (const auto& f : rep.factors) labels.push_back(f.label());
  Json factors = Json::array();
  for (const auto& f : rep.factors) {
    factors.push_back(Json{{"kind", f.kind == SeriesFactor::Kind::Free ? "free" : "abelian"},
                           {"rank", f.rank},
                           {"label", f.label()}});
  }
  r.payload = Json{{"n", n}, {"length", rep.factors.size()}, {"chain", rep.chain}, {"factors", std::move(factors)}};
  r.text = join(rep.chain, " < ") + "\nfactors: " + join(labels, ", ") + "\n";
  return r;
}

Result cmd_pure_subgroup(const std::string& group, std::size_t n, const std::string& transversal, bool simplify,
                         bool abelianize, std::uint64_t bound) {
  const Presentation p = braid_presentation(family(group, n));
  const CosetTable t = regular_coset_table(p, projection(group, n), bound);
  const auto strategy = transversal == "dfs" ? TransversalStrategy::Dfs : TransversalStrategy::Bfs;
  SubgroupPresentation sp = rewrite_subgroup_presentation(t, schreier_transversal(t, strategy));
  if (simplify) sp = simplify_unit_relators(std::move(sp));

  Result r;
  r.payload = Json{{"group", group}, {"n", n}, {"simplified", simplify}};
  r.payload.update(io::to_json(sp));
  std::ostringstream s;
  s << "degree " << sp.stats.degree << "\n";
  s << "schreier generators " << sp.stats.schreier_generators << "\n";
  s << "relators " << sp.stats.relators_nonempty << " (of " << sp.stats.relators_rewritten << " rewritten)\n";
  if (simplify) s << "generators eliminated " << sp.stats.generators_eliminated << "\n";
  if (abelianize) {
    const AbelianInvariants a = abelian_invariants(sp.presentation);
    r.payload["invariants"] = io::to_json(a);
    s << "abelianization " << to_string(a) << "\n";
  }
  r.text = s.str();
  return r;
}

Result cmd_lattice_markers(const std::string& lattice) {
  const LatticeClass l = parse_lattice(lattice);
  const MarkerGroup g = marker_group(l);
  Result r;
  Json all = Json::array();
  for (const auto& u : g.all) all.push_back(io::to_json(u));
  Json positive = Json::array();
  std::ostringstream s;
  s << "lattice " << lattice << ": card M = " << g.all.size() << "\n";
  for (std::size_t k = 0; k < g.positive.size(); ++k) {
    const IntegerMatrix m = marker_matrix(l, g.positive[k]);
    positive.push_back(Json{{"name", marker_name(k)}, {"value", io::to_json(g.positive[k])}, {"matrix", matrix_json(m)}});
    s << "  " << marker_name(k) << " = " << to_string(g.positive[k]) << "  " << to_string(m) << "\n";
  }
  r.payload = Json{{"lattice", lattice}, {"order", g.all.size()}, {"all", std::move(all)}, {"positive", std::move(positive)}};
  r.text = s.str();
  return r;
}

Result cmd_lattice_kernel(const std::string& lattice, const std::string& alpha_text) {
  const LatticeClass l = parse_lattice(lattice);
  const RingElement alpha = parse_ring_element(l, alpha_text);
  const auto kernel = endo_kernel(l, alpha);
  Result r;
  r.payload = Json{{"lattice", lattice},
                   {"alpha", io::to_json(alpha)},
                   {"norm", ring_norm(l, alpha)},
                   {"matrix", matrix_json(marker_matrix(l, alpha))},
                   {"size", kernel.size()},
                   {"points", io::to_json(kernel)}};
  std::ostringstream s;
  s << "ker(" << to_string(alpha) << ") on " << lattice << ": " << kernel.size() << " points\n";
  for (const auto& q : kernel) s << "  " << to_string(q) << "\n";
  r.text = s.str();
  return r;
}

Result cmd_config_exceptional(const std::string& lattice, const std::string& points) {
  const LatticeClass l = parse_lattice(lattice);
  const Configuration c = parse_configuration(points);
  const bool necessary = is_exceptional_necessary(l, c);
  const auto witness = is_exceptional_exact(l, c);
  Result r;
  r.payload = Json{{"lattice", lattice},
                   {"points", io::to_json(c)},
                   {"m", c.size()},
                   {"necessary", necessary},
                   {"exceptional", witness.has_value()}};
  std::ostringstream s;
  s << "necessary condition: " << (necessary ? "yes" : "no") << "\n";
  if (witness) {
    r.payload["witness"] = Json{{"i", witness->i + 1}, {"j", witness->j + 1}, {"alpha", io::to_json(witness->alpha)}};
    s << "exceptional: yes (alpha = " << to_string(witness->alpha) << ", points " << witness->i + 1 << " and "
      << witness->j + 1 << ")\n";
  } else {
    r.payload["witness"] = nullptr;
    s << "exceptional: no\n";
  }
  r.text = s.str();
  return r;
}

Result cmd_orbit_equal(const std::string& lattice, const std::string& q_text, const std::string& qp_text) {
  const LatticeClass l = parse_lattice(lattice);
  const Configuration q = parse_configuration(q_text);
  const Configuration qp = parse_configuration(qp_text);
  const auto w = diagonal_orbit_equal(l, q, qp);
  Result r;
  r.payload = Json{{"lattice", lattice}, {"q", io::to_json(q)}, {"qprime", io::to_json(qp)}, {"equal", w.has_value()}};
  if (w) {
    r.payload["witness"] = Json{{"unit", io::to_json(w->unit)}, {"translation", io::to_json(w->translation)}};
    r.payload["image"] = io::to_json(aut_apply(l, *w, q));
    r.text = "equal: q -> " + to_string(w->unit) + " q + " + to_string(w->translation) + "\n";
  } else {
    r.payload["witness"] = nullptr;
    r.text = "not equal\n";
  }
  return r;
}

Json audit_payload(const AuditReport& a, std::ostringstream& s) {
  s << to_string(a.lattice) << " n=" << a.n << ": " << (a.confirmed() ? "confirmed" : "FINDING") << "\n";
  s << "  rule/oracle disagreements " << a.rule_oracle_disagreements.size() << "\n";
  for (const auto& [u, v] : a.rule_oracle_disagreements) s << "    " << to_string(u) << " | " << to_string(v) << "\n";
  s << "  structure violations " << a.structure_violations.size() << "\n";
  s << "  max dimension " << a.max_dimension << " (expected " << a.expected_max_dimension << ")\n";
  for (const auto& c : a.orbit_checks) {
    s << "  dim " << c.s << ": orbits " << c.observed << " (expected " << c.expected << ")"
      << (c.s >= 1 ? (c.one_normal_per_orbit ? ", one normal simplex each" : ", normal simplex count off") : "")
      << "\n";
  }
  return io::to_json(a);
}

Result cmd_complex(std::size_t n, const std::string& lattice, std::optional<std::size_t> dim, bool orbits,
                   bool audit, const std::string& graph) {
  const LatticeClass l = parse_lattice(lattice);
  const EdgeSource source = graph == "rule" ? EdgeSource::Rule : EdgeSource::Oracle;
  Result r;
  std::ostringstream s;
  if (audit) {
    const AuditReport a = audit_lemmas(n, l);
    r.payload = audit_payload(a, s);
    if (!a.confirmed()) r.status = Status::Finding;
    r.text = s.str();
    return r;
  }
  if (dim && *dim + 2 > n) {
    r.diagnostics.push_back("dimension " + std::to_string(*dim) + " is above n-2");
  }
  if (orbits) {
    std::vector<std::size_t> dims;
    if (dim) {
      dims.push_back(*dim);
    } else {
      for (std::size_t k = 0; k + 2 <= n; ++k) dims.push_back(k);
    }
    Json reports = Json::array();
    for (auto d : dims) {
      const OrbitReport rep = orbit_classify(n, l, d, source);
      reports.push_back(io::to_json(rep));
      s << "dim " << d << ": " << rep.simplex_count << " simplices, " << rep.orbits.size() << " orbits\n";
      for (const auto& o : rep.orbits) {
        s << "  size " << o.size << "  rep " << to_string(o.representative);
        for (const auto& x : o.normal_simplices) s << "  normal " << to_string(x);
        s << "\n";
      }
    }
    r.payload = Json{{"n", n}, {"lattice", lattice}, {"graph", graph}, {"orbits", std::move(reports)}};
    r.text = s.str();
    return r;
  }
  const DifferenceGraph g(n, l, source);
  if (dim) {
    const auto xs = g.simplices(*dim);
    Json list = Json::array();
    for (const auto& x : xs) list.push_back(io::to_json(x));
    r.payload = Json{{"n", n}, {"lattice", lattice}, {"graph", graph}, {"dim", *dim}, {"count", xs.size()},
                     {"simplices", std::move(list)}};
    s << xs.size() << " simplices of dimension " << *dim << "\n";
    for (const auto& x : xs) s << "  " << to_string(x) << "\n";
    r.text = s.str();
    return r;
  }
  Json counts = Json::array();
  s << "vertices " << g.vertices().size() << "\nedges " << g.edge_count() << "\n";
  const std::size_t top = g.max_dimension();
  for (std::size_t d = 0; d <= top; ++d) {
    const auto c = g.simplices(d).size();
    counts.push_back(c);
    s << "dim " << d << ": " << c << " simplices\n";
  }
  r.payload = Json{{"n", n},
                   {"lattice", lattice},
                   {"graph", graph},
                   {"vertices", g.vertices().size()},
                   {"edges", g.edge_count()},
                   {"max_dimension", top},
                   {"simplex_counts", std::move(counts)}};
  r.text = s.str();
  return r;
}

Json form_json(const NormalForm& f) {
  return Json{{"shape", to_string(f.shape)}, {"marker", marker_name(f.marker)}, {"dim", f.s}};
}

Result cmd_normalize(std::size_t n, const std::string& lattice, const std::string& text) {
  const LatticeClass l = parse_lattice(lattice);
  const Simplex x = parse_simplex(l, n, text);
  if (!is_simplex(l, x)) throw StructuralError("'" + text + "' is not a simplex of the " + lattice + " complex");
  const Normalization norm = normalize_simplex(x, n);
  const Simplex target = normal_simplex(norm.form);
  Result r;
  r.payload = Json{{"n", n},
                   {"lattice", lattice},
                   {"simplex", io::to_json(x)},
                   {"sigma", io::to_json(norm.sigma)},
                   {"form", form_json(norm.form)},
                   {"normal_simplex", io::to_json(target)}};
  r.text = "sigma " + one_line_string(norm.sigma) + "\nnormal " + to_string(norm.form.shape) + " marker " +
           marker_name(norm.form.marker) + ": " + to_string(target) + "\n";
  return r;
}

Result cmd_tame(std::size_t n, const std::string& lattice, const std::string& text) {
  const LatticeClass l = parse_lattice(lattice);
  const auto image = parse_difference_list(l, n, text);
  const TameDescriptor d = tame_descriptor(n, l, image);
  Result r;
  r.payload = Json{{"n", n},
                   {"lattice", lattice},
                   {"probe", io::to_json(probe_simplex(n))},
                   {"sigma", io::to_json(d.sigma)},
                   {"marker", marker_name(d.marker)},
                   {"shape", to_string(d.shape)}};
  r.text = "sigma " + one_line_string(d.sigma) + "\nmarker " + marker_name(d.marker) + "\nshape " +
           to_string(d.shape) + "\n";
  return r;
}

Result cmd_audit(std::size_t n, const std::string& lattice) {
  std::vector<LatticeClass> classes;
  if (lattice == "all") {
    classes.assign(kAllLattices.begin(), kAllLattices.end());
  } else {
    classes.push_back(parse_lattice(lattice));
  }
  Result r;
  std::ostringstream s;
  Json reports = Json::array();
  for (auto l : classes) {
    const AuditReport a = audit_lemmas(n, l);
    reports.push_back(audit_payload(a, s));
    if (!a.confirmed()) r.status = Status::Finding;
  }
  const std::string note = "commute relators use the range 1 <= i < j <= n-1 with j - i >= 2";
  r.payload = Json{{"n", n}, {"reports", std::move(reports)}, {"notes", Json::array({note})}};
  s << "note: " << note << "\n";
  r.text = s.str();
  return r;
}

// -------------------------------------------------------------- Driver

void emit(const Globals& g, const std::string& command, const Result& r, std::ostream& out, std::ostream& err) {
  for (const auto& d : r.diagnostics) err << "warning: " << d << "\n";
  if (g.format == "json") {
    Json doc{{"schema", "tbl/1"},
             {"command", command},
             {"status", status_name(r.status)},
             {"payload", r.payload},
             {"diagnostics", r.diagnostics}};
    out << doc.dump(2) << "\n";
  } else {
    out << r.text;
  }
}

CLI::App* deepest(CLI::App* app) {
  for (CLI::App* sub : app->get_subcommands()) return deepest(sub);
  return app;
}

std::string command_path(CLI::App* app) {
  std::string name;
  for (CLI::App* a = app; a != nullptr && a->get_parent() != nullptr; a = a->get_parent()) {
    name = a->get_name() + (name.empty() ? "" : " " + name);
  }
  return name;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Torus braid groups, torus lattices and the complex of differences", "tbl"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "Seed for randomized helpers");

  std::size_t n = 0;
  std::string group = "torus";
  std::string lattice = "generic";
  std::map<CLI::App*, std::function<Result()>> handlers;

  auto add_n = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-n", n, "Number of strands or points");
    if (required) opt->required();
    return opt;
  };
  auto add_group = [&](CLI::App* sub) {
    sub->add_option("--group", group, "torus or artin")->check(CLI::IsMember(kGroups));
  };
  auto add_lattice = [&](CLI::App* sub) {
    sub->add_option("--lattice", lattice, "generic, square or hexagonal")->check(CLI::IsMember(kLatticeNames));
  };

  auto* present = app.add_subcommand("present", "Print a braid group presentation");
  add_n(present, true);
  add_group(present);
  handlers[present] = [&] { return cmd_present(group, n); };

  std::optional<std::string> in_path;
  auto* abel = app.add_subcommand("abelianize", "Abelian invariants of a presentation");
  abel->add_option("--in", in_path, "JSON presentation file, or - for stdin");
  auto* abel_n = add_n(abel, false);
  add_group(abel);
  handlers[abel] = [&] {
    return cmd_abelianize(in_path, in, group, abel_n->count() ? std::optional<std::size_t>(n) : std::nullopt);
  };

  auto* mu = app.add_subcommand("mu-check", "Verify the projection to the symmetric group");
  add_n(mu, true);
  add_group(mu);
  handlers[mu] = [&] { return cmd_mu_check(group, n); };

  auto* series = app.add_subcommand("normal-series", "Normal series of the pure braid group");
  add_n(series, true);
  handlers[series] = [&] { return cmd_normal_series(n); };

  std::string transversal = "bfs";
  bool simplify = false;
  bool abelianize = false;
  std::uint64_t bound = kDefaultDegreeBound;
  auto* pure = app.add_subcommand("pure-subgroup", "Presentation of the pure subgroup by coset rewriting");
  add_n(pure, true);
  add_group(pure);
  pure->add_option("--transversal", transversal, "bfs or dfs")->check(CLI::IsMember({"bfs", "dfs"}));
  pure->add_flag("--simplify", simplify, "Eliminate generators killed by length-1 relators");
  pure->add_flag("--abelianize", abelianize, "Also print the abelianization");
  pure->add_option("--max-degree", bound, "Largest coset table allowed");
  handlers[pure] = [&] { return cmd_pure_subgroup(group, n, transversal, simplify, abelianize, bound); };

  auto* lat = app.add_subcommand("lattice", "Torus lattice arithmetic");
  lat->require_subcommand(1);
  auto* markers = lat->add_subcommand("markers", "Units of the endomorphism ring");
  add_lattice(markers);
  handlers[markers] = [&] { return cmd_lattice_markers(lattice); };
  std::string alpha;
  auto* kernel = lat->add_subcommand("kernel", "Kernel of an endomorphism");
  add_lattice(kernel);
  kernel->add_option("--alpha", alpha, "Ring element a+b*t")->required();
  handlers[kernel] = [&] { return cmd_lattice_kernel(lattice, alpha); };

  auto* config = app.add_subcommand("config", "Configurations of points");
  config->require_subcommand(1);
  std::string points;
  auto* exceptional = config->add_subcommand("exceptional", "Exceptional configuration test");
  add_lattice(exceptional);
  exceptional->add_option("--points", points, "Comma-separated x:y points")->required();
  handlers[exceptional] = [&] { return cmd_config_exceptional(lattice, points); };

  std::string q_text;
  std::string qp_text;
  auto* orbit = app.add_subcommand("orbit-equal", "Are two configurations in one diagonal orbit?");
  add_lattice(orbit);
  orbit->add_option("--q", q_text, "First configuration")->required();
  orbit->add_option("--qprime", qp_text, "Second configuration")->required();
  handlers[orbit] = [&] { return cmd_orbit_equal(lattice, q_text, qp_text); };

  std::optional<std::size_t> dim;
  bool orbits = false;
  bool audit = false;
  std::string graph = "oracle";
  auto* complex = app.add_subcommand("complex", "The complex of differences");
  add_n(complex, true);
  add_lattice(complex);
  complex->add_option("--dim", dim, "Simplex dimension");
  complex->add_flag("--orbits", orbits, "Classify simplices up to the symmetric group");
  complex->add_flag("--audit", audit, "Check the structural lemmas");
  complex->add_option("--graph", graph, "rule or oracle")->check(CLI::IsMember({"rule", "oracle"}));
  handlers[complex] = [&] { return cmd_complex(n, lattice, dim, orbits, audit, graph); };

  std::string simplex;
  auto* normalize = app.add_subcommand("normalize-simplex", "Carry a simplex to its normal form");
  add_n(normalize, true);
  add_lattice(normalize);
  normalize->add_option("--simplex", simplex, "m:i,j;m:i,j;...")->required();
  handlers[normalize] = [&] { return cmd_normalize(n, lattice, simplex); };

  std::string image;
  auto* tame = app.add_subcommand("tame-descriptor", "Recover a tame map from its vertex images");
  add_n(tame, true);
  add_lattice(tame);
  tame->add_option("--image", image, "Images of e_{1;1,2},...,e_{1;1,n}")->required();
  handlers[tame] = [&] { return cmd_tame(n, lattice, image); };

  std::string audit_lattice = "all";
  std::size_t audit_n = 4;
  auto* audit_cmd = app.add_subcommand("audit", "Audit the complex of differences on every lattice class");
  audit_cmd->add_option("-n", audit_n, "Number of points");
  audit_cmd->add_option("--lattice", audit_lattice, "Lattice class or all")
      ->check(CLI::IsMember({"all", "generic", "square", "hexagonal"}));
  handlers[audit_cmd] = [&] { return cmd_audit(audit_n, audit_lattice); };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << deepest(&app)->help();
    return static_cast<int>(ExitCode::Ok);
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return static_cast<int>(ExitCode::Ok);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << deepest(&app)->help();
    return static_cast<int>(ExitCode::InputError);
  }

  CLI::App* leaf = deepest(&app);
  const std::string command = command_path(leaf);
  auto it = handlers.find(leaf);
  if (it == handlers.end()) {
    err << "error: missing subcommand\n\n" << leaf->help();
    return static_cast<int>(ExitCode::InputError);
  }
  try {
    const Result r = it->second();
    emit(g, command, r, out, err);
    return r.status == Status::Finding ? static_cast<int>(ExitCode::Finding) : static_cast<int>(ExitCode::Ok);
  } catch (const std::exception& e) {
    // InputError, StructuralError and library range checks all land here.
    Result r;
    r.status = Status::InputError;
    r.diagnostics.push_back(e.what());
    err << "error: " << e.what() << "\n";
    if (g.format == "json") {
      Json doc{{"schema", "tbl/1"}, {"command", command}, {"status", "input_error"}, {"payload", Json::object()},
               {"diagnostics", r.diagnostics}};
      out << doc.dump(2) << "\n";
    }
    return static_cast<int>(ExitCode::InputError);
  }
}

}  // namespace tbl::cli
