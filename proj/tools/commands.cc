#include "commands.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "eqidx/gspace.hpp"
#include "eqidx/index_calc.hpp"
#include "json_io.hpp"

namespace eqidx::cli {

namespace {

struct Options {
  std::optional<std::int64_t> k;
};

using Handler = std::function<json(const json&, const std::string&, const Options&)>;

RingPtr ring_of(const json& in, const std::string& path) {
  return BurnsideRing::create(parse_group(require(in, "group", path), child(path, "group")));
}

std::int64_t k_of(const json& in, const std::string& path, const Options& opt,
                  std::optional<std::int64_t> fallback) {
  if (auto* k = optional(in, "k")) return as_int(*k, child(path, "k"));
  if (opt.k) return *opt.k;
  if (fallback) return *fallback;
  throw InputError(child(path, "k"), "missing k (input field or --k)");
}

json labels(const SubgroupLattice& lat, const std::vector<SubgroupId>& ids) {
  json out = json::array();
  for (auto h : ids) out.push_back(lat.label(h));
  return out;
}

// group

json group_info(const json& in, const std::string& path, const Options&) {
  auto ring = ring_of(in, path);
  const auto& g = ring->group();
  const char* kind = g.kind() == FiniteGroup::Kind::Permutation ? "permutation"
                     : g.kind() == FiniteGroup::Kind::Diagonal  ? "diagonal"
                                                                : "table";
  return {{"order", g.order()},
          {"abelian", g.is_abelian()},
          {"kind", kind},
          {"fingerprint", g.fingerprint()},
          {"element_classes", g.conjugacy_classes().size()},
          {"subgroups", ring->lattice().size()},
          {"subgroup_classes", ring->rank()}};
}

json group_lattice(const json& in, const std::string& path, const Options&) {
  auto ring = ring_of(in, path);
  const auto& g = ring->group();
  const auto& lat = ring->lattice();
  json subs = json::array();
  for (SubgroupId h = 0; h < lat.size(); ++h) {
    json members = json::array();
    for (auto e : lat.subgroup(h).members) members.push_back(g.element_label(e));
    std::vector<SubgroupId> above;
    for (auto k : lat.supergroups(h))
      if (k != h) above.push_back(k);
    subs.push_back({{"label", lat.label(h)},
                    {"order", lat.subgroup(h).order()},
                    {"members", members},
                    {"class", lat.class_label(lat.class_of(h))},
                    {"normalizer", lat.label(lat.normalizer(h))},
                    {"contained_in", labels(lat, above)}});
  }
  json classes = json::array();
  for (ClassId c = 0; c < lat.num_classes(); ++c)
    classes.push_back({{"label", lat.class_label(c)},
                       {"order", lat.class_order(c)},
                       {"members", labels(lat, lat.class_members(c))}});
  return {{"subgroups", subs}, {"classes", classes}};
}

// burnside

json burnside_marks(const json& in, const std::string& path, const Options&) {
  auto ring = ring_of(in, path);
  const auto& lat = ring->lattice();
  json cls = json::array(), rows = json::array();
  for (ClassId c = 0; c < ring->rank(); ++c) {
    cls.push_back(lat.class_label(c));
    json row = json::array();
    for (ClassId h = 0; h < ring->rank(); ++h) row.push_back(ring->marks()(c, h));
    rows.push_back(row);
  }
  return {{"classes", cls}, {"marks", rows}};
}

json burnside_mul(const json& in, const std::string& path, const Options&) {
  auto ring = ring_of(in, path);
  auto a = parse_element(ring, require(in, "a", path), child(path, "a"));
  auto b = parse_element(ring, require(in, "b", path), child(path, "b"));
  return {{"result", to_json(a * b)}};
}

json burnside_restrict(const json& in, const std::string& path, const Options&) {
  auto ring = ring_of(in, path);
  auto b = parse_element(ring, require(in, "element", path), child(path, "element"));
  auto h = parse_subgroup(ring->lattice(), require(in, "subgroup", path), child(path, "subgroup"));
  auto sub = ring->subgroup_ring(h);
  return {{"subgroup", ring->lattice().label(h)},
          {"subgroup_order", sub->group().order()},
          {"result", to_json(restrict(b, sub))}};
}

json burnside_induce(const json& in, const std::string& path, const Options&) {
  auto ring = ring_of(in, path);
  auto h = parse_subgroup(ring->lattice(), require(in, "subgroup", path), child(path, "subgroup"));
  auto sub = ring->subgroup_ring(h);
  auto b = parse_element(sub, require(in, "element", path), child(path, "element"));
  return {{"result", to_json(induce(b, ring))}};
}

json burnside_rk(const json& in, const std::string& path, const Options& opt) {
  auto ring = ring_of(in, path);
  auto b = parse_element(ring, require(in, "element", path), child(path, "element"));
  const auto k = k_of(in, path, opt, std::nullopt);
  return {{"k", k}, {"value", r_k(b, static_cast<int>(k))}};
}

json burnside_char(const json& in, const std::string& path, const Options&) {
  auto ring = ring_of(in, path);
  auto b = parse_element(ring, require(in, "element", path), child(path, "element"));
  auto chi = permutation_character(b);
  const auto& g = ring->group();
  json out = json::array();
  for (std::size_t c = 0; c < g.conjugacy_classes().size(); ++c) {
    const auto& cls = g.conjugacy_classes()[c];
    out.push_back({{"representative", g.element_label(cls.front())},
                   {"size", cls.size()},
                   {"value", to_json(chi.values[c])}});
  }
  return {{"character", out}};
}

// euler

GSimplicialComplex complex_of(const json& in, const std::string& path, bool& subdivided) {
  const auto n = as_int(require(in, "vertices", path), child(path, "vertices"));
  if (n < 0) throw InputError(child(path, "vertices"), "negative vertex count");
  std::vector<Simplex> simplices;
  const auto& sj = require(in, "simplices", path);
  const auto sp = child(path, "simplices");
  if (!sj.is_array()) throw InputError(sp, "expected an array of simplices");
  for (std::size_t i = 0; i < sj.size(); ++i) {
    const auto p = child(sp, i);
    if (!sj[i].is_array()) throw InputError(p, "expected a vertex list");
    Simplex s;
    for (std::size_t k = 0; k < sj[i].size(); ++k) {
      const auto v = as_int(sj[i][k], child(p, k));
      if (v < 0 || v >= n) throw InputError(child(p, k), "vertex out of range");
      s.push_back(static_cast<std::size_t>(v));
    }
    simplices.push_back(std::move(s));
  }
  std::vector<std::vector<std::size_t>> gens;
  if (auto* g = optional(in, "generators")) {
    const auto gp = child(path, "generators");
    if (!g->is_array()) throw InputError(gp, "expected an array of vertex permutations");
    for (std::size_t i = 0; i < g->size(); ++i) {
      const auto p = child(gp, i);
      if (!(*g)[i].is_array()) throw InputError(p, "expected a vertex permutation");
      std::vector<std::size_t> perm;
      for (std::size_t k = 0; k < (*g)[i].size(); ++k) {
        const auto v = as_int((*g)[i][k], child(p, k));
        if (v < 0) throw InputError(child(p, k), "negative vertex");
        perm.push_back(static_cast<std::size_t>(v));
      }
      gens.push_back(std::move(perm));
    }
  }
  auto x = GSimplicialComplex::from_generators(
      SimplicialComplex::from_simplices(static_cast<std::size_t>(n), simplices), gens);
  subdivided = !x.is_regular();
  return subdivided ? barycentric_subdivide(x) : x;
}

json euler_strat(const json& in, const std::string& path, const Options&) {
  auto ring = ring_of(in, path);
  StratifiedGData d{ring, {}};
  const auto& sj = require(in, "strata", path);
  const auto sp = child(path, "strata");
  if (!sj.is_array()) throw InputError(sp, "expected an array of strata");
  for (std::size_t i = 0; i < sj.size(); ++i) {
    const auto p = child(sp, i);
    d.strata.push_back({parse_class(ring->lattice(), require(sj[i], "class", p), child(p, "class")),
                        as_int(require(sj[i], "chi", p), child(p, "chi"))});
  }
  bool reduced = false;
  if (auto* r = optional(in, "reduced")) reduced = as_bool(*r, child(path, "reduced"));
  return {{"chi_G", to_json(chi_G_stratified(d, reduced))}};
}

json euler_simplicial(const json& in, const std::string& path, const Options&) {
  bool subdivided = false;
  auto x = complex_of(in, path, subdivided);
  auto chi = chi_G_simplicial(x);
  const auto& lat = x.ring()->lattice();
  json fixed = json::array();
  for (SubgroupId h = 0; h < lat.size(); ++h)
    fixed.push_back({{"subgroup", lat.label(h)}, {"euler", fixed_subcomplex(x, h).euler_characteristic()}});
  return {{"group_order", x.ring()->group().order()},
          {"subdivided", subdivided},
          {"euler", x.complex().euler_characteristic()},
          {"chi_G", to_json(chi)},
          {"fixed_sets", fixed}};
}

json euler_orbifold(const json& in, const std::string& path, const Options& opt) {
  bool subdivided = false;
  auto x = complex_of(in, path, subdivided);
  const auto k = k_of(in, path, opt, 1);
  const int kk = static_cast<int>(k);
  return {{"k", k},
          {"subdivided", subdivided},
          {"direct", chi_k_direct(x, kk)},
          {"from_chi_G", r_k(chi_G_simplicial(x), kk)}};
}

// index

std::vector<StratumIndexEntry> stratum_entries(const RingPtr& ring, const json& in, const std::string& path) {
  std::vector<StratumIndexEntry> out;
  const auto& ej = require(in, "entries", path);
  const auto ep = child(path, "entries");
  if (!ej.is_array()) throw InputError(ep, "expected an array of entries");
  for (std::size_t i = 0; i < ej.size(); ++i) {
    const auto p = child(ep, i);
    out.push_back({parse_class(ring->lattice(), require(ej[i], "class", p), child(p, "class")),
                   as_int(require(ej[i], "index", p), child(p, "index"))});
  }
  return out;
}

json index_from_strata_cmd(const json& in, const std::string& path, const Options&) {
  auto ring = ring_of(in, path);
  bool quotient = false;
  if (auto* q = optional(in, "quotient")) quotient = as_bool(*q, child(path, "quotient"));
  StratumIndexData d{ring, stratum_entries(ring, in, path)};
  auto b = quotient ? index_from_quotient(d) : index_from_strata(d);
  return {{"index", to_json(b)}, {"cardinality", cardinality(b)}};
}

std::vector<std::int64_t> per_subgroup_values(const SubgroupLattice& lat, const json& j,
                                              const std::string& path) {
  if (!j.is_object()) throw InputError(path, "expected an object keyed by subgroup label");
  std::vector<std::optional<std::int64_t>> v(lat.size());
  for (const auto& [key, value] : j.items()) {
    const auto p = child(path, key);
    v[parse_subgroup(lat, json(key), p)] = as_int(value, p);
  }
  std::vector<std::int64_t> out;
  for (SubgroupId h = 0; h < lat.size(); ++h) {
    if (!v[h]) throw InputError(child(path, lat.label(h)), "missing value for " + lat.label(h));
    out.push_back(*v[h]);
  }
  return out;
}

json index_invert(const json& in, const std::string& path, const Options&) {
  auto ring = ring_of(in, path);
  const auto& lat = ring->lattice();
  FixedSetIndexData d{ring, {}, std::nullopt};
  if (auto* e = optional(in, "element")) {
    // forward direction
    auto b = parse_element(ring, *e, child(path, "element"));
    auto f = fixed_indices_from_index(b);
    json ps = json::object(), pc = json::object();
    for (SubgroupId h = 0; h < lat.size(); ++h) ps[lat.label(h)] = f.per_subgroup[h];
    for (ClassId c = 0; c < ring->rank(); ++c) pc[lat.class_label(c)] = (*f.per_class)[c];
    return {{"per_subgroup", ps}, {"per_class", pc}};
  }
  d.per_subgroup = per_subgroup_values(lat, require(in, "per_subgroup", path), child(path, "per_subgroup"));
  if (auto* pc = optional(in, "per_class")) {
    const auto p = child(path, "per_class");
    if (!pc->is_object()) throw InputError(p, "expected an object keyed by class label");
    std::vector<std::optional<std::int64_t>> v(ring->rank());
    for (const auto& [key, value] : pc->items())
      v[parse_class(lat, json(key), child(p, key))] = as_int(value, child(p, key));
    std::vector<std::int64_t> vals;
    for (ClassId c = 0; c < ring->rank(); ++c) {
      if (!v[c]) throw InputError(child(p, lat.class_label(c)), "missing value for " + lat.class_label(c));
      vals.push_back(*v[c]);
    }
    d.per_class = std::move(vals);
  }
  auto b = index_from_fixed_indices(d);
  return {{"index", to_json(b)}, {"cardinality", cardinality(b)}};
}

SingularOrbitDatum orbit_datum(const RingPtr& ring, const json& j, const std::string& path) {
  auto h = parse_subgroup(ring->lattice(), require(j, "isotropy", path), child(path, "isotropy"));
  auto sub = ring->subgroup_ring(h);
  return {h, parse_element(sub, require(j, "local", path), child(path, "local"))};
}

json index_induce(const json& in, const std::string& path, const Options&) {
  auto ring = ring_of(in, path);
  return {{"index", to_json(induce_orbit_index(orbit_datum(ring, in, path), ring))}};
}

json index_ph_check(const json& in, const std::string& path, const Options&) {
  auto ring = ring_of(in, path);
  auto chi = parse_element(ring, require(in, "chi_G", path), child(path, "chi_G"));
  std::vector<SingularOrbitDatum> orbits;
  const auto& oj = require(in, "orbits", path);
  const auto op = child(path, "orbits");
  if (!oj.is_array()) throw InputError(op, "expected an array of orbits");
  for (std::size_t i = 0; i < oj.size(); ++i) orbits.push_back(orbit_datum(ring, oj[i], child(op, i)));
  auto rep = poincare_hopf_check(chi, orbits);
  return {{"pass", rep.pass}, {"discrepancy", to_json(rep.discrepancy)}};
}

json index_gsv(const json& in, const std::string& path, const Options& opt) {
  auto ring = ring_of(in, path);
  const auto& lat = ring->lattice();
  if (auto* dj = optional(in, "dims")) {
    const auto dp = child(path, "dims");
    if (!dj->is_object()) throw InputError(dp, "expected an object keyed by subgroup label");
    std::map<SubgroupId, std::int64_t> dims;
    for (const auto& [key, value] : dj->items())
      dims[parse_subgroup(lat, json(key), child(dp, key))] = as_int(value, child(dp, key));
    auto n = per_subgroup_values(lat, require(in, "fixed_dim", path), child(path, "fixed_dim"));
    const auto k = k_of(in, path, opt, std::nullopt);
    auto b = gsv_assemble_from_dims(ring, dims, n, k);
    return {{"gsv", to_json(b)}, {"cardinality", cardinality(b)}};
  }
  auto rad = parse_element(ring, require(in, "radial", path), child(path, "radial"));
  auto chibar = parse_element(ring, require(in, "chibar", path), child(path, "chibar"));
  auto b = gsv_from_radial(rad, chibar);
  return {{"gsv", to_json(b)}, {"cardinality", cardinality(b)}};
}

// poly

InvertiblePolynomial poly_of(const json& in, const std::string& path) {
  return validate(as_matrix(require(in, "E", path), child(path, "E")));
}

json phase_vector(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json poly_analyze(const json& in, const std::string& path, const Options&) {
  auto f = poly_of(in, path);
  json atoms = json::array();
  for (const auto& a : f.atoms())
    atoms.push_back({{"kind", atom_kind_name(a.kind)}, {"vars", a.vars}, {"exponents", a.exponents}});
  auto g = symmetry_group(f);
  json gens = json::array();
  for (std::size_t j = 0; j < f.num_variables(); ++j) {
    std::vector<Rational> col;
    for (std::size_t i = 0; i < f.num_variables(); ++i) col.push_back(mod_one(f.inverse()[i][j]));
    gens.push_back(phase_vector(col));
  }
  return {{"polynomial", f.to_string()},
          {"variables", f.num_variables()},
          {"det", f.det()},
          {"atoms", atoms},
          {"weights", phase_vector(f.weights())},
          {"mu", milnor_number(f)},
          {"group_order", g.order()},
          {"generators", gens},
          {"transpose", transpose(f).to_string()}};
}

json poly_index(const json& in, const std::string& path, const Options&) {
  auto f = poly_of(in, path);
  auto ring = BurnsideRing::create(symmetry_group(f));
  std::string group_label = ring->lattice().label(ring->lattice().whole());
  if (auto* s = optional(in, "subgroup")) {
    auto h = parse_subgroup(ring->lattice(), *s, child(path, "subgroup"));
    group_label = ring->lattice().label(h);
    ring = ring->subgroup_ring(h);
  }
  auto data = milnor_data(f, ring);
  auto ind = ring->one() - data.chi_g;
  const auto& lat = ring->lattice();
  json rows = json::array();
  for (SubgroupId h = 0; h < lat.size(); ++h) {
    const auto& r = data.per_subgroup[h];
    rows.push_back({{"subgroup", lat.label(h)}, {"fixed", r.fixed}, {"mu", r.mu}, {"chi", r.chi}});
  }
  json out{{"polynomial", f.to_string()},
           {"group", group_label},
           {"group_order", ring->group().order()},
           {"chi_G", to_json(data.chi_g)},
           {"index", to_json(ind)},
           {"equivariant_milnor", to_json(equivariant_milnor(data.chi_g - ring->one(), static_cast<int>(f.num_variables())))},
           {"cardinality", cardinality(ind)},
           {"per_subgroup", rows},
           {"r0", r_k(ind, 0)}};
  if (ring->group().order() * ring->group().order() <= 100000000) out["r1"] = r_k(ind, 1);
  return out;
}

json poly_dual_check(const json& in, const std::string& path, const Options&) {
  auto f = poly_of(in, path);
  DualityPair pair(f);
  auto rep = duality_check(pair);
  const auto& lat = pair.ring()->lattice();
  const auto& dlat = pair.dual_ring()->lattice();
  json rows = json::array();
  for (const auto& p : rep.pairs)
    rows.push_back({{"H", lat.label(p.h)},
                    {"H_T", dlat.label(p.h_dual)},
                    {"r1", p.r1},
                    {"r1_dual", p.r1_dual}});
  return {{"polynomial", f.to_string()},
          {"transpose", pair.dual().to_string()},
          {"r0", rep.r0},
          {"r0_dual", rep.r0_dual},
          {"r0_equal", rep.r0_equal()},
          {"pairs", rows},
          {"r1_equal", rep.r1_equal()},
          {"r1_equal_up_to_sign", rep.r1_equal_signed()}};
}

const std::map<std::string, std::map<std::string, Handler>>& handlers() {
  static const std::map<std::string, std::map<std::string, Handler>> table{
      {"group", {{"info", group_info}, {"lattice", group_lattice}}},
      {"burnside",
       {{"marks", burnside_marks},
        {"mul", burnside_mul},
        {"restrict", burnside_restrict},
        {"induce", burnside_induce},
        {"rk", burnside_rk},
        {"char", burnside_char}}},
      {"euler", {{"strat", euler_strat}, {"simplicial", euler_simplicial}, {"orbifold", euler_orbifold}}},
      {"index",
       {{"from-strata", index_from_strata_cmd},
        {"invert", index_invert},
        {"induce", index_induce},
        {"ph-check", index_ph_check},
        {"gsv", index_gsv}}},
      {"poly", {{"analyze", poly_analyze}, {"index", poly_index}, {"dual-check", poly_dual_check}}},
  };
  return table;
}

struct ItemResult {
  json value;
  bool ok;
};

ItemResult run_item(const Handler& h, const json& in, const std::string& path, const Options& opt) {
  try {
    return {h(in, path, opt), true};
  } catch (const InputError& e) {
    return {{{"error", e.what()}, {"path", e.path()}}, false};
  } catch (const DomainError& e) {
    return {{{"error", e.what()}, {"path", path}}, false};
  } catch (const std::exception& e) {
    return {{{"error", std::string("internal error: ") + e.what()}, {"path", path}}, false};
  }
}

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object() || j.is_array()) {
    if (j.empty()) {
      out << prefix << '\t' << j.dump() << '\n';
      return;
    }
    if (j.is_object()) {
      for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else {
      for (std::size_t i = 0; i < j.size(); ++i)
        flatten(j[i], prefix.empty() ? std::to_string(i) : prefix + "." + std::to_string(i), out);
    }
    return;
  }
  out << prefix << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

void emit(const json& j, const std::string& format, std::ostream& out) {
  if (format == "tsv")
    flatten(j, "", out);
  else
    out << j.dump(2) << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant indices and Burnside ring computations"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string in_path, out_path, format = "json";
  int jobs = 1;
  std::optional<std::int64_t> k;
  app.add_option("--in", in_path, "input JSON file (default: stdin)");
  app.add_option("--out", out_path, "output file (default: stdout)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--jobs", jobs, "worker threads for batch input")->check(CLI::Range(1, 256));
  app.add_option("--k", k, "order k for rk, orbifold and gsv");

  std::string group_name, command_name;
  for (const auto& [g, cmds] : handlers()) {
    auto* sub = app.add_subcommand(g, g + " commands");
    sub->require_subcommand(1);
    for (const auto& [c, h] : cmds) {
      auto* leaf = sub->add_subcommand(c);
      leaf->callback([&group_name, &command_name, g = g, c = c] {
        group_name = g;
        command_name = c;
      });
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }
  const Handler& handler = handlers().at(group_name).at(command_name);
  Options opt{k};

  std::string text;
  if (in_path.empty() || in_path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(in_path);
    if (!f) {
      err << "cannot read " << in_path << '\n';
      return 2;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }

  std::ofstream file_out;
  if (!out_path.empty()) {
    file_out.open(out_path);
    if (!file_out) {
      err << "cannot write " << out_path << '\n';
      return 2;
    }
  }
  std::ostream& sink = out_path.empty() ? out : file_out;

  json input;
  try {
    input = json::parse(text);
  } catch (const json::parse_error& e) {
    emit({{"error", std::string("malformed JSON: ") + e.what()}, {"path", ""}}, format, sink);
    return 1;
  }

  if (!input.is_array()) {
    auto r = run_item(handler, input, "", opt);
    emit(r.value, format, sink);
    return r.ok ? 0 : 1;
  }

  std::vector<ItemResult> results(input.size());
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), input.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < input.size(); ++i) results[i] = run_item(handler, input[i], child("", i), opt);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < input.size(); i += workers)
          results[i] = run_item(handler, input[i], child("", i), opt);
      });
    for (auto& t : pool) t.join();
  }
  json out_array = json::array();
  bool ok = true;
  for (auto& r : results) {
    ok = ok && r.ok;
    out_array.push_back(std::move(r.value));
  }
  emit(out_array, format, sink);
  return ok ? 0 : 1;
}

}  // namespace eqidx::cli
