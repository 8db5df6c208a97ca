#include "catena/json_io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "catena/error.hpp"
#include "catena/math_util.hpp"

namespace catena {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

ordered_json parse(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

ordered_json lattice_json_obj(const FiniteLattice& L) {
  ordered_json j;
  j["elements"] = L.labels();
  auto covers = ordered_json::array();
  for (auto& [a, b] : L.covers())
    covers.push_back(ordered_json::array({L.label(a), L.label(b)}));
  j["covers"] = covers;
  return j;
}

}  // namespace

FiniteLattice parse_lattice_json(const std::string& text) {
  ordered_json j = parse(text);
  if (!j.contains("elements") || !j.contains("covers"))
    throw Error(ErrorKind::ParseError, "lattice spec needs elements and covers");
  std::vector<std::string> labels;
  for (auto& e : j["elements"]) labels.push_back(e.get<std::string>());
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto& c : j["covers"]) {
    if (!c.is_array() || c.size() != 2)
      throw Error(ErrorKind::ParseError, "cover must be a pair");
    covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  return FiniteLattice::build_labeled(std::move(labels), covers);
}

std::string lattice_to_json(const FiniteLattice& L) {
  return lattice_json_obj(L).dump(2) + "\n";
}

namespace {

FiniteCommRing parse_ring_recipe(const ordered_json& j, uint32_t cap) {
  if (!j.is_object() || !j.contains("construct"))
    throw Error(ErrorKind::ParseError, "ring recipe needs a construct field");
  std::string kind = j["construct"].get<std::string>();
  if (kind == "zmod") return ring_zmod(j.at("n").get<uint32_t>(), cap);
  if (kind == "gf") {
    uint32_t p = j.at("p").get<uint32_t>();
    if (j.contains("poly")) {
      FpPoly f;
      for (auto& c : j["poly"]) f.push_back(c.get<uint32_t>());
      return ring_gf(p, f, cap);
    }
    return ring_gf(p, j.at("deg").get<uint32_t>(), cap);
  }
  if (kind == "product") {
    std::vector<FiniteCommRing> factors;
    for (auto& f : j.at("factors")) factors.push_back(parse_ring_recipe(f, cap));
    return ring_product(factors, cap);
  }
  if (kind == "quotient") {
    FiniteCommRing base = parse_ring_recipe(j.at("base"), cap);
    std::vector<uint32_t> gens;
    for (auto& g : j.at("ideal_generators")) gens.push_back(g.get<uint32_t>());
    return ring_quotient(base, gens, cap);
  }
  if (kind == "poly_quotient") {
    FiniteCommRing base = parse_ring_recipe(j.at("base"), cap);
    std::vector<uint32_t> f;
    for (auto& c : j.at("poly")) f.push_back(c.get<uint32_t>());
    return ring_poly_quotient(base, f, cap);
  }
  if (kind == "idealization") {
    FiniteCommRing base = parse_ring_recipe(j.at("base"), cap);
    const auto& m = j.at("module");
    std::string mk = m.at("kind").get<std::string>();
    if (mk == "free")
      return idealization(base, module_free(base, m.at("rank").get<uint32_t>()), cap);
    if (mk == "quotient") {
      std::vector<uint32_t> gens;
      for (auto& g : m.at("ideal_generators")) gens.push_back(g.get<uint32_t>());
      return idealization(base, module_quotient(base, gens), cap);
    }
    throw Error(ErrorKind::ParseError, "unknown module kind " + mk);
  }
  throw Error(ErrorKind::ParseError, "unknown construct " + kind);
}

}  // namespace

FiniteCommRing parse_ring_spec(const std::string& text, uint32_t cap) {
  return parse_ring_recipe(parse(text), cap);
}

RingExtension parse_extension_spec(const std::string& text, uint32_t cap) {
  ordered_json j = parse(text);
  if (!j.contains("ring"))
    throw Error(ErrorKind::ParseError, "extension spec needs a ring recipe");
  RingPtr S = std::make_shared<FiniteCommRing>(parse_ring_recipe(j["ring"], cap));
  ElemSet seed(S->n);
  seed.set(S->zero);
  seed.set(S->one);
  if (j.contains("subring_generators"))
    for (auto& g : j["subring_generators"]) {
      uint32_t v = g.get<uint32_t>();
      if (v >= S->n) throw Error(ErrorKind::ParseError, "generator index out of range");
      seed.set(v);
    }
  return RingExtension::from_subring(S, closure_subring(*S, seed));
}

FiniteGroup parse_group_spec(const std::string& text, uint32_t bound) {
  ordered_json j = parse(text);
  uint32_t points = j.at("points").get<uint32_t>();
  if (points == 0 || points > 255)
    throw Error(ErrorKind::ParseError, "points out of range");
  std::vector<Perm> gens;
  for (auto& g : j.at("generators")) {
    Perm p;
    for (auto& v : g) {
      uint32_t img = v.get<uint32_t>();  // 1-indexed
      if (img == 0 || img > points)
        throw Error(ErrorKind::ParseError, "generator image out of range");
      p.push_back(static_cast<uint8_t>(img - 1));
    }
    if (p.size() != points)
      throw Error(ErrorKind::ParseError, "generator length mismatch");
    gens.push_back(std::move(p));
  }
  return FiniteGroup::from_generators(points, gens, bound);
}

FieldTower parse_tower_spec(const std::string& text) {
  ordered_json j = parse(text);
  return FieldTower::make(j.at("p").get<uint32_t>(), j.at("n").get<uint32_t>());
}

const std::vector<std::string>& known_lattice_checks() {
  static const std::vector<std::string> checks = {
      "graded",       "distributive", "length",       "atoms",
      "loewy",        "p_extension",  "left_modular", "supersolvable",
      "two_catenarian"};
  return checks;
}

namespace {

ordered_json lattice_checks_obj(const FiniteLattice& L,
                                const std::vector<std::string>& checks,
                                int supersolvable_cap) {
  ordered_json out;
  for (const auto& c : checks) {
    if (c == "graded") {
      out["graded"] = is_graded(L).graded;
    } else if (c == "distributive") {
      out["distributive"] = is_distributive(L);
    } else if (c == "length") {
      LengthRange r = length_range(L, L.bottom(), L.top());
      out["length"] = ordered_json{{"min", r.shortest}, {"max", r.longest}};
    } else if (c == "atoms") {
      auto a = atoms(L, L.bottom(), L.top());
      auto arr = ordered_json::array();
      for (int x : a) arr.push_back(L.label(x));
      out["atoms"] = arr;
    } else if (c == "loewy") {
      auto arr = ordered_json::array();
      for (int x : loewy_series(L)) arr.push_back(L.label(x));
      out["loewy"] = arr;
    } else if (c == "p_extension") {
      out["p_extension"] = is_p_extension(L);
    } else if (c == "left_modular") {
      out["left_modular"] = is_left_modular_lattice(L);
    } else if (c == "supersolvable") {
      out["supersolvable"] = is_supersolvable(L, supersolvable_cap);
    } else if (c == "two_catenarian") {
      out["two_catenarian"] = is_2_catenarian(L);
    } else {
      throw Error(ErrorKind::SpecError, "unknown check " + c);
    }
  }
  return out;
}

}  // namespace

std::string lattice_report_json(const FiniteLattice& L,
                                const std::vector<std::string>& checks,
                                int supersolvable_cap) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["size"] = L.size();
  j["checks"] = lattice_checks_obj(L, checks, supersolvable_cap);
  return j.dump(2) + "\n";
}

std::string lattice_report_text(const FiniteLattice& L,
                                const std::vector<std::string>& checks,
                                int supersolvable_cap) {
  ordered_json j = lattice_checks_obj(L, checks, supersolvable_cap);
  std::ostringstream out;
  out << "elements: " << L.size() << "\n";
  for (auto& [k, v] : j.items()) out << k << ": " << v.dump() << "\n";
  return out.str();
}

namespace {

ordered_json ring_report_obj(const ExtensionLattice& EL, const CatenarityReport& rep) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["ring"] = EL.ext.S->recipe;
  j["subring_count"] = static_cast<int>(EL.subrings.size());
  {
    ordered_json elems;
    for (int i = 0; i < EL.lattice.size(); ++i) {
      auto arr = ordered_json::array();
      for (uint32_t x : EL.subrings[i].indices()) arr.push_back(EL.ext.S->names[x]);
      elems[EL.lattice.label(i)] = arr;
    }
    j["elements"] = elems;
  }
  j["lattice"] = lattice_json_obj(EL.lattice);
  {
    ordered_json types;
    for (const auto& [e, info] : EL.edges)
      types[EL.lattice.label(e.first) + "->" + EL.lattice.label(e.second)] =
          to_string(info.type);
    j["edge_types"] = types;
  }
  j["t_closure"] = EL.lattice.label(rep.t_index);
  j["graded"] = rep.graded;
  j["length"] = ordered_json{{"min", rep.len.shortest}, {"max", rep.len.longest}};
  ordered_json checks;
  checks["thm_3_62"] = rep.thm_3_62_ok ? "pass" : "fail";
  checks["cor_3_63"] = rep.cor_3_63_ok ? "pass" : "fail";
  checks["prop_3_411"] = rep.prop_3_411_ok ? "pass" : "fail";
  checks["prop_3_42"] = rep.prop_3_42_ok ? "pass" : "fail";
  checks["prop_3_6"] = rep.prop_3_6_ok ? "pass" : "fail";
  checks["thm_3_5"] = rep.unbranched ? (rep.thm_3_5_ok ? "pass" : "fail") : "n/a";
  checks["lemma_3_43"] =
      rep.unbranched ? (rep.all_elements_local ? "pass" : "fail") : "n/a";
  j["checks"] = checks;
  return j;
}

}  // namespace

std::string ring_report_json(const ExtensionLattice& EL, const CatenarityReport& rep) {
  return ring_report_obj(EL, rep).dump(2) + "\n";
}

std::string ring_report_text(const ExtensionLattice& EL, const CatenarityReport& rep) {
  std::ostringstream out;
  out << "ring: " << EL.ext.S->recipe << "\n";
  out << "subrings: " << EL.subrings.size() << "\n";
  out << "graded: " << (rep.graded ? "true" : "false") << "\n";
  out << "length: [" << rep.len.shortest << ", " << rep.len.longest << "]\n";
  out << "t_closure: " << EL.lattice.label(rep.t_index) << "\n";
  for (const auto& [e, info] : EL.edges)
    out << "edge " << EL.lattice.label(e.first) << " -> "
        << EL.lattice.label(e.second) << ": " << to_string(info.type) << "\n";
  ordered_json checks = ring_report_obj(EL, rep)["checks"];
  for (auto& [k, v] : checks.items())
    out << k << ": " << v.get<std::string>() << "\n";
  return out.str();
}

namespace {

ordered_json group_report_obj(const std::string& name, const FiniteGroup& G,
                              const Prop3814Report& rep, const SubgroupLattice& SL) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = name.empty() ? "G" : name;
  j["order"] = G.order();
  j["subgroups"] = SL.lattice.size();
  j["supersolvable_group"] = rep.group_supersolvable;
  j["lattice_graded"] = rep.lattice_graded;
  j["lattice_length"] = rep.lattice_length;
  if (rep.lattice_supersolvable.has_value())
    j["lattice_supersolvable"] = *rep.lattice_supersolvable;
  ordered_json checks;
  checks["prop_3_814"] = rep.iwasawa_ok ? "pass" : "fail";
  if (rep.lattice_supersolvable.has_value())
    checks["prop_3_813"] = rep.lattice_equiv_ok ? "pass" : "fail";
  j["checks"] = checks;
  return j;
}

}  // namespace

std::string group_report_json(const std::string& name, const FiniteGroup& G,
                              const Prop3814Report& rep, const SubgroupLattice& SL) {
  return group_report_obj(name, G, rep, SL).dump(2) + "\n";
}

std::string group_report_text(const std::string& name, const FiniteGroup& G,
                              const Prop3814Report& rep, const SubgroupLattice& SL) {
  std::ostringstream out;
  ordered_json j = group_report_obj(name, G, rep, SL);
  for (auto& [k, v] : j.items())
    if (k != "schema_version" && k != "checks") out << k << ": " << v.dump() << "\n";
  for (auto& [k, v] : j["checks"].items())
    out << k << ": " << v.get<std::string>() << "\n";
  return out.str();
}

namespace {

ordered_json tower_report_obj(const FieldTower& T, const DLatticeReport& rep) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["p"] = T.p;
  j["n"] = T.n;
  j["modulus"] = fp_poly_to_string(T.modulus);
  j["d_elements"] = rep.d_lat.labels();
  j["length"] = rep.length;
  j["omega"] = rep.omega;
  ordered_json checks;
  checks["prop_3_71"] = rep.covers_match ? "pass" : "fail";
  checks["prop_3_8"] = (rep.bijection_ok && rep.graded_match) ? "pass" : "fail";
  j["checks"] = checks;
  return j;
}

}  // namespace

std::string tower_report_json(const FieldTower& T, const DLatticeReport& rep) {
  return tower_report_obj(T, rep).dump(2) + "\n";
}

std::string tower_report_text(const FieldTower& T, const DLatticeReport& rep) {
  std::ostringstream out;
  ordered_json j = tower_report_obj(T, rep);
  for (auto& [k, v] : j.items())
    if (k != "schema_version" && k != "checks") out << k << ": " << v.dump() << "\n";
  for (auto& [k, v] : j["checks"].items())
    out << k << ": " << v.get<std::string>() << "\n";
  return out.str();
}

std::string verify_report_json(const VerifyReport& rep) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["corpus_size"] = rep.corpus_size;
  j["ok"] = rep.ok();
  auto arr = ordered_json::array();
  for (const auto& c : rep.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["instances"] = c.instances;
    cj["failures"] = c.failures;
    cj["status"] = c.pass() ? "pass" : "fail";
    if (!c.notes.empty()) cj["notes"] = c.notes;
    arr.push_back(cj);
  }
  j["checks"] = arr;
  return j.dump(2) + "\n";
}

std::string verify_report_text(const VerifyReport& rep) {
  std::ostringstream out;
  out << "corpus: " << rep.corpus_size << " extensions\n";
  for (const auto& c : rep.checks) {
    out << (c.pass() ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.instances
        << " instances";
    if (c.failures) out << ", " << c.failures << " failures";
    out << ")\n";
    for (const auto& n : c.notes) out << "      " << n << "\n";
  }
  out << (rep.ok() ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
  return out.str();
}

}  // namespace catena
