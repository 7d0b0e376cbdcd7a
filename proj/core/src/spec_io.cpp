#include "orbizeta/spec_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "orbizeta/error.hpp"

namespace orbizeta {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& pointer, const std::string& message) {
  throw Error(Error::Kind::Parse, "at " + (pointer.empty() ? std::string("/") : pointer) + ": " + message);
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, "missing key \"" + key + "\"");
  return *it;
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) schema_error(where + "/" + key, "unexpected key \"" + key + "\"");
}

std::int64_t as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) schema_error(where, "expected an integer");
  return v.get<std::int64_t>();
}

std::vector<std::int64_t> as_int_list(const json& v, const std::string& where) {
  if (!v.is_array()) schema_error(where, "expected an array of integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_int(v[i], where + "/" + std::to_string(i)));
  return out;
}

BigRational as_fraction(const json& v, const std::string& where) {
  auto parts = as_int_list(v, where);
  if (parts.size() != 2) schema_error(where, "expected [numerator, denominator]");
  if (parts[1] == 0) schema_error(where, "zero denominator");
  return make_rational(parts[0], parts[1]);
}

SectorLabel as_label(const json& v, const std::string& where) {
  auto parts = as_int_list(v, where);
  if (parts.size() != 2) schema_error(where, "expected [c, m]");
  if (parts[1] < 1) schema_error(where, "label order must be positive");
  return SectorLabel::make(parts[0], parts[1]);
}

json fraction_json(const BigRational& x) {
  return json::array({to_int64(x.get_num()), to_int64(x.get_den())});
}

json label_json(const SectorLabel& l) { return json::array({l.c, l.m}); }

Sector parse_sector(const json& v, const std::string& where) {
  if (!v.is_object()) schema_error(where, "expected a sector object");
  reject_unknown(v, {"label", "dim", "age", "profile", "aut_order", "inverse", "count_model"}, where);
  Sector s;
  s.label = as_label(require(v, "label", where), where + "/label");
  s.dim = static_cast<int>(as_int(require(v, "dim", where), where + "/dim"));
  s.age = as_fraction(require(v, "age", where), where + "/age");
  s.aut_order = as_int(require(v, "aut_order", where), where + "/aut_order");
  s.inverse_label = as_label(require(v, "inverse", where), where + "/inverse");
  const json& profile = require(v, "profile", where);
  if (!profile.is_array()) schema_error(where + "/profile", "expected an array");
  for (std::size_t i = 0; i < profile.size(); ++i) {
    std::string pw = where + "/profile/" + std::to_string(i);
    auto parts = as_int_list(profile[i], pw);
    if (parts.size() != 4) schema_error(pw, "expected [degree, weight_num, weight_den, multiplicity]");
    if (parts[2] == 0) schema_error(pw, "zero weight denominator");
    s.profile.push_back(ProfileEntry{static_cast<int>(parts[0]), make_rational(parts[1], parts[2]), parts[3]});
  }
  if (auto it = v.find("count_model"); it != v.end()) {
    std::string cw = where + "/count_model";
    if (!it->is_object()) schema_error(cw, "expected an object");
    reject_unknown(*it, {"weights", "group_order", "projective"}, cw);
    PointCountModel model;
    model.coordinate_weights = as_int_list(require(*it, "weights", cw), cw + "/weights");
    model.group_order = as_int(require(*it, "group_order", cw), cw + "/group_order");
    if (model.group_order < 1) schema_error(cw + "/group_order", "must be positive");
    if (auto p = it->find("projective"); p != it->end()) {
      if (!p->is_boolean()) schema_error(cw + "/projective", "expected a boolean");
      model.projective = p->get<bool>();
    }
    s.geometry = model;
  }
  return s;
}

json sector_json(const Sector& s) {
  json profile = json::array();
  for (const auto& p : s.profile)
    profile.push_back({p.degree, to_int64(p.weight.get_num()), to_int64(p.weight.get_den()), p.multiplicity});
  json out = {{"label", label_json(s.label)},
              {"dim", s.dim},
              {"age", fraction_json(s.age)},
              {"profile", profile},
              {"aut_order", s.aut_order},
              {"inverse", label_json(s.inverse_label)}};
  if (s.geometry) {
    out["count_model"] = {{"weights", s.geometry->coordinate_weights},
                          {"group_order", s.geometry->group_order},
                          {"projective", s.geometry->projective}};
  }
  return out;
}

RawRingTable parse_ring(const json& v, const std::string& where) {
  if (!v.is_object()) schema_error(where, "expected a ring object");
  reject_unknown(v, {"basis", "products", "unit"}, where);
  RawRingTable table;
  const json& basis = require(v, "basis", where);
  if (!basis.is_array() || basis.empty()) schema_error(where + "/basis", "expected a nonempty array");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::string bw = where + "/basis/" + std::to_string(i);
    const json& b = basis[i];
    if (!b.is_array() || (b.size() != 4 && b.size() != 5) || !b[0].is_string())
      schema_error(bw, "expected [name, degree, [age_num, age_den], [w_num, w_den]] with optional [c, m]");
    RawRingBasis e;
    e.name = b[0].get<std::string>();
    e.degree = static_cast<int>(as_int(b[1], bw + "/1"));
    e.age = as_fraction(b[2], bw + "/2");
    e.frobenius_weight = as_fraction(b[3], bw + "/3");
    if (b.size() == 5) e.label = as_label(b[4], bw + "/4");
    table.basis.push_back(e);
  }
  table.unit = table.basis.front().name;
  if (auto it = v.find("unit"); it != v.end()) {
    if (!it->is_string()) schema_error(where + "/unit", "expected a basis name");
    table.unit = it->get<std::string>();
  }
  if (auto it = v.find("products"); it != v.end()) {
    if (!it->is_array()) schema_error(where + "/products", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      std::string pw = where + "/products/" + std::to_string(i);
      const json& p = (*it)[i];
      if (!p.is_array() || p.size() != 3 || !p[0].is_string() || !p[1].is_string() || !p[2].is_array())
        schema_error(pw, "expected [x, y, [[[num, den], z], ...]]");
      RawRingProduct prod{p[0].get<std::string>(), p[1].get<std::string>(), {}};
      for (std::size_t k = 0; k < p[2].size(); ++k) {
        std::string tw = pw + "/2/" + std::to_string(k);
        const json& t = p[2][k];
        if (!t.is_array() || t.size() != 2 || !t[1].is_string()) schema_error(tw, "expected [[num, den], z]");
        prod.terms.emplace_back(as_fraction(t[0], tw + "/0"), t[1].get<std::string>());
      }
      table.products.push_back(std::move(prod));
    }
  }
  return table;
}

json ring_json(const RawRingTable& table) {
  json basis = json::array();
  for (const auto& b : table.basis) {
    json e = {b.name, b.degree, fraction_json(b.age), fraction_json(b.frobenius_weight)};
    if (b.label) e.push_back(label_json(*b.label));
    basis.push_back(e);
  }
  json products = json::array();
  for (const auto& p : table.products) {
    json terms = json::array();
    for (const auto& [c, z] : p.terms) terms.push_back({fraction_json(c), z});
    products.push_back({p.left, p.right, terms});
  }
  return {{"basis", basis}, {"products", products}, {"unit", table.unit}};
}

}  // namespace

OrbifoldSpec parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(Error::Kind::Parse, "at byte " + std::to_string(e.byte) + ": malformed document");
  }
  if (!doc.is_object()) schema_error("", "expected a top-level object");

  const json& family = require(doc, "family", "");
  if (!family.is_string()) schema_error("/family", "expected a string");
  std::string tag = family.get<std::string>();

  OrbifoldSpec spec;
  if (tag == "wps") {
    reject_unknown(doc, {"family", "weights", "base", "label"}, "");
    spec.family = WeightedProjective{as_int_list(require(doc, "weights", ""), "/weights")};
  } else if (tag == "bmu") {
    reject_unknown(doc, {"family", "n", "base", "label"}, "");
    spec.family = ClassifyingBMu{as_int(require(doc, "n", ""), "/n")};
  } else if (tag == "acq") {
    reject_unknown(doc, {"family", "m", "action_weights", "base", "label"}, "");
    AffineCyclicQuotient acq;
    acq.m = as_int(require(doc, "m", ""), "/m");
    if (acq.m < 1) schema_error("/m", "must be positive");
    for (auto w : as_int_list(require(doc, "action_weights", ""), "/action_weights"))
      acq.action_weights.push_back(mod64(w, acq.m));
    spec.family = acq;
  } else if (tag == "raw") {
    reject_unknown(doc, {"family", "sectors", "proper", "ring", "base", "label"}, "");
    RawSectors raw;
    const json& sectors = require(doc, "sectors", "");
    if (!sectors.is_array()) schema_error("/sectors", "expected an array");
    for (std::size_t i = 0; i < sectors.size(); ++i)
      raw.sectors.push_back(parse_sector(sectors[i], "/sectors/" + std::to_string(i)));
    if (auto it = doc.find("proper"); it != doc.end()) {
      if (!it->is_boolean()) schema_error("/proper", "expected a boolean");
      raw.proper = it->get<bool>();
    }
    if (auto it = doc.find("ring"); it != doc.end()) raw.ring = parse_ring(*it, "/ring");
    spec.family = std::move(raw);
  } else {
    schema_error("/family", "unknown family \"" + tag + "\" (expected wps, bmu, acq or raw)");
  }

  if (auto it = doc.find("base"); it != doc.end()) {
    if (!it->is_object()) schema_error("/base", "expected an object");
    reject_unknown(*it, {"q"}, "/base");
    if (auto q = it->find("q"); q != it->end()) {
      try {
        spec.base = FieldParam::specialized(as_int(*q, "/base/q"));
      } catch (const Error& e) {
        if (e.kind() == Error::Kind::Parse) throw;
        schema_error("/base/q", e.what());
      }
    }
  }
  if (auto it = doc.find("label"); it != doc.end()) {
    if (!it->is_string()) schema_error("/label", "expected a string");
    spec.label = it->get<std::string>();
  }

  validate_spec(spec);
  return spec;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Error::Kind::Parse, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

OrbifoldSpec load_spec(const std::string& path) { return parse_spec(read_file(path)); }

std::string serialize_spec(const OrbifoldSpec& spec) {
  json doc;
  doc["family"] = family_tag(spec);
  if (auto* w = std::get_if<WeightedProjective>(&spec.family)) {
    doc["weights"] = w->weights;
  } else if (auto* b = std::get_if<ClassifyingBMu>(&spec.family)) {
    doc["n"] = b->n;
  } else if (auto* a = std::get_if<AffineCyclicQuotient>(&spec.family)) {
    doc["m"] = a->m;
    doc["action_weights"] = a->action_weights;
  } else {
    const auto& raw = std::get<RawSectors>(spec.family);
    json sectors = json::array();
    for (const auto& s : raw.sectors) sectors.push_back(sector_json(s));
    doc["sectors"] = sectors;
    doc["proper"] = raw.proper;
    if (raw.ring) doc["ring"] = ring_json(*raw.ring);
  }
  doc["base"] = json::object();
  if (spec.base.q) doc["base"]["q"] = *spec.base.q;
  if (!spec.label.empty()) doc["label"] = spec.label;
  return doc.dump();
}

std::string decomposition_to_json(const InertiaDecomposition& d) {
  json sectors = json::array();
  for (const auto& s : d.sectors) sectors.push_back(sector_json(s));
  json doc = {{"ambient_dim", d.ambient_dim}, {"proper", d.proper}, {"sectors", sectors}};
  return doc.dump();
}

Report validate_decomposition(const InertiaDecomposition& d) {
  Report report;
  report.title = "inertia decomposition";

  std::vector<const Sector*> identities;
  for (const auto& s : d.sectors)
    if (s.label.is_identity()) identities.push_back(&s);
  report.add("exactly one identity sector", identities.size() == 1,
             identities.size() == 1 ? "" : std::to_string(identities.size()) + " identity sectors");
  if (identities.size() == 1) {
    const Sector& id = *identities.front();
    report.add("identity sector has age 0", id.age == 0, id.age == 0 ? "" : "age " + to_string(id.age));
  }

  std::set<SectorLabel> seen;
  std::string duplicates;
  for (const auto& s : d.sectors)
    if (!seen.insert(s.label).second) duplicates += " " + s.label.to_string();
  report.add("sector labels distinct", duplicates.empty(), duplicates.empty() ? "" : "duplicated:" + duplicates);

  std::string bad_age, bad_profile;
  for (const auto& s : d.sectors) {
    if (s.age < 0) bad_age += " " + s.label.to_string();
    std::int64_t degree_zero = 0;
    for (const auto& p : s.profile)
      if (p.degree == 0) degree_zero += p.multiplicity;
    if (degree_zero < 1) bad_profile += " " + s.label.to_string();
  }
  report.add("ages nonnegative", bad_age.empty(), bad_age.empty() ? "" : "negative at" + bad_age);
  report.add("every sector carries a degree-0 class", bad_profile.empty(),
             bad_profile.empty() ? "" : "missing at" + bad_profile);

  std::string bad_inverse, bad_involution, bad_codim;
  for (const auto& s : d.sectors) {
    if (s.inverse_label != s.label.inverse()) {
      bad_inverse += " " + s.label.to_string() + "->" + s.inverse_label.to_string();
      continue;
    }
    const Sector* inv = d.find(s.inverse_label);
    if (inv == nullptr) {
      bad_involution += " " + s.label.to_string() + " (inverse missing)";
      continue;
    }
    if (inv->inverse_label != s.label || inv->dim != s.dim || inv->profile != s.profile)
      bad_involution += " " + s.label.to_string();
    BigRational lhs = s.age + inv->age;
    BigRational rhs = BigRational(d.ambient_dim - s.dim);
    if (lhs != rhs) {
      bad_codim += " " + s.label.to_string() + ": " + to_string(s.age) + " + " + to_string(inv->age) +
                   " != " + std::to_string(d.ambient_dim) + " - " + std::to_string(s.dim);
    }
  }
  report.add("inverse label is modular negation", bad_inverse.empty(), bad_inverse);
  report.add("involution pairs sectors of equal dim and profile", bad_involution.empty(), bad_involution);
  report.add("codimension identity age + age(inverse) = ambient_dim - dim", bad_codim.empty(), bad_codim);
  return report;
}

}  // namespace orbizeta
