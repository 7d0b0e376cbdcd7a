#include "orbizeta/zeta_io.hpp"

#include <json.hpp>

#include "orbizeta/error.hpp"
#include "orbizeta/spec_io.hpp"

namespace orbizeta {

namespace {

using nlohmann::json;

json fraction_json(const BigRational& x) {
  return json::array({to_int64(x.get_num()), to_int64(x.get_den())});
}

[[noreturn]] void zeta_error(const std::string& where, const std::string& message) {
  throw Error(Error::Kind::Parse, "at " + where + ": " + message);
}

}  // namespace

std::string zeta_to_json(const ZetaFunction& z) {
  json factors = json::array();
  for (const auto& [a, m] : z.factors())
    factors.push_back({{"exponent", fraction_json(a)}, {"multiplicity", m}});
  json doc = {{"factors", factors},
              {"formal", z.formal()},
              {"product", z.to_product_string()},
              {"root_index", z.root_index()},
              {"string", z.to_string()}};
  return doc.dump();
}

ZetaFunction parse_zeta(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(Error::Kind::Parse, "at byte " + std::to_string(e.byte) + ": malformed zeta document");
  }
  if (!doc.is_object()) zeta_error("/", "expected an object");
  auto it = doc.find("factors");
  if (it == doc.end() || !it->is_array()) zeta_error("/factors", "expected an array");
  ZetaFunction z;
  for (std::size_t i = 0; i < it->size(); ++i) {
    std::string where = "/factors/" + std::to_string(i);
    const json& f = (*it)[i];
    if (!f.is_object() || !f.contains("exponent") || !f.contains("multiplicity"))
      zeta_error(where, "expected {\"exponent\":[num,den],\"multiplicity\":m}");
    const json& e = f["exponent"];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
        e[1].get<std::int64_t>() == 0)
      zeta_error(where + "/exponent", "expected [numerator, nonzero denominator]");
    if (!f["multiplicity"].is_number_integer()) zeta_error(where + "/multiplicity", "expected an integer");
    z.multiply(make_rational(e[0].get<std::int64_t>(), e[1].get<std::int64_t>()),
               f["multiplicity"].get<std::int64_t>());
  }
  if (auto formal = doc.find("formal"); formal != doc.end()) {
    if (!formal->is_boolean()) zeta_error("/formal", "expected a boolean");
    z.set_formal(formal->get<bool>());
  }
  return z;
}

ZetaFunction load_zeta(const std::string& path) { return parse_zeta(read_file(path)); }

std::string trace_series_to_json(const TraceSeries& ts, std::optional<std::int64_t> q) {
  json out = json::array();
  for (std::size_t r = 1; r <= ts.length(); ++r) {
    CycloScalar v = ts.at(r).rescaled(ts.root_index);
    if (q) v = v.specialize(BigRational(*q));
    json classes = json::array();
    for (const auto& [e, c] : v.terms())
      classes.push_back({{"q_exponent", fraction_json(make_rational(e, v.root_index()))},
                         {"value", fraction_json(c)}});
    out.push_back({{"r", r}, {"classes", classes}});
  }
  return out.dump();
}

}  // namespace orbizeta
