#include "orbizeta/model.hpp"

#include <algorithm>
#include <sstream>

#include "orbizeta/error.hpp"

namespace orbizeta {

SectorLabel SectorLabel::make(std::int64_t c, std::int64_t m) {
  if (m < 1) throw Error(Error::Kind::Validation, "sector label order must be positive");
  c = mod64(c, m);
  std::int64_t g = gcd64(c, m);
  if (c == 0) return identity();
  return {c / g, m / g};
}

SectorLabel SectorLabel::inverse() const { return make(m - c, m); }

std::string SectorLabel::to_string() const {
  std::ostringstream os;
  os << "(" << c << "," << m << ")";
  return os.str();
}

std::int64_t Sector::betti() const {
  std::int64_t total = 0;
  for (const auto& p : profile) total += p.multiplicity;
  return total;
}

const Sector* InertiaDecomposition::find(const SectorLabel& label) const {
  auto it = std::find_if(sectors.begin(), sectors.end(),
                         [&](const Sector& s) { return s.label == label; });
  return it == sectors.end() ? nullptr : &*it;
}

const Sector& InertiaDecomposition::at(const SectorLabel& label) const {
  if (const Sector* s = find(label)) return *s;
  throw Error(Error::Kind::Structure, "sector " + label.to_string() + " not present");
}

std::int64_t InertiaDecomposition::total_betti() const {
  std::int64_t total = 0;
  for (const auto& s : sectors) total += s.betti();
  return total;
}

FieldParam FieldParam::specialized(std::int64_t q) {
  if (q < 2) throw Error(Error::Kind::Validation, "q must be a prime power >= 2");
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  std::int64_t rest = q, e = 0;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw Error(Error::Kind::Validation, "q = " + std::to_string(q) + " is not a prime power");
  return FieldParam{q, p, e};
}

std::string family_tag(const OrbifoldSpec& spec) {
  struct {
    std::string operator()(const WeightedProjective&) const { return "wps"; }
    std::string operator()(const ClassifyingBMu&) const { return "bmu"; }
    std::string operator()(const AffineCyclicQuotient&) const { return "acq"; }
    std::string operator()(const RawSectors&) const { return "raw"; }
  } visitor;
  return std::visit(visitor, spec.family);
}

std::vector<std::int64_t> group_orders(const OrbifoldSpec& spec) {
  std::vector<std::int64_t> orders;
  if (auto* w = std::get_if<WeightedProjective>(&spec.family)) {
    orders = w->weights;
  } else if (auto* b = std::get_if<ClassifyingBMu>(&spec.family)) {
    orders = {b->n};
  } else if (auto* a = std::get_if<AffineCyclicQuotient>(&spec.family)) {
    orders = {a->m};
  } else {
    for (const auto& s : std::get<RawSectors>(spec.family).sectors) {
      orders.push_back(s.label.m);
      orders.push_back(s.aut_order);
    }
  }
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  return orders;
}

namespace {

void fail(const std::string& message) { throw Error(Error::Kind::Validation, message); }

void validate_raw_sector(const Sector& s, std::size_t index) {
  std::string where = "sector " + std::to_string(index) + " " + s.label.to_string();
  if (s.dim < 0) fail(where + ": dim must be nonnegative");
  if (s.age < 0) fail(where + ": age must be nonnegative");
  if (s.aut_order < 1) fail(where + ": aut_order must be positive");
  if (s.label.is_identity() && s.age != 0) fail(where + ": identity sector must have age 0");
  std::int64_t degree_zero = 0;
  for (const auto& p : s.profile) {
    if (p.degree < 0) fail(where + ": profile degree must be nonnegative");
    if (p.multiplicity < 1) fail(where + ": profile multiplicity must be positive");
    if (p.degree == 0) degree_zero += p.multiplicity;
  }
  if (degree_zero < 1) fail(where + ": profile needs at least one degree-0 class");
}

}  // namespace

void validate_spec(const OrbifoldSpec& spec) {
  if (auto* w = std::get_if<WeightedProjective>(&spec.family)) {
    if (w->weights.empty()) fail("weights must be nonempty");
    for (auto x : w->weights)
      if (x < 1) fail("weights must be positive");
  } else if (auto* b = std::get_if<ClassifyingBMu>(&spec.family)) {
    if (b->n < 1) fail("n must be positive");
  } else if (auto* a = std::get_if<AffineCyclicQuotient>(&spec.family)) {
    if (a->m < 1) fail("m must be positive");
    if (a->action_weights.empty()) fail("action_weights must be nonempty");
    for (auto x : a->action_weights)
      if (x < 0 || x >= a->m) fail("action_weights must be reduced mod m");
  } else {
    const auto& raw = std::get<RawSectors>(spec.family);
    if (raw.sectors.empty()) fail("raw sector list must be nonempty");
    for (std::size_t i = 0; i < raw.sectors.size(); ++i) validate_raw_sector(raw.sectors[i], i);
  }

  if (!spec.base.is_specialized()) return;
  std::int64_t q = *spec.base.q;
  bool needs_split = !std::holds_alternative<RawSectors>(spec.family);
  for (auto order : group_orders(spec)) {
    if (gcd64(order, q) != 1)
      throw Error(Error::Kind::Validation,
                  "wild quotient unsupported: group order " + std::to_string(order) +
                      " is not coprime to q = " + std::to_string(q));
  }
  if (needs_split) {
    for (auto order : group_orders(spec)) {
      if (q % order != 1 % order)
        throw Error(Error::Kind::Validation,
                    "roots of unity not in base field: q = " + std::to_string(q) +
                        " is not 1 mod " + std::to_string(order));
    }
  }
}

bool operator==(const Sector& a, const Sector& b) {
  return a.label == b.label && a.dim == b.dim && a.age == b.age && a.profile == b.profile &&
         a.aut_order == b.aut_order && a.inverse_label == b.inverse_label &&
         a.geometry == b.geometry;
}

bool operator==(const RawSectors& a, const RawSectors& b) {
  return a.sectors == b.sectors && a.proper == b.proper && a.ring == b.ring;
}

bool operator==(const OrbifoldSpec& a, const OrbifoldSpec& b) {
  return a.family == b.family && a.base == b.base && a.label == b.label;
}

}  // namespace orbizeta
