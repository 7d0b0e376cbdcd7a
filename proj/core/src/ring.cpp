#include "orbizeta/ring.hpp"

#include <sstream>

#include "orbizeta/error.hpp"
#include "orbizeta/finite_field.hpp"

namespace orbizeta {

namespace {

void add_term(RingElement& e, std::size_t i, const CycloScalar& c) {
  auto it = e.find(i);
  if (it == e.end()) {
    if (!c.is_zero()) e.emplace(i, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) e.erase(it);
}

bool equal(const RingElement& a, const RingElement& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [i, c] : a) {
    auto it = b.find(i);
    if (it == b.end() || it->second != c) return false;
  }
  return true;
}

RingElement scaled(const RingElement& e, const CycloScalar& c) {
  RingElement out;
  for (const auto& [i, v] : e) add_term(out, i, v * c);
  return out;
}

GradedRing weighted_projective_ring(std::int64_t b) {
  // A^i for i < b is the degree-0 class of the sector of age i/b; A^b is
  // the degree-2 class of the untwisted sector.
  std::vector<BasisElement> basis;
  basis.push_back({"1", SectorLabel::identity(), 0, BigRational(0), BigRational(0)});
  for (std::int64_t i = 1; i < b; ++i)
    basis.push_back({i == 1 ? "A" : "A^" + std::to_string(i), SectorLabel::make(i, b), 0, make_rational(i, b),
                     BigRational(0)});
  basis.push_back({b == 1 ? "A" : "A^" + std::to_string(b), SectorLabel::identity(), 2, BigRational(0),
                   BigRational(1)});
  GradedRing ring(std::move(basis), 0);
  for (std::int64_t i = 0; i <= b; ++i)
    for (std::int64_t j = 0; j <= b; ++j)
      if (i + j <= b)
        ring.set_product(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                         {{static_cast<std::size_t>(i + j), CycloScalar::constant(1)}});
  return ring;
}

GradedRing group_ring(std::int64_t n) {
  std::vector<BasisElement> basis;
  for (std::int64_t c = 0; c < n; ++c)
    basis.push_back({"e" + std::to_string(c), SectorLabel::make(c, n), 0, BigRational(0), BigRational(0)});
  GradedRing ring(std::move(basis), 0);
  for (std::int64_t g = 0; g < n; ++g)
    for (std::int64_t h = 0; h < n; ++h)
      ring.set_product(static_cast<std::size_t>(g), static_cast<std::size_t>(h),
                       {{static_cast<std::size_t>((g + h) % n), CycloScalar::constant(1)}});
  return ring;
}

GradedRing table_ring(const RawRingTable& table) {
  std::vector<BasisElement> basis;
  for (const auto& b : table.basis) basis.push_back({b.name, b.label, b.degree, b.age, b.frobenius_weight});
  std::map<std::string, std::size_t> names;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!names.emplace(basis[i].name, i).second)
      throw Error(Error::Kind::Validation, "duplicate ring basis name \"" + basis[i].name + "\"");
  auto lookup = [&](const std::string& name) {
    auto it = names.find(name);
    if (it == names.end()) throw Error(Error::Kind::Validation, "unknown ring basis name \"" + name + "\"");
    return it->second;
  };
  GradedRing ring(std::move(basis), lookup(table.unit));
  for (const auto& p : table.products) {
    RingElement value;
    for (const auto& [c, z] : p.terms) add_term(value, lookup(z), CycloScalar::constant(c));
    std::size_t x = lookup(p.left), y = lookup(p.right);
    ring.set_product(x, y, value);
    // Tables may list only one order of each pair.
    if (x != y) ring.set_product(y, x, value);
  }
  return ring;
}

[[noreturn]] void out_of_scope() {
  throw Error(Error::Kind::Unsupported,
              "ring requires virtual-class machinery; out of scope (supported: P(1,b) with b prime, "
              "B mu_n, raw specs carrying a ring table)");
}

}  // namespace

GradedRing::GradedRing(std::vector<BasisElement> basis, std::size_t unit)
    : basis_(std::move(basis)), unit_(unit) {
  if (basis_.empty()) throw Error(Error::Kind::Validation, "ring basis must be nonempty");
  if (unit_ >= basis_.size()) throw Error(Error::Kind::Validation, "unit index out of range");
}

std::size_t GradedRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return i;
  throw Error(Error::Kind::Structure, "no basis element named \"" + name + "\"");
}

void GradedRing::set_product(std::size_t x, std::size_t y, RingElement value) {
  if (x >= rank() || y >= rank()) throw Error(Error::Kind::Structure, "product index out of range");
  for (const auto& [i, c] : value)
    if (i >= rank()) throw Error(Error::Kind::Structure, "product term index out of range");
  if (value.empty())
    table_.erase({x, y});
  else
    table_[{x, y}] = std::move(value);
}

const RingElement& GradedRing::product(std::size_t x, std::size_t y) const {
  auto it = table_.find({x, y});
  return it == table_.end() ? zero_ : it->second;
}

RingElement GradedRing::multiply(const RingElement& a, const RingElement& b) const {
  RingElement out;
  for (const auto& [i, ca] : a)
    for (const auto& [j, cb] : b) {
      CycloScalar c = ca * cb;
      for (const auto& [k, ck] : product(i, j)) add_term(out, k, c * ck);
    }
  return out;
}

RingElement GradedRing::basis_element(std::size_t i) const {
  if (i >= rank()) throw Error(Error::Kind::Structure, "basis index out of range");
  return {{i, CycloScalar::constant(1)}};
}

std::string GradedRing::format(const RingElement& e) const {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : e) {
    if (!first) os << " + ";
    first = false;
    CycloScalar n = c.normalized();
    if (n == CycloScalar::constant(1))
      os << basis_[i].name;
    else if (n.is_monomial())
      os << n.to_string() << "*" << basis_[i].name;
    else
      os << "(" << n.to_string() << ")*" << basis_[i].name;
  }
  return os.str();
}

RingElement RingMap::apply(const RingElement& e) const {
  RingElement out;
  for (const auto& [i, c] : e) add_term(out, i, c * multipliers.at(i));
  return out;
}

GradedRing build_ring(const OrbifoldSpec& spec) {
  if (auto* w = std::get_if<WeightedProjective>(&spec.family)) {
    const auto& ws = w->weights;
    if (ws.size() == 2 && (ws[0] == 1 || ws[1] == 1)) {
      std::int64_t b = ws[0] == 1 ? ws[1] : ws[0];
      if (is_prime(static_cast<std::uint64_t>(b))) return weighted_projective_ring(b);
    }
    out_of_scope();
  }
  if (auto* b = std::get_if<ClassifyingBMu>(&spec.family)) return group_ring(b->n);
  if (auto* raw = std::get_if<RawSectors>(&spec.family); raw && raw->ring) return table_ring(*raw->ring);
  out_of_scope();
}

RingMap frobenius_orb(const GradedRing& ring) {
  RingMap m;
  for (const auto& b : ring.basis()) m.multipliers.push_back(CycloScalar::q_power(-(b.age + b.frobenius_weight)));
  return m;
}

RingMap untwisted_frobenius(const GradedRing& ring) {
  RingMap m;
  for (const auto& b : ring.basis()) m.multipliers.push_back(CycloScalar::q_power(-b.frobenius_weight));
  return m;
}

RingMap identity_map(const GradedRing& ring) {
  return RingMap{std::vector<CycloScalar>(ring.rank(), CycloScalar::constant(1))};
}

Report verify_ring_hom(const GradedRing& ring, const RingMap& map) {
  Report report;
  report.title = "ring homomorphism";
  bool sized = map.multipliers.size() == ring.rank();
  report.add("one multiplier per basis element", sized);
  if (!sized) return report;

  std::string not_invertible;
  for (std::size_t i = 0; i < ring.rank(); ++i)
    if (!map.multipliers[i].is_monomial()) not_invertible += " " + ring.basis()[i].name;
  report.add("invertible (every multiplier a nonzero monomial)", not_invertible.empty(), not_invertible);
  // A diagonal map sends each basis element into its own graded piece.
  report.add("grading preserved (diagonal in the graded basis)", true);

  std::size_t failures = 0;
  std::string first;
  for (std::size_t x = 0; x < ring.rank(); ++x) {
    for (std::size_t y = 0; y < ring.rank(); ++y) {
      const RingElement& xy = ring.product(x, y);
      RingElement lhs = map.apply(xy);
      RingElement rhs = scaled(xy, map.multipliers[x] * map.multipliers[y]);
      if (equal(lhs, rhs)) continue;
      if (failures++ == 0) {
        const auto& bx = ring.basis()[x];
        const auto& by = ring.basis()[y];
        first = "at (" + bx.name + ", " + by.name + "): F(" + bx.name + ")*F(" + by.name + ") = " +
                ring.format(rhs) + " but F(" + bx.name + "*" + by.name + ") = " + ring.format(lhs);
      }
    }
  }
  std::size_t pairs = ring.rank() * ring.rank();
  report.add("multiplicative on all " + std::to_string(pairs) + " basis pairs", failures == 0,
             failures == 0 ? "" : std::to_string(failures) + " failing pairs; first " + first);
  return report;
}

Report verify_grading(const GradedRing& ring) {
  Report report;
  report.title = "grading";
  std::string bad;
  for (std::size_t x = 0; x < ring.rank(); ++x)
    for (std::size_t y = 0; y < ring.rank(); ++y)
      for (const auto& [z, c] : ring.product(x, y)) {
        BigRational expected = ring.basis()[x].cr_degree() + ring.basis()[y].cr_degree();
        if (ring.basis()[z].cr_degree() != expected)
          bad += " " + ring.basis()[x].name + "*" + ring.basis()[y].name + "->" + ring.basis()[z].name + " (" +
                 to_string(ring.basis()[z].cr_degree()) + " != " + to_string(expected) + ")";
      }
  report.add("Chen-Ruan degree additive on nonzero products", bad.empty(), bad);
  return report;
}

Report verify_ring_axioms(const GradedRing& ring) {
  Report report;
  report.title = "ring axioms";
  std::size_t n = ring.rank();

  std::string bad_unit;
  const auto& u = ring.basis()[ring.unit()];
  bool unit_shape = u.degree == 0 && u.age == 0 && (!u.label || u.label->is_identity());
  report.add("unit is a degree-0 class of the untwisted sector", unit_shape);
  for (std::size_t x = 0; x < n; ++x) {
    RingElement e = ring.basis_element(x);
    if (!equal(ring.product(ring.unit(), x), e) || !equal(ring.product(x, ring.unit()), e))
      bad_unit += " " + ring.basis()[x].name;
  }
  report.add("unit acts as identity", bad_unit.empty(), bad_unit);

  std::string bad_comm;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (!equal(ring.product(x, y), ring.product(y, x)))
        bad_comm += " (" + ring.basis()[x].name + "," + ring.basis()[y].name + ")";
  report.add("commutative", bad_comm.empty(), bad_comm);

  std::size_t bad_assoc = 0;
  std::string first;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      RingElement xy = ring.product(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        RingElement left = ring.multiply(xy, ring.basis_element(z));
        RingElement right = ring.multiply(ring.basis_element(x), ring.product(y, z));
        if (!equal(left, right) && bad_assoc++ == 0)
          first = "(" + ring.basis()[x].name + "," + ring.basis()[y].name + "," + ring.basis()[z].name + ")";
      }
    }
  report.add("associative on all " + std::to_string(n * n * n) + " basis triples", bad_assoc == 0,
             bad_assoc == 0 ? "" : std::to_string(bad_assoc) + " failing triples; first " + first);
  return report;
}

}  // namespace orbizeta
