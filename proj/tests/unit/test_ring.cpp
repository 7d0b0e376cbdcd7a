#include <doctest.h>

#include "orbizeta/error.hpp"
#include "orbizeta/inertia.hpp"
#include "orbizeta/ring.hpp"
#include "orbizeta/spec_io.hpp"

using namespace orbizeta;

namespace {

GradedRing ring_of(const std::string& text) { return build_ring(parse_spec(text)); }

GradedRing p1b(std::int64_t b) {
  return ring_of(R"({"family":"wps","weights":[1,)" + std::to_string(b) + "]}");
}

RingElement single(std::size_t i, const CycloScalar& c) { return {{i, c}}; }

}  // namespace

TEST_CASE("P(1,2) ring presentation") {
  GradedRing r = p1b(2);
  REQUIRE(r.rank() == 3);
  std::size_t one = r.index_of("1"), a = r.index_of("A"), a2 = r.index_of("A^2");
  CHECK(r.unit() == one);
  CHECK(r.product(a, a) == single(a2, CycloScalar::constant(1)));
  CHECK(r.product(a, a2).empty());
  CHECK(r.basis()[a].cr_degree() == 1);
  CHECK(r.basis()[a2].cr_degree() == 2);
  CHECK(verify_grading(r).passed());
  CHECK(verify_ring_axioms(r).passed());
}

TEST_CASE("B mu_1 is the rational numbers") {
  GradedRing r = ring_of(R"({"family":"bmu","n":1})");
  CHECK(r.rank() == 1);
  CHECK(r.product(0, 0) == single(0, CycloScalar::constant(1)));
  CHECK(verify_ring_axioms(r).passed());
}

TEST_CASE("ring basis tracks the inertia sectors") {
  for (std::int64_t b : {2, 3, 5, 7}) {
    GradedRing r = p1b(b);
    auto d = enumerate_sectors(parse_spec(R"({"family":"wps","weights":[1,)" + std::to_string(b) + "]}"));
    std::int64_t betti = 0;
    for (const auto& s : d.sectors) betti += s.betti();
    CHECK(static_cast<std::int64_t>(r.rank()) == betti);
    for (const auto& e : r.basis()) {
      REQUIRE(e.label);
      CHECK(d.at(*e.label).age == e.age);
    }
  }
}

TEST_CASE("orbifold Frobenius is a ring automorphism") {
  GradedRing r = p1b(2);
  RingMap f = frobenius_orb(r);
  std::size_t a = r.index_of("A"), a2 = r.index_of("A^2");
  CHECK(f.multipliers[a] == CycloScalar::q_power(make_rational(-1, 2)));
  CHECK(f.multipliers[a2] == CycloScalar::q_power(-1));
  RingElement fa = f.apply(r.basis_element(a));
  CHECK(r.multiply(fa, fa) == f.apply(r.basis_element(a2)));
  CHECK(verify_ring_hom(r, f).passed());
  for (std::int64_t b : {3, 5, 7}) CHECK(verify_ring_hom(p1b(b), frobenius_orb(p1b(b))).passed());
}

TEST_CASE("untwisted Frobenius breaks the product on P(1,b)") {
  for (std::int64_t b : {2, 3, 5, 7}) {
    CAPTURE(b);
    Report r = verify_ring_hom(p1b(b), untwisted_frobenius(p1b(b)));
    CHECK_FALSE(r.passed());
    std::string top = b == 2 ? "A" : "A^" + std::to_string(b - 1);
    auto failures = r.failures();
    REQUIRE(failures.size() == 1);
    CHECK(failures[0].detail.find("first at (A, " + top + "): F(A)*F(" + top + ") = A^" + std::to_string(b) +
                                  " but F(A*" + top + ") = q^-1*A^" + std::to_string(b)) != std::string::npos);
  }
}

TEST_CASE("identity map passes") {
  GradedRing r = p1b(3);
  CHECK(verify_ring_hom(r, identity_map(r)).passed());
}

TEST_CASE("B mu_n group rings") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    GradedRing r = ring_of(R"({"family":"bmu","n":)" + std::to_string(n) + "}");
    CHECK(r.rank() == static_cast<std::size_t>(n));
    CHECK(verify_ring_axioms(r).passed());
    CHECK(verify_grading(r).passed());
    CHECK(verify_ring_hom(r, frobenius_orb(r)).passed());
  }
}

TEST_CASE("raw ring tables") {
  OrbifoldSpec spec = load_spec(std::string(ORBIZETA_DATA_DIR) + "/specs/p12_ring.raw.json");
  GradedRing raw = build_ring(spec);
  GradedRing builtin = p1b(2);
  REQUIRE(raw.rank() == builtin.rank());
  for (std::size_t x = 0; x < raw.rank(); ++x)
    for (std::size_t y = 0; y < raw.rank(); ++y) CHECK(raw.product(x, y) == builtin.product(x, y));
  CHECK(verify_ring_hom(raw, frobenius_orb(raw)).passed());
  CHECK_FALSE(verify_ring_hom(raw, untwisted_frobenius(raw)).passed());
}

TEST_CASE("broken tables are reported") {
  std::vector<BasisElement> basis{{"1", SectorLabel::identity(), 0, 0, 0}, {"x", SectorLabel{1, 2}, 0, make_rational(1, 2), 0},
                                  {"y", SectorLabel{1, 2}, 0, make_rational(1, 2), 0}};
  GradedRing r(basis, 0);
  for (std::size_t i = 0; i < 3; ++i) {
    r.set_product(0, i, single(i, CycloScalar::constant(1)));
    r.set_product(i, 0, single(i, CycloScalar::constant(1)));
  }
  r.set_product(1, 2, single(0, CycloScalar::constant(1)));
  Report axioms = verify_ring_axioms(r);
  CHECK_FALSE(axioms.passed());
  bool saw_commutative = false;
  for (const auto& c : axioms.failures()) saw_commutative |= c.name == "commutative";
  CHECK(saw_commutative);
  CHECK_FALSE(verify_grading(r).passed());
}

TEST_CASE("unsupported rings are refused") {
  CHECK_THROWS_WITH_AS(ring_of(R"({"family":"wps","weights":[1,1,2]})"),
                       doctest::Contains("ring requires virtual-class machinery; out of scope"), Error);
  CHECK_THROWS_AS(p1b(4), Error);
  CHECK_THROWS_AS(ring_of(R"({"family":"acq","m":3,"action_weights":[1,2]})"), Error);
}
