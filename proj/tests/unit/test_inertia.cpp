#include <doctest.h>

#include <array>

#include "orbizeta/error.hpp"
#include "orbizeta/inertia.hpp"
#include "orbizeta/spec_io.hpp"

using namespace orbizeta;

namespace {

InertiaDecomposition wps(std::initializer_list<std::int64_t> weights) {
  OrbifoldSpec spec;
  spec.family = WeightedProjective{weights};
  return enumerate_sectors(spec);
}

}  // namespace

TEST_CASE("P(1,b) for prime b: identity plus b-1 copies of B mu_b") {
  for (std::int64_t b : {2, 3, 5, 7, 11}) {
    CAPTURE(b);
    auto d = wps({1, b});
    REQUIRE(d.sectors.size() == static_cast<std::size_t>(b));
    CHECK(d.ambient_dim == 1);
    CHECK(d.sectors[0].label.is_identity());
    CHECK(d.sectors[0].dim == 1);
    for (std::int64_t k = 1; k < b; ++k) {
      const Sector& s = d.sectors[static_cast<std::size_t>(k)];
      CHECK(s.label == SectorLabel{k, b});
      CHECK(s.dim == 0);
      CHECK(s.age == make_rational(k, b));
      CHECK(s.aut_order == b);
    }
  }
}

TEST_CASE("P(1,1,2): identity and one B mu_2 of age 1") {
  auto d = wps({1, 1, 2});
  REQUIRE(d.sectors.size() == 2);
  CHECK(d.sectors[0].dim == 2);
  CHECK(d.sectors[0].age == 0);
  CHECK(d.sectors[0].profile.size() == 3);
  CHECK(d.sectors[1].label == SectorLabel{1, 2});
  CHECK(d.sectors[1].dim == 0);
  CHECK(d.sectors[1].age == 1);
  CHECK(d.sectors[1].aut_order == 2);
  CHECK(d.sectors[1].geometry->coordinate_weights == std::vector<std::int64_t>{2});
}

TEST_CASE("B mu_1 is a single identity sector") {
  OrbifoldSpec spec;
  spec.family = ClassifyingBMu{1};
  auto d = enumerate_sectors(spec);
  REQUIRE(d.sectors.size() == 1);
  CHECK(d.sectors[0].dim == 0);
  CHECK(d.sectors[0].age == 0);
}

TEST_CASE("B mu_n has n zero-dimensional sectors") {
  OrbifoldSpec spec;
  spec.family = ClassifyingBMu{6};
  auto d = enumerate_sectors(spec);
  CHECK(d.sectors.size() == 6);
  for (const auto& s : d.sectors) {
    CHECK(s.dim == 0);
    CHECK(s.age == 0);
    CHECK(s.aut_order == 6);
  }
}

TEST_CASE("P(1,2,3) fixed loci") {
  auto d = wps({1, 2, 3});
  // identity, (1,3), (1,2), (2,3)
  REQUIRE(d.sectors.size() == 4);
  const Sector& half = d.at({1, 2});
  CHECK(half.dim == 0);
  CHECK(half.age == 1);  // frac(1/2) + frac(3/2)
  const Sector& third = d.at({1, 3});
  CHECK(third.age == make_rational(1, 3) + make_rational(2, 3));
  CHECK(validate_decomposition(d).passed());
}

TEST_CASE("common weight gcd is refused") {
  CHECK_THROWS_WITH_AS(wps({2, 4}), doctest::Contains("use raw mode"), Error);
}

TEST_CASE("age_of examples") {
  std::array<std::int64_t, 2> ones{1, 1};
  CHECK(age_of({1, 2}, ones) == 1);
  std::array<std::int64_t, 1> one{1};
  for (std::int64_t k = 1; k < 5; ++k) CHECK(age_of({k, 5}, one) == make_rational(k, 5));
  CHECK(age_of(SectorLabel::identity(), ones) == 0);
}

TEST_CASE("involution examples") {
  auto p112 = involution(wps({1, 1, 2}));
  CHECK(p112.at({1, 2}) == SectorLabel{1, 2});
  CHECK(p112.at(SectorLabel::identity()) == SectorLabel::identity());
  auto p15 = involution(wps({1, 5}));
  CHECK(p15.at({2, 5}) == SectorLabel{3, 5});

  InertiaDecomposition broken = wps({1, 5});
  broken.sectors.erase(broken.sectors.begin() + 3);
  CHECK_THROWS_AS(involution(broken), Error);
}

TEST_CASE("the involution does not preserve age on P(1,3)") {
  auto d = wps({1, 3});
  auto inv = involution(d);
  bool differs = false;
  for (const auto& s : d.sectors) differs |= s.age != d.at(inv.at(s.label)).age;
  CHECK(differs);
}

TEST_CASE("affine cyclic quotient sectors") {
  OrbifoldSpec spec = parse_spec(R"({"family":"acq","m":4,"action_weights":[1,2]})");
  auto d = enumerate_sectors(spec);
  CHECK_FALSE(d.proper);
  CHECK(d.ambient_dim == 2);
  REQUIRE(d.sectors.size() == 4);
  const Sector& half = d.at({1, 2});  // c = 2: fixes the weight-2 coordinate
  CHECK(half.dim == 1);
  CHECK(half.age == make_rational(1, 2));
  const Sector& quarter = d.at({1, 4});
  CHECK(quarter.dim == 0);
  CHECK(quarter.age == make_rational(1, 4) + make_rational(1, 2));
  CHECK(validate_decomposition(d).passed());
}
