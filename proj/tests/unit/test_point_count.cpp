#include <doctest.h>

#include <cstdlib>
#include <set>

#include "orbizeta/error.hpp"
#include "orbizeta/inertia.hpp"
#include "orbizeta/point_count.hpp"
#include "orbizeta/spec_io.hpp"

using namespace orbizeta;

namespace {

OrbifoldSpec spec_of(const std::string& text) { return parse_spec(text); }

// Groupoid of mu_n-torsors over F_p: |F_p^* / (F_p^*)^n| classes, each with
// |mu_n(F_p)| automorphisms. Counted by brute force in Z/p.
BigRational bmu_torsor_mass(std::int64_t n, std::int64_t p) {
  std::set<std::int64_t> nth_powers;
  std::int64_t roots = 0;
  for (std::int64_t x = 1; x < p; ++x) {
    std::int64_t y = 1;
    for (std::int64_t i = 0; i < n; ++i) y = y * x % p;
    nth_powers.insert(y);
    if (y == 1) ++roots;
  }
  std::int64_t classes = (p - 1) / static_cast<std::int64_t>(nth_powers.size());
  return make_rational(classes, roots);
}

// Orbits of G_m on F_p^n \ 0 under weights w, each weighted by 1/|stabilizer|.
BigRational weighted_projective_mass(const std::vector<std::int64_t>& w, std::int64_t p) {
  auto power = [p](std::int64_t x, std::int64_t e) {
    std::int64_t y = 1;
    for (std::int64_t i = 0; i < e; ++i) y = y * x % p;
    return y;
  };
  std::int64_t total = 1;
  for (std::size_t i = 0; i < w.size(); ++i) total *= p;
  std::set<std::vector<std::int64_t>> visited;
  BigRational mass = 0;
  for (std::int64_t code = 1; code < total; ++code) {
    std::vector<std::int64_t> x(w.size());
    for (std::int64_t c = code, j = 0; j < static_cast<std::int64_t>(w.size()); ++j, c /= p) x[j] = c % p;
    if (visited.count(x)) continue;
    std::int64_t stabilizer = 0;
    for (std::int64_t l = 1; l < p; ++l) {
      std::vector<std::int64_t> y(w.size());
      for (std::size_t j = 0; j < w.size(); ++j) y[j] = power(l, w[j]) * x[j] % p;
      if (y == x) ++stabilizer;
      visited.insert(y);
    }
    mass += make_rational(1, stabilizer);
  }
  return mass;
}

}  // namespace

TEST_CASE("groupoid_count examples") {
  OrbifoldSpec bmu2 = spec_of(R"({"family":"bmu","n":2})");
  CHECK(groupoid_count(bmu2, {1, 2}, 5, 1).count == 1);
  CHECK(groupoid_count(bmu2, {1, 2}, 5, 1).count == bmu_torsor_mass(2, 5));

  OrbifoldSpec p112 = spec_of(R"({"family":"wps","weights":[1,1,2]})");
  CHECK(groupoid_count(p112, SectorLabel::identity(), 5, 1).count == 31);
  CHECK(groupoid_count(p112, SectorLabel::identity(), 5, 1).count == weighted_projective_mass({1, 1, 2}, 5));

  OrbifoldSpec pt = spec_of(R"({"family":"bmu","n":1})");
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9})
    for (std::int64_t r = 1; r <= 2; ++r) CHECK(groupoid_count(pt, SectorLabel::identity(), q, r).count == 1);
}

TEST_CASE("counts agree with brute-force orbit sums") {
  for (std::int64_t p : {3, 5, 7}) {
    CAPTURE(p);
    OrbifoldSpec p12 = spec_of(R"({"family":"wps","weights":[1,2]})");
    CHECK(groupoid_count(p12, SectorLabel::identity(), p, 1).count == weighted_projective_mass({1, 2}, p));
    CHECK(groupoid_count(p12, {1, 2}, p, 1).count == weighted_projective_mass({2}, p));
    CHECK(weighted_projective_mass({2}, p) == bmu_torsor_mass(2, p));
  }
  for (std::int64_t n : {2, 3, 4, 6}) {
    OrbifoldSpec bmu = spec_of(R"({"family":"bmu","n":)" + std::to_string(n) + "}");
    for (std::int64_t c = 0; c < n; ++c)
      CHECK(groupoid_count(bmu, SectorLabel::make(c, n), 13, 1).count == bmu_torsor_mass(n, 13));
  }
}

TEST_CASE("enumerative and closed-form methods agree") {
  OrbifoldSpec p13 = spec_of(R"({"family":"wps","weights":[1,3]})");
  auto d = enumerate_sectors(p13);
  for (const auto& s : d.sectors)
    for (std::int64_t r = 1; r <= 3; ++r) {
      auto a = groupoid_count(p13, s.label, 7, r, CountMethod::Enumerative);
      auto b = groupoid_count(p13, s.label, 7, r, CountMethod::ClosedForm);
      CHECK(a.count == b.count);
      CHECK(a.candidates_tested > 0);
    }
}

TEST_CASE("oracle preconditions") {
  PointCountModel bmu3{{}, 3, false};
  CHECK_THROWS_WITH_AS(groupoid_count(bmu3, {1, 3}, 5, 1, CountMethod::Enumerative),
                       doctest::Contains("non-split field"), Error);
  CHECK_THROWS_AS(groupoid_count(bmu3, {1, 3}, 7, 0, CountMethod::Enumerative), Error);
  CHECK_THROWS_AS(groupoid_count(bmu3, {1, 3}, 6, 1, CountMethod::Enumerative), Error);

  OrbifoldSpec p112 = spec_of(R"({"family":"wps","weights":[1,1,2]})");
  CHECK_THROWS_WITH_AS(groupoid_count(p112, SectorLabel::identity(), 13, 3, CountMethod::Enumerative, 10),
                       doctest::Contains("oracle out of desk scale"), Error);

  CHECK_THROWS_AS(groupoid_count(load_spec(std::string(ORBIZETA_DATA_DIR) + "/specs/curve_quotient.raw.json"),
                                 SectorLabel::identity(), 5, 1),
                  Error);
}

TEST_CASE("budget override from the environment") {
  ::unsetenv("ORBIZETA_ORACLE_BUDGET");
  CHECK(oracle_budget_from_env() == kDefaultOracleBudget);
  ::setenv("ORBIZETA_ORACLE_BUDGET", "1234", 1);
  CHECK(oracle_budget_from_env() == 1234);
  ::setenv("ORBIZETA_ORACLE_BUDGET", "many", 1);
  CHECK_THROWS_AS(oracle_budget_from_env(), Error);
  ::unsetenv("ORBIZETA_ORACLE_BUDGET");
}

TEST_CASE("verify_trace_formula examples") {
  CHECK(verify_trace_formula(spec_of(R"({"family":"wps","weights":[1,1,2]})"), 5, 3).passed());
  CHECK(verify_trace_formula(spec_of(R"({"family":"bmu","n":1})"), 3, 5).passed());
  CHECK(verify_trace_formula(spec_of(R"({"family":"wps","weights":[1,2]})"), 5, 2).passed());
  CHECK(verify_trace_formula(load_spec(std::string(ORBIZETA_DATA_DIR) + "/specs/p12_ring.raw.json"), 5, 3).passed());
  CHECK(verify_trace_formula(spec_of(R"({"family":"acq","m":3,"action_weights":[1,2],"base":{"q":7}})"),
                             std::nullopt, 2)
            .passed());
  CHECK_THROWS_AS(verify_trace_formula(spec_of(R"({"family":"bmu","n":2})"), std::nullopt, 2), Error);
}

TEST_CASE("a wrong profile is caught with a sector-level diff") {
  std::string text = R"({"family":"raw","sectors":[
    {"label":[0,1],"dim":1,"age":[0,1],"aut_order":1,"inverse":[0,1],"profile":[[0,0,1,1],[2,1,1,1]],
     "count_model":{"weights":[1,2],"group_order":1,"projective":true}},
    {"label":[1,2],"dim":0,"age":[1,2],"aut_order":2,"inverse":[1,2],"profile":[[0,0,1,1]],
     "count_model":{"weights":[2,2],"group_order":2,"projective":true}}]})";
  Report r = verify_trace_formula(parse_spec(text), 5, 1);
  CHECK_FALSE(r.passed());
  REQUIRE_FALSE(r.failures().empty());
  CHECK(r.failures()[0].detail.find("(1,2)") != std::string::npos);
}
