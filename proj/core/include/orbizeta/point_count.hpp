#pragma once

#include <cstdint>
#include <optional>

#include "orbizeta/model.hpp"
#include "orbizeta/report.hpp"

namespace orbizeta {

inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

// ORBIZETA_ORACLE_BUDGET when set to a positive integer, else the default.
std::uint64_t oracle_budget_from_env();

enum class CountMethod {
  // Tests Frob_{q^r}(y) = h.y for every candidate coordinate value.
  Enumerative,
  // Each coordinate equation y^{q^r} = zeta y has exactly q^r solutions.
  ClosedForm,
};

// Groupoid cardinality sum_xi 1/#Aut(xi) of one sector over F_{q^r}.
struct GroupoidCount {
  SectorLabel sector;
  std::int64_t q = 0;
  std::int64_t r = 1;
  BigRational count;
  CountMethod method = CountMethod::Enumerative;
  std::uint64_t candidates_tested = 0;
};

// Mass formula (1/|G|) sum_{h in G} #{y : Frob_{q^r}(y) = h.y}, with the
// punctured cone count divided by q^r - 1 for weighted projective sectors.
GroupoidCount groupoid_count(const PointCountModel& model, const SectorLabel& sector, std::int64_t q,
                             std::int64_t r, CountMethod method,
                             std::uint64_t budget = kDefaultOracleBudget);
GroupoidCount groupoid_count(const OrbifoldSpec& spec, const SectorLabel& sector, std::int64_t q,
                             std::int64_t r, CountMethod method = CountMethod::Enumerative,
                             std::uint64_t budget = kDefaultOracleBudget);

// For r = 1..R: trace of F_orb^r equals
//   sum_sectors q^{-r(age+dim)} * groupoid_count(sector, q, r)
// after absorbing integer powers of q. Both count methods must agree.
// q defaults to the spec's specialized base field.
Report verify_trace_formula(const OrbifoldSpec& spec, std::optional<std::int64_t> q, std::int64_t max_r,
                            std::uint64_t budget = kDefaultOracleBudget);

}  // namespace orbizeta
