#include "orbizeta/point_count.hpp"

#include <cstdlib>
#include <limits>
#include <map>
#include <string>

#include "orbizeta/cyclo.hpp"
#include "orbizeta/error.hpp"
#include "orbizeta/finite_field.hpp"
#include "orbizeta/inertia.hpp"
#include "orbizeta/zeta.hpp"

namespace orbizeta {

std::uint64_t oracle_budget_from_env() {
  const char* raw = std::getenv("ORBIZETA_ORACLE_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultOracleBudget;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0)
    throw Error(Error::Kind::Precondition, std::string("invalid ORBIZETA_ORACLE_BUDGET: ") + raw);
  return v;
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / base)
      throw Error(Error::Kind::Budget, "oracle out of desk scale: field size overflows");
    out *= base;
  }
  return out;
}

// Counts y in F_{Q^d} with y^Q = omega^k * y, where omega is a primitive
// g-th root of unity and d is the order of omega^k. Every solution in the
// algebraic closure lies in F_{Q^d}.
class TwistedSolutionCounter {
 public:
  TwistedSolutionCounter(const FieldParam& base, std::int64_t r, std::int64_t g, std::uint64_t budget)
      : base_(base), r_(r), g_(g), budget_(budget) {}

  std::uint64_t field_size_for(std::int64_t k) const {
    std::int64_t d = g_ / gcd64(mod64(k, g_), g_);
    return checked_pow(static_cast<std::uint64_t>(base_.p),
                       static_cast<std::uint64_t>(base_.e * r_ * d));
  }

  std::uint64_t count(std::int64_t k) {
    k = mod64(k, g_);
    if (auto it = cache_.find(k); it != cache_.end()) return it->second;
    std::int64_t d = g_ / gcd64(k, g_);
    std::uint64_t size = field_size_for(k);
    if (tested_ + size > budget_)
      throw Error(Error::Kind::Budget, "oracle out of desk scale: enumeration needs more than " +
                                           std::to_string(budget_) + " candidates");
    FiniteField field(static_cast<std::uint64_t>(base_.p), static_cast<int>(base_.e * r_ * d));
    auto zeta = field.pow(field.root_of_unity(static_cast<std::uint64_t>(g_)), static_cast<std::uint64_t>(k));
    std::uint64_t big_q = checked_pow(static_cast<std::uint64_t>(base_.p), static_cast<std::uint64_t>(base_.e * r_));
    std::uint64_t solutions = 0;
    for (std::uint64_t i = 0; i < size; ++i) {
      auto y = field.from_index(i);
      if (field.pow(y, big_q) == field.mul(zeta, y)) ++solutions;
    }
    tested_ += size;
    cache_.emplace(k, solutions);
    return solutions;
  }

  std::uint64_t tested() const { return tested_; }

 private:
  FieldParam base_;
  std::int64_t r_;
  std::int64_t g_;
  std::uint64_t budget_;
  std::uint64_t tested_ = 0;
  std::map<std::int64_t, std::uint64_t> cache_;
};

}  // namespace

GroupoidCount groupoid_count(const PointCountModel& model, const SectorLabel& sector, std::int64_t q,
                             std::int64_t r, CountMethod method, std::uint64_t budget) {
  if (r < 1) throw Error(Error::Kind::Precondition, "iterate r must be positive");
  FieldParam base = FieldParam::specialized(q);
  std::int64_t g = model.group_order;
  if (g < 1) throw Error(Error::Kind::Precondition, "group order must be positive");
  if (gcd64(g, q) != 1) throw Error(Error::Kind::Precondition, "wild quotient unsupported by the oracle");
  if (q % g != 1 % g)
    throw Error(Error::Kind::Precondition, "non-split field: q = " + std::to_string(q) + " is not 1 mod " +
                                               std::to_string(g));
  BigInteger big_q;
  mpz_ui_pow_ui(big_q.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(r));

  GroupoidCount out;
  out.sector = sector;
  out.q = q;
  out.r = r;
  out.method = method;

  BigInteger total = 0;
  if (method == CountMethod::ClosedForm) {
    for (std::int64_t k = 0; k < g; ++k) {
      BigInteger term = 1;
      for (std::size_t j = 0; j < model.coordinate_weights.size(); ++j) term *= big_q;
      if (model.projective) term -= 1;
      total += term;
    }
  } else {
    TwistedSolutionCounter counter(base, r, g, budget);
    // Reject up front when the distinct fields needed already exceed the budget.
    std::map<std::int64_t, std::uint64_t> planned;
    for (std::int64_t k = 0; k < g; ++k)
      for (auto w : model.coordinate_weights) planned.emplace(mod64(k * w, g), 0);
    std::uint64_t needed = 0;
    for (auto& [k, size] : planned) {
      size = counter.field_size_for(k);
      if (size > budget || needed > budget - size)
        throw Error(Error::Kind::Budget, "oracle out of desk scale: enumeration needs more than " +
                                             std::to_string(budget) + " candidates");
      needed += size;
    }
    for (std::int64_t k = 0; k < g; ++k) {
      BigInteger term = 1;
      for (auto w : model.coordinate_weights) term *= static_cast<unsigned long>(counter.count(k * w));
      if (model.projective) term -= 1;
      total += term;
    }
    out.candidates_tested = counter.tested();
  }

  BigInteger denominator = g;
  if (model.projective) denominator *= big_q - 1;
  out.count = make_rational(total, denominator);
  return out;
}

GroupoidCount groupoid_count(const OrbifoldSpec& spec, const SectorLabel& sector, std::int64_t q,
                             std::int64_t r, CountMethod method, std::uint64_t budget) {
  InertiaDecomposition d = enumerate_sectors(spec);
  const Sector& s = d.at(sector);
  if (!s.geometry)
    throw Error(Error::Kind::Unsupported, "sector " + sector.to_string() + " has no point-count model");
  return groupoid_count(*s.geometry, sector, q, r, method, budget);
}

Report verify_trace_formula(const OrbifoldSpec& spec, std::optional<std::int64_t> q, std::int64_t max_r,
                            std::uint64_t budget) {
  if (!q) q = spec.base.q;
  if (!q) throw Error(Error::Kind::Precondition, "trace formula verification needs a specialized q");
  if (max_r < 1) throw Error(Error::Kind::Precondition, "R must be positive");
  OrbifoldSpec specialized = spec;
  specialized.base = FieldParam::specialized(*q);
  validate_spec(specialized);

  InertiaDecomposition d = enumerate_sectors(specialized);
  for (const auto& s : d.sectors)
    if (!s.geometry)
      throw Error(Error::Kind::Unsupported, "sector " + s.label.to_string() + " has no point-count model");
  TraceSeries ts = trace_series(d, static_cast<std::size_t>(max_r));
  const BigRational qv(*q);

  Report report;
  report.title = "trace formula q=" + std::to_string(*q) + (d.proper ? "" : " (formal)");
  for (std::int64_t r = 1; r <= max_r; ++r) {
    CycloScalar oracle;
    std::string sector_lines;
    bool methods_agree = true;
    for (const auto& s : d.sectors) {
      GroupoidCount enumerated = groupoid_count(*s.geometry, s.label, *q, r, CountMethod::Enumerative, budget);
      GroupoidCount closed = groupoid_count(*s.geometry, s.label, *q, r, CountMethod::ClosedForm, budget);
      if (enumerated.count != closed.count) {
        methods_agree = false;
        sector_lines += " " + s.label.to_string() + ": enumerated " + to_string(enumerated.count) +
                        " vs closed form " + to_string(closed.count);
      }
      CycloScalar weight = CycloScalar::q_power(-(s.age + BigRational(s.dim)) * static_cast<long>(r));
      oracle += weight * enumerated.count;
    }
    report.add("r=" + std::to_string(r) + " enumerative and closed-form counts agree", methods_agree, sector_lines);

    CycloScalar lhs = ts.at(static_cast<std::size_t>(r)).specialize(qv);
    CycloScalar rhs = oracle.specialize(qv);
    std::string detail = "trace " + lhs.normalized().to_string() + " vs oracle " + rhs.normalized().to_string();
    if (lhs != rhs) {
      for (const auto& s : d.sectors) {
        InertiaDecomposition single;
        single.sectors = {s};
        CycloScalar part = trace_series(single, static_cast<std::size_t>(r)).at(static_cast<std::size_t>(r));
        detail += "; sector " + s.label.to_string() + " trace " + part.specialize(qv).normalized().to_string();
      }
    }
    report.add("r=" + std::to_string(r) + " trace equals weighted groupoid count", lhs == rhs, detail);
  }
  return report;
}

}  // namespace orbizeta
