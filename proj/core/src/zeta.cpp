#include "orbizeta/zeta.hpp"

#include <cstdlib>
#include <set>
#include <sstream>

#include "orbizeta/error.hpp"
#include "orbizeta/inertia.hpp"
#include "orbizeta/recurrence.hpp"

namespace orbizeta {

ZetaFunction::ZetaFunction(Factors factors, bool formal) : formal_(formal) {
  for (const auto& [a, m] : factors) multiply(a, m);
}

void ZetaFunction::multiply(const BigRational& exponent, std::int64_t multiplicity) {
  if (multiplicity == 0) return;
  auto& m = factors_[exponent];
  m += multiplicity;
  if (m == 0) factors_.erase(exponent);
}

void ZetaFunction::multiply(const ZetaFunction& other) {
  for (const auto& [a, m] : other.factors_) multiply(a, m);
  formal_ = formal_ || other.formal_;
}

std::int64_t ZetaFunction::root_index() const {
  std::int64_t n = 1;
  for (const auto& [a, m] : factors_) n = lcm64(n, to_int64(a.get_den()));
  return n;
}

bool ZetaFunction::has_integral_exponents() const {
  for (const auto& [a, m] : factors_)
    if (!is_integer(a)) return false;
  return true;
}

std::int64_t ZetaFunction::degree() const {
  std::int64_t total = 0;
  for (const auto& [a, m] : factors_) total += m;
  return total;
}

std::int64_t ZetaFunction::factor_count() const {
  std::int64_t total = 0;
  for (const auto& [a, m] : factors_) total += std::abs(m);
  return total;
}

RationalSeries ZetaFunction::taylor(std::size_t order) const {
  std::vector<CycloScalar> c(order + 1);
  c[0] = CycloScalar::constant(1);
  for (const auto& [a, m] : factors_) {
    CycloScalar x = CycloScalar::q_power(-a);
    for (std::int64_t k = 0; k < std::abs(m); ++k) {
      if (m > 0) {
        // divide by (1 - x t)
        for (std::size_t n = 1; n <= order; ++n) c[n] += x * c[n - 1];
      } else {
        // multiply by (1 - x t)
        for (std::size_t n = order; n >= 1; --n) c[n] -= x * c[n - 1];
      }
    }
  }
  return RationalSeries(order, std::move(c));
}

std::map<BigRational, std::int64_t> ZetaFunction::specialized_factors(const BigRational& q) const {
  if (!has_integral_exponents())
    throw Error(Error::Kind::Arithmetic,
                "zeta has fractional exponents; numeric specialization refused: " + to_string());
  std::map<BigRational, std::int64_t> out;
  for (const auto& [a, m] : factors_) {
    auto& slot = out[pow(q, -to_int64(a.get_num()))];
    slot += m;
    if (slot == 0) out.erase(pow(q, -to_int64(a.get_num())));
  }
  return out;
}

BigRational ZetaFunction::evaluate(const BigRational& q, const BigRational& t) const {
  BigRational value = 1;
  for (const auto& [eigenvalue, m] : specialized_factors(q)) {
    BigRational base = 1 - eigenvalue * t;
    if (base == 0) throw Error(Error::Kind::Arithmetic, "zeta has a pole or zero at this t");
    value *= pow(base, -m);
  }
  return value;
}

namespace {

std::string factor_body(const BigRational& a) {
  if (a == 0) return "(1-t)";
  std::string power;
  if (a > 0)
    power = "q^-" + orbizeta::to_string(a);
  else if (a == -1)
    power = "q";
  else
    power = "q^" + orbizeta::to_string(-a);
  return "(1-" + power + " t)";
}

std::string join_factors(const std::vector<std::pair<BigRational, std::int64_t>>& fs) {
  std::string out;
  bool previous_had_power = false;
  for (const auto& [a, m] : fs) {
    if (previous_had_power) out += " ";
    out += factor_body(a);
    previous_had_power = m > 1;
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out;
}

}  // namespace

std::string ZetaFunction::to_string() const {
  std::vector<std::pair<BigRational, std::int64_t>> numerator, denominator;
  for (const auto& [a, m] : factors_) (m > 0 ? denominator : numerator).emplace_back(a, std::abs(m));
  std::string num = numerator.empty() ? "1" : join_factors(numerator);
  if (denominator.empty()) return num;
  std::string den = join_factors(denominator);
  bool single = denominator.size() == 1 && denominator.front().second == 1;
  return num + "/" + (single ? den : "(" + den + ")");
}

std::string ZetaFunction::to_product_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, m] : factors_) {
    if (!first) os << " ";
    first = false;
    os << "(1 - q^{" << orbizeta::to_string(-a) << "} t)^{" << -m << "}";
  }
  return os.str();
}

std::int64_t decomposition_root_index(const InertiaDecomposition& d) {
  std::int64_t n = 1;
  for (const auto& s : d.sectors)
    for (const auto& p : s.profile) n = lcm64(n, to_int64(BigRational(s.age + p.weight).get_den()));
  return n;
}

ZetaFunction sector_zeta(const Sector& s) {
  ZetaFunction z;
  for (const auto& p : s.profile) z.multiply(s.age + p.weight, p.degree % 2 == 0 ? p.multiplicity : -p.multiplicity);
  return z;
}

ZetaFunction orbifold_zeta(const InertiaDecomposition& d) {
  ZetaFunction z;
  for (const auto& s : d.sectors) z.multiply(sector_zeta(s));
  z.set_formal(!d.proper);
  return z;
}

TraceSeries trace_series(const InertiaDecomposition& d, std::size_t length) {
  if (length < 1) throw Error(Error::Kind::Precondition, "trace series length must be positive");
  TraceSeries ts;
  ts.root_index = decomposition_root_index(d);
  for (std::size_t r = 1; r <= length; ++r) {
    CycloScalar value(ts.root_index);
    for (const auto& s : d.sectors) {
      for (const auto& p : s.profile) {
        BigRational sign = p.degree % 2 == 0 ? 1 : -1;
        BigRational exponent = -(s.age + p.weight) * static_cast<long>(r);
        value += CycloScalar::q_power(exponent, sign * p.multiplicity);
      }
    }
    ts.values.push_back(value.rescaled(ts.root_index));
  }
  return ts;
}

std::size_t default_truncation(const InertiaDecomposition& d) {
  return static_cast<std::size_t>(2 * d.total_betti() + 2);
}

RationalSeries exp_of_traces(const TraceSeries& ts, std::size_t order) {
  return series_exp(RationalSeries::log_series(ts.values, order));
}

namespace {

BigRational eval_poly(const std::vector<BigRational>& coeffs, const BigRational& x) {
  BigRational v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
  return v;
}

// Solves the square system A m = b over Q by Gaussian elimination.
std::vector<BigRational> solve(std::vector<std::vector<BigRational>> a, std::vector<BigRational> b) {
  std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error(Error::Kind::Arithmetic, "singular system during recovery");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      BigRational f = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

}  // namespace

std::map<std::int64_t, std::int64_t> recover_power_sums(const std::vector<BigRational>& sums,
                                                        const BigRational& base) {
  if (base <= 1) throw Error(Error::Kind::Precondition, "recovery base must exceed 1");
  LinearRecurrence rec = berlekamp_massey(sums);
  std::size_t order = rec.order();
  if (2 * order + 2 > sums.size())
    throw Error(Error::Kind::Precondition, "sequence too short for recovery");
  if (order == 0) return {};
  const auto& c = rec.connection;
  if (c.back() == 0) throw Error(Error::Kind::Arithmetic, "recovery failed: zero eigenvalue");

  // Roots of the connection polynomial are base^{e}; bound them by Cauchy.
  BigRational upper = 0, lower = 0;
  for (std::size_t i = 0; i < order; ++i) upper = std::max(upper, BigRational(abs(c[i] / c[order])));
  for (std::size_t i = 1; i <= order; ++i) lower = std::max(lower, BigRational(abs(c[i])));
  upper += 1;
  lower = BigRational(1) / (lower + 1);
  std::int64_t e_min = 0, e_max = 0;
  while (pow(base, e_min) > lower) --e_min;
  while (pow(base, e_max) < upper) ++e_max;

  std::vector<std::int64_t> exponents;
  for (std::int64_t e = e_min; e <= e_max; ++e)
    if (eval_poly(c, pow(base, e)) == 0) exponents.push_back(e);
  if (exponents.size() != order)
    throw Error(Error::Kind::Arithmetic,
                "recovery failed: connection polynomial does not split over powers of " + to_string(base));

  // sum_i m_i beta_i^r = p_r, r = 1..order.
  std::vector<std::vector<BigRational>> a(order, std::vector<BigRational>(order));
  std::vector<BigRational> b(sums.begin(), sums.begin() + static_cast<std::ptrdiff_t>(order));
  for (std::size_t r = 0; r < order; ++r)
    for (std::size_t i = 0; i < order; ++i) a[r][i] = pow(base, -exponents[i] * static_cast<std::int64_t>(r + 1));
  auto multiplicities = solve(std::move(a), std::move(b));

  std::map<std::int64_t, std::int64_t> out;
  for (std::size_t i = 0; i < order; ++i) {
    if (!is_integer(multiplicities[i]) || multiplicities[i] == 0)
      throw Error(Error::Kind::Arithmetic, "recovery failed: non-integral multiplicity");
    out[exponents[i]] = to_int64(multiplicities[i].get_num());
  }
  for (std::size_t r = 1; r <= sums.size(); ++r) {
    BigRational v = 0;
    for (const auto& [e, m] : out) v += BigRational(m) * pow(base, -e * static_cast<std::int64_t>(r));
    if (v != sums[r - 1]) throw Error(Error::Kind::Arithmetic, "recovery failed: recovered factors disagree with traces");
  }
  return out;
}

ZetaFunction recover_zeta(const TraceSeries& ts) {
  // u -> 2 separates distinct exponents: factor a contributes m * 2^{-aN r}.
  const BigRational u0 = 2;
  std::int64_t n = ts.root_index;
  for (const auto& v : ts.values) n = lcm64(n, v.root_index());
  std::vector<BigRational> sums;
  for (const auto& v : ts.values) sums.push_back(v.rescaled(n).evaluate_at_root(u0));
  ZetaFunction z;
  for (const auto& [e, m] : recover_power_sums(sums, u0)) z.multiply(make_rational(e, n), m);

  // Symbolic cross-check of every supplied term.
  for (std::size_t r = 1; r <= ts.length(); ++r) {
    CycloScalar expected(n);
    for (const auto& [a, m] : z.factors())
      expected += CycloScalar::q_power(-a * static_cast<long>(r), BigRational(m));
    if (expected != ts.at(r))
      throw Error(Error::Kind::Arithmetic, "recovery failed: symbolic trace mismatch at r = " + std::to_string(r));
  }
  return z;
}

Report gorenstein_check(const InertiaDecomposition& d) {
  Report report;
  report.title = "gorenstein";
  for (const auto& s : d.sectors) {
    bool integral = is_integer(s.age);
    report.add("sector " + s.label.to_string() + " has integral age", integral,
               integral ? "" : "age " + to_string(s.age));
  }
  return report;
}

Report crepant_compare(const OrbifoldSpec& orb, const ZetaFunction& resolution_zeta) {
  InertiaDecomposition d = enumerate_sectors(orb);
  Report gorenstein = gorenstein_check(d);
  if (!gorenstein.passed()) {
    std::string offenders;
    for (const auto& s : d.sectors)
      if (!is_integer(s.age)) offenders += " " + s.label.to_string();
    throw Error(Error::Kind::Precondition,
                "crepant comparison requires a Gorenstein orbifold (all ages integral); fractional ages at" +
                    offenders);
  }
  ZetaFunction orbifold = orbifold_zeta(d);
  Report report;
  report.title = "crepant comparison";
  std::set<BigRational> exponents;
  for (const auto& [a, m] : orbifold.factors()) exponents.insert(a);
  for (const auto& [a, m] : resolution_zeta.factors()) exponents.insert(a);
  auto multiplicity = [](const ZetaFunction& z, const BigRational& a) {
    auto it = z.factors().find(a);
    return it == z.factors().end() ? std::int64_t{0} : it->second;
  };
  for (const auto& a : exponents) {
    std::int64_t mo = multiplicity(orbifold, a), mr = multiplicity(resolution_zeta, a);
    report.add("factor (1-q^-" + to_string(a) + " t)", mo == mr,
               "multiplicity " + std::to_string(mo) + " vs " + std::to_string(mr));
  }
  return report;
}

}  // namespace orbizeta
