#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "orbizeta/cyclo.hpp"
#include "orbizeta/model.hpp"
#include "orbizeta/report.hpp"
#include "orbizeta/series.hpp"

namespace orbizeta {

// Prod_a (1 - q^{-a} t)^{-m_a}. Positive multiplicities come from
// even-degree classes (denominator factors), negative ones from odd degrees.
class ZetaFunction {
 public:
  using Factors = std::map<BigRational, std::int64_t>;

  ZetaFunction() = default;
  explicit ZetaFunction(Factors factors, bool formal = false);

  // Multiplies in (1 - q^{-exponent} t)^{-multiplicity}.
  void multiply(const BigRational& exponent, std::int64_t multiplicity);
  void multiply(const ZetaFunction& other);

  const Factors& factors() const { return factors_; }
  bool formal() const { return formal_; }
  void set_formal(bool formal) { formal_ = formal; }
  // lcm of exponent denominators.
  std::int64_t root_index() const;
  bool has_integral_exponents() const;
  // Signed sum of multiplicities = alternating Betti count.
  std::int64_t degree() const;
  // Sum of |multiplicities|.
  std::int64_t factor_count() const;

  RationalSeries taylor(std::size_t order) const;
  // Eigenvalue q^{-a} -> multiplicity at a numeric q. Refuses fractional exponents.
  std::map<BigRational, std::int64_t> specialized_factors(const BigRational& q) const;
  // Exact value at numeric (q, t). Refuses fractional exponents.
  BigRational evaluate(const BigRational& q, const BigRational& t) const;

  // "1/((1-t)(1-q^-1 t)^2 (1-q^-2 t))".
  std::string to_string() const;
  // "(1 - q^{-0} t)^{-1} (1 - q^{-1} t)^{-2} ...", factors sorted by a.
  std::string to_product_string() const;

  // Factor-level equality; the formal tag is not compared.
  friend bool operator==(const ZetaFunction& a, const ZetaFunction& b) {
    return a.factors_ == b.factors_;
  }

 private:
  Factors factors_;
  bool formal_ = false;
};

struct TraceSeries {
  std::int64_t root_index = 1;
  std::vector<CycloScalar> values;  // values[r-1] = Tr(F_orb^r)

  const CycloScalar& at(std::size_t r) const { return values.at(r - 1); }
  std::size_t length() const { return values.size(); }
};

// lcm of the denominators of every age + weight in d.
std::int64_t decomposition_root_index(const InertiaDecomposition& d);

ZetaFunction sector_zeta(const Sector& s);
ZetaFunction orbifold_zeta(const InertiaDecomposition& d);
TraceSeries trace_series(const InertiaDecomposition& d, std::size_t length);

// Default comparison/recovery order: 2 * (total Betti count) + 2.
std::size_t default_truncation(const InertiaDecomposition& d);

// exp(sum_r values[r] t^r / r) truncated at `order`.
RationalSeries exp_of_traces(const TraceSeries& ts, std::size_t order);

// Given p_r = sum_i m_i beta_i^r for r = 1..R where every beta_i is a power
// base^{-e_i}, returns e_i -> m_i. Berlekamp-Massey finds the connection
// polynomial; its roots are searched among powers of base.
std::map<std::int64_t, std::int64_t> recover_power_sums(const std::vector<BigRational>& sums,
                                                        const BigRational& base);

// Rebuilds the factored zeta from its trace series.
ZetaFunction recover_zeta(const TraceSeries& ts);

Report gorenstein_check(const InertiaDecomposition& d);

// Refuses non-Gorenstein input; otherwise compares factor multisets.
Report crepant_compare(const OrbifoldSpec& orb, const ZetaFunction& resolution_zeta);

}  // namespace orbizeta
