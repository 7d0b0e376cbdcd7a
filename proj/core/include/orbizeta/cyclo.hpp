#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "orbizeta/rational.hpp"

namespace orbizeta {

// An element of Q[u, u^-1] where u is a formal N-th root of q (u^N = q).
// Values with different root indices interoperate through the lcm of the
// two indices; equality is taken after that rescaling, so (u^2, N=2) == (u, N=1).
class CycloScalar {
 public:
  using Terms = std::map<std::int64_t, BigRational>;

  CycloScalar() = default;
  explicit CycloScalar(std::int64_t root_index);
  CycloScalar(std::int64_t root_index, Terms terms);

  static CycloScalar constant(const BigRational& c, std::int64_t root_index = 1);
  // c * u^exponent at the given root index.
  static CycloScalar monomial(const BigRational& c, std::int64_t exponent,
                              std::int64_t root_index);
  // c * q^power for rational power; root index is the denominator of power.
  static CycloScalar q_power(const BigRational& power, const BigRational& c = 1);

  std::int64_t root_index() const { return root_index_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  // Coefficient of u^exponent at this root index (0 when absent).
  BigRational coefficient(std::int64_t exponent) const;

  // Same value with root index k*N (exponents multiplied by k).
  CycloScalar rescaled(std::int64_t new_root_index) const;
  // Smallest root index representing the same value.
  CycloScalar normalized() const;

  // q -> q^r, i.e. u^e -> u^{r e}.
  CycloScalar frobenius_iterate(std::int64_t r) const;
  // Absorbs every integer power of q into the coefficients for a numeric q:
  // the result only carries exponents in [0, N).
  CycloScalar specialize(const BigRational& q) const;
  // Numeric value; throws unless every exponent is divisible by N.
  BigRational evaluate(const BigRational& q) const;
  // Value under a rational substitution u -> u0 (used by recovery oracles).
  BigRational evaluate_at_root(const BigRational& u0) const;

  CycloScalar inverse_monomial() const;

  CycloScalar operator-() const;
  CycloScalar& operator+=(const CycloScalar& other);
  CycloScalar& operator-=(const CycloScalar& other);
  CycloScalar& operator*=(const CycloScalar& other);
  CycloScalar& operator*=(const BigRational& c);

  friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
  friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
  friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);
  friend CycloScalar operator*(CycloScalar a, const BigRational& c) { return a *= c; }
  friend bool operator==(const CycloScalar& a, const CycloScalar& b);
  friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

  // "1 + 2*q^-1 + q^-2", "q^-1/2"; terms in decreasing exponent order.
  std::string to_string() const;

 private:
  void prune();

  std::int64_t root_index_ = 1;
  Terms terms_;
};

CycloScalar cyclo_add(const CycloScalar& a, const CycloScalar& b);
CycloScalar cyclo_mul(const CycloScalar& a, const CycloScalar& b);
CycloScalar cyclo_neg(const CycloScalar& a);
CycloScalar cyclo_inv_monomial(const CycloScalar& a);

}  // namespace orbizeta
