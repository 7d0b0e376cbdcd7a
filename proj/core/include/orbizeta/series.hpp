#pragma once

#include <cstddef>
#include <vector>

#include "orbizeta/cyclo.hpp"

namespace orbizeta {

// Truncated power series a_0 + a_1 t + ... + a_M t^M with CycloScalar
// coefficients. Arithmetic is exact up to the truncation order.
class RationalSeries {
 public:
  explicit RationalSeries(std::size_t order);
  RationalSeries(std::size_t order, std::vector<CycloScalar> coeffs);

  static RationalSeries one(std::size_t order);
  // (1 - x t)^{-m} expanded to the given order; m may be negative.
  static RationalSeries power_of_linear(const CycloScalar& x, std::int64_t m, std::size_t order);
  // Sum_{r>=1} values[r-1] t^r / r, the logarithm shape of a zeta function.
  static RationalSeries log_series(const std::vector<CycloScalar>& values, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const CycloScalar& operator[](std::size_t i) const { return coeffs_.at(i); }
  const std::vector<CycloScalar>& coefficients() const { return coeffs_; }

  RationalSeries& operator+=(const RationalSeries& other);
  friend RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
  friend bool operator==(const RationalSeries& a, const RationalSeries& b);

 private:
  std::vector<CycloScalar> coeffs_;
};

// exp(s) for s with zero constant term.
RationalSeries series_exp(const RationalSeries& s);

}  // namespace orbizeta
