#include "orbizeta/series.hpp"

#include <algorithm>
#include <utility>

#include "orbizeta/error.hpp"

namespace orbizeta {

RationalSeries::RationalSeries(std::size_t order) : coeffs_(order + 1) {}

RationalSeries::RationalSeries(std::size_t order, std::vector<CycloScalar> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

RationalSeries RationalSeries::one(std::size_t order) {
  RationalSeries s(order);
  s.coeffs_[0] = CycloScalar::constant(1);
  return s;
}

RationalSeries RationalSeries::power_of_linear(const CycloScalar& x, std::int64_t m,
                                               std::size_t order) {
  // Coefficient of t^n in (1 - x t)^{-m} is binom(m + n - 1, n) x^n, computed
  // through the ratio (m + n - 1) / n so negative m truncates naturally.
  RationalSeries s(order);
  BigRational c = 1;
  CycloScalar xn = CycloScalar::constant(1);
  for (std::size_t n = 0; n <= order; ++n) {
    if (n > 0) {
      c *= make_rational(m + static_cast<std::int64_t>(n) - 1, static_cast<std::int64_t>(n));
      xn *= x;
    }
    s.coeffs_[n] = xn * c;
  }
  return s;
}

RationalSeries RationalSeries::log_series(const std::vector<CycloScalar>& values,
                                          std::size_t order) {
  if (values.size() < order)
    throw Error(Error::Kind::Precondition, "log series needs one value per order");
  RationalSeries s(order);
  for (std::size_t r = 1; r <= order; ++r)
    s.coeffs_[r] = values[r - 1] * make_rational(1, static_cast<std::int64_t>(r));
  return s;
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& other) {
  std::size_t m = std::min(order(), other.order());
  coeffs_.resize(m + 1);
  for (std::size_t i = 0; i <= m; ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  std::size_t m = std::min(a.order(), b.order());
  RationalSeries out(m);
  for (std::size_t i = 0; i <= m; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= m; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

bool operator==(const RationalSeries& a, const RationalSeries& b) {
  return a.coeffs_ == b.coeffs_;
}

RationalSeries series_exp(const RationalSeries& s) {
  if (!s[0].is_zero())
    throw Error(Error::Kind::Arithmetic, "series_exp requires a zero constant term");
  // E' = s' E  =>  n e_n = sum_{k=1}^{n} k s_k e_{n-k}, with each e_n held
  // densely over its exponent range at the common root index.
  std::size_t m = s.order();
  std::int64_t root = 1;
  for (const auto& c : s.coefficients()) root = lcm64(root, c.root_index());
  std::vector<std::vector<std::pair<std::int64_t, BigRational>>> weighted(m + 1);
  for (std::size_t k = 1; k <= m; ++k) {
    CycloScalar aligned = s[k].rescaled(root);
    for (const auto& [e, c] : aligned.terms()) weighted[k].emplace_back(e, c * static_cast<long>(k));
  }

  std::vector<bool> weights_integral(m + 1, true);
  for (std::size_t k = 1; k <= m; ++k)
    for (const auto& [e, c] : weighted[k])
      if (c.get_den() != 1) weights_integral[k] = false;

  struct Dense {
    std::int64_t low = 0;
    std::vector<BigRational> values;
    bool integral = true;
  };
  std::vector<Dense> e(m + 1);
  e[0] = {0, {BigRational(1)}, true};
  BigRational product;
  for (std::size_t n = 1; n <= m; ++n) {
    std::int64_t low = 0, high = -1;
    bool any = false;
    for (std::size_t k = 1; k <= n; ++k) {
      const Dense& prev = e[n - k];
      if (weighted[k].empty() || prev.values.empty()) continue;
      std::int64_t lo = weighted[k].front().first + prev.low;
      std::int64_t hi = weighted[k].back().first + prev.low + static_cast<std::int64_t>(prev.values.size()) - 1;
      low = any ? std::min(low, lo) : lo;
      high = any ? std::max(high, hi) : hi;
      any = true;
    }
    if (!any) continue;
    Dense acc{low, std::vector<BigRational>(static_cast<std::size_t>(high - low + 1)), true};
    bool integral = true;
    for (std::size_t k = 1; k <= n; ++k) integral = integral && weights_integral[k] && e[n - k].integral;
    if (integral) {
      std::vector<BigInteger> sums(acc.values.size());
      for (std::size_t k = 1; k <= n; ++k) {
        const Dense& prev = e[n - k];
        for (const auto& [exponent, c] : weighted[k]) {
          std::size_t offset = static_cast<std::size_t>(exponent + prev.low - low);
          mpz_srcptr cn = c.get_num_mpz_t();
          for (std::size_t i = 0; i < prev.values.size(); ++i)
            mpz_addmul(sums[offset + i].get_mpz_t(), cn, prev.values[i].get_num_mpz_t());
        }
      }
      for (std::size_t i = 0; i < sums.size(); ++i) {
        acc.values[i] = BigRational(sums[i], static_cast<long>(n));
        acc.values[i].canonicalize();
        if (acc.values[i].get_den() != 1) acc.integral = false;
      }
    } else {
      for (std::size_t k = 1; k <= n; ++k) {
        const Dense& prev = e[n - k];
        for (const auto& [exponent, c] : weighted[k]) {
          std::size_t offset = static_cast<std::size_t>(exponent + prev.low - low);
          for (std::size_t i = 0; i < prev.values.size(); ++i) {
            if (sgn(prev.values[i]) == 0) continue;
            product = c * prev.values[i];
            acc.values[offset + i] += product;
          }
        }
      }
      BigRational inv_n = make_rational(1, static_cast<std::int64_t>(n));
      for (auto& v : acc.values) {
        v *= inv_n;
        if (v.get_den() != 1) acc.integral = false;
      }
    }
    e[n] = std::move(acc);
  }

  std::vector<CycloScalar> out(m + 1);
  for (std::size_t n = 0; n <= m; ++n) {
    CycloScalar::Terms terms;
    for (std::size_t i = 0; i < e[n].values.size(); ++i)
      if (sgn(e[n].values[i]) != 0) terms.emplace(e[n].low + static_cast<std::int64_t>(i), e[n].values[i]);
    out[n] = CycloScalar(root, std::move(terms)).normalized();
  }
  return RationalSeries(m, std::move(out));
}

}  // namespace orbizeta
