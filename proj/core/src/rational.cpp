#include "orbizeta/rational.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>

#include "orbizeta/error.hpp"

namespace orbizeta {

BigRational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(BigInteger(std::to_string(num)), BigInteger(std::to_string(den)));
}

BigRational make_rational(const BigInteger& num, const BigInteger& den) {
  if (den == 0) throw Error(Error::Kind::Arithmetic, "zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const BigRational& x) { return x.get_den() == 1; }

BigInteger floor_of(const BigRational& x) {
  BigInteger q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

BigRational frac(const BigRational& x) { return x - BigRational(floor_of(x)); }

BigRational pow(const BigRational& x, std::int64_t k) {
  if (k < 0) {
    if (x == 0) throw Error(Error::Kind::Arithmetic, "zero raised to a negative power");
    return pow(BigRational(1) / x, -k);
  }
  BigInteger num, den;
  auto e = static_cast<unsigned long>(k);
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), e);
  return make_rational(num, den);
}

std::string to_string(const BigRational& x) { return x.get_str(); }

std::int64_t to_int64(const BigInteger& x) {
  if (!mpz_fits_slong_p(x.get_mpz_t()))
    throw Error(Error::Kind::Arithmetic, "integer does not fit in 64 bits: " + x.get_str());
  return x.get_si();
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::abs(a / gcd64(a, b) * b);
}

std::int64_t mod64(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace orbizeta
