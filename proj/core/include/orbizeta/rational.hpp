#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace orbizeta {

// Arbitrary-precision rational. mpq_class keeps numerator and denominator
// reduced with a positive denominator as long as values are built through
// make_rational() or arithmetic.
using BigRational = mpq_class;
using BigInteger = mpz_class;

BigRational make_rational(std::int64_t num, std::int64_t den = 1);
BigRational make_rational(const BigInteger& num, const BigInteger& den);

bool is_integer(const BigRational& x);
BigInteger floor_of(const BigRational& x);
// Fractional part in [0, 1).
BigRational frac(const BigRational& x);

// x^k for any integer k; throws on 0^negative.
BigRational pow(const BigRational& x, std::int64_t k);

// "3", "-1/2".
std::string to_string(const BigRational& x);

std::int64_t to_int64(const BigInteger& x);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
// Non-negative residue of a mod m, m > 0.
std::int64_t mod64(std::int64_t a, std::int64_t m);

}  // namespace orbizeta
