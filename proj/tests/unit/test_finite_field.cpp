#include <doctest.h>

#include <set>

#include "orbizeta/error.hpp"
#include "orbizeta/finite_field.hpp"

using namespace orbizeta;

namespace {

std::set<FiniteField::Element> all_elements(const FiniteField& f) {
  std::set<FiniteField::Element> out;
  for (std::uint64_t i = 0; i < f.size(); ++i) out.insert(f.from_index(i));
  return out;
}

std::uint64_t multiplicative_order(const FiniteField& f, const FiniteField::Element& x) {
  FiniteField::Element y = x;
  std::uint64_t k = 1;
  while (y != f.one()) {
    y = f.mul(y, x);
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("primality helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_factors(360) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(prime_factors(1).empty());
}

TEST_CASE("field axioms on small fields") {
  for (auto [p, n] : {std::pair{2ull, 3}, std::pair{3ull, 2}, std::pair{5ull, 1}, std::pair{7ull, 2}}) {
    FiniteField f(p, n);
    CAPTURE(f.size());
    auto elements = all_elements(f);
    CHECK(elements.size() == f.size());
    for (const auto& a : elements) {
      CHECK(f.add(a, f.zero()) == a);
      CHECK(f.mul(a, f.one()) == a);
      CHECK(f.is_zero(f.sub(a, a)));
      // Frobenius fixes exactly the prime field only when n = 1; x^{|F|} = x always.
      CHECK(f.pow(a, f.size()) == a);
      if (!f.is_zero(a)) CHECK(f.pow(a, f.size() - 1) == f.one());
    }
    // no zero divisors
    for (const auto& a : elements)
      for (const auto& b : elements)
        if (!f.is_zero(a) && !f.is_zero(b)) CHECK_FALSE(f.is_zero(f.mul(a, b)));
  }
}

TEST_CASE("primitive element generates the multiplicative group") {
  FiniteField f(3, 3);
  CHECK(multiplicative_order(f, f.primitive_element()) == 26);
}

TEST_CASE("roots of unity have the requested order") {
  FiniteField f(13, 1);
  for (std::uint64_t k : {1, 2, 3, 4, 6, 12}) CHECK(multiplicative_order(f, f.root_of_unity(k)) == k);
  CHECK_THROWS_AS(f.root_of_unity(5), Error);
  FiniteField g(5, 2);
  CHECK(multiplicative_order(g, g.root_of_unity(3)) == 3);
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(FiniteField(4, 1), Error);
  CHECK_THROWS_AS(FiniteField(5, 0), Error);
}
