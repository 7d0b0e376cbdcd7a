#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace orbizeta {

// F_{p^n} as F_p[x] / (f) for the lexicographically first monic irreducible
// f of degree n. Elements are coefficient vectors of length n, low degree first.
class FiniteField {
 public:
  using Element = std::vector<std::uint64_t>;

  FiniteField(std::uint64_t p, int degree);

  std::uint64_t characteristic() const { return p_; }
  int degree() const { return n_; }
  std::uint64_t size() const { return size_; }
  // Monic modulus, ascending coefficients (length n + 1).
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  Element zero() const;
  Element one() const;
  Element constant(std::uint64_t c) const;
  // Bijection [0, size) -> field: base-p digits of i as coefficients.
  Element from_index(std::uint64_t i) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(Element a, std::uint64_t e) const;
  bool is_zero(const Element& a) const;

  // Generator of the multiplicative group.
  const Element& primitive_element() const;
  // Primitive k-th root of unity; k must divide size - 1.
  Element root_of_unity(std::uint64_t k) const;

 private:
  std::uint64_t p_;
  int n_;
  std::uint64_t size_;
  std::vector<std::uint64_t> modulus_;
  mutable std::optional<Element> primitive_;
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace orbizeta
