#include "orbizeta/finite_field.hpp"

#include <algorithm>
#include <limits>

#include "orbizeta/error.hpp"

namespace orbizeta {

namespace {

using Poly = std::vector<std::uint64_t>;  // ascending, trimmed

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f for monic f.
Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  std::size_t n = f.size() - 1;
  trim(a);
  while (a.size() > n) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - 1 - n;
    for (std::size_t i = 0; i <= n; ++i) a[shift + i] = (a[shift + i] + p - mulmod(lead, f[i], p)) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  return poly_mod(std::move(out), f, p);
}

Poly poly_powmod(Poly a, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly r = poly_mod({1}, f, p);
  a = poly_mod(std::move(a), f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, a, f, p);
    a = poly_mulmod(a, a, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic then reduce a mod b
    std::uint64_t inv = powmod(b.back(), p - 2, p);
    for (auto& c : b) c = mulmod(c, inv, p);
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
  int n = static_cast<int>(f.size()) - 1;
  Poly x = {0, 1};
  // x^{p^k} mod f by repeated p-th powering.
  auto frob_power = [&](int k) {
    Poly r = poly_mod(x, f, p);
    for (int i = 0; i < k; ++i) r = poly_powmod(r, p, f, p);
    return r;
  };
  auto minus_x = [&](Poly r) {
    r.resize(std::max<std::size_t>(r.size(), 2), 0);
    r[1] = (r[1] + p - 1) % p;
    trim(r);
    return r;
  };
  if (!minus_x(frob_power(n)).empty()) return false;
  for (auto l : prime_factors(static_cast<std::uint64_t>(n))) {
    Poly g = poly_gcd(minus_x(frob_power(n / static_cast<int>(l))), f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

Poly find_irreducible(std::uint64_t p, int n) {
  if (n == 1) return {0, 1};
  Poly f(static_cast<std::size_t>(n) + 1, 0);
  f[n] = 1;
  // Enumerate the lower coefficients as a base-p counter.
  while (true) {
    if (f[0] != 0 && is_irreducible(f, p)) return f;
    int i = 0;
    while (i < n && ++f[i] == p) f[i++] = 0;
    if (i == n) break;
  }
  throw Error(Error::Kind::Arithmetic, "no irreducible polynomial found");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

FiniteField::FiniteField(std::uint64_t p, int degree) : p_(p), n_(degree) {
  if (!is_prime(p)) throw Error(Error::Kind::Arithmetic, "field characteristic must be prime");
  if (p >= (std::uint64_t{1} << 31)) throw Error(Error::Kind::Arithmetic, "characteristic too large");
  if (degree < 1) throw Error(Error::Kind::Arithmetic, "field degree must be positive");
  size_ = 1;
  for (int i = 0; i < degree; ++i) {
    if (size_ > std::numeric_limits<std::uint64_t>::max() / p)
      throw Error(Error::Kind::Arithmetic, "field too large");
    size_ *= p;
  }
  modulus_ = find_irreducible(p, degree);
}

FiniteField::Element FiniteField::zero() const { return Element(n_, 0); }

FiniteField::Element FiniteField::one() const { return constant(1); }

FiniteField::Element FiniteField::constant(std::uint64_t c) const {
  Element e(n_, 0);
  e[0] = c % p_;
  return e;
}

FiniteField::Element FiniteField::from_index(std::uint64_t i) const {
  Element e(n_, 0);
  for (int k = 0; k < n_; ++k) {
    e[k] = i % p_;
    i /= p_;
  }
  return e;
}

FiniteField::Element FiniteField::add(const Element& a, const Element& b) const {
  Element e(n_);
  for (int k = 0; k < n_; ++k) e[k] = (a[k] + b[k]) % p_;
  return e;
}

FiniteField::Element FiniteField::sub(const Element& a, const Element& b) const {
  Element e(n_);
  for (int k = 0; k < n_; ++k) e[k] = (a[k] + p_ - b[k]) % p_;
  return e;
}

FiniteField::Element FiniteField::mul(const Element& a, const Element& b) const {
  Poly r = poly_mulmod(a, b, modulus_, p_);
  r.resize(n_, 0);
  return r;
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
  Element r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

bool FiniteField::is_zero(const Element& a) const {
  return std::all_of(a.begin(), a.end(), [](std::uint64_t c) { return c == 0; });
}

const FiniteField::Element& FiniteField::primitive_element() const {
  if (primitive_) return *primitive_;
  std::uint64_t order = size_ - 1;
  auto factors = prime_factors(order);
  for (std::uint64_t i = 1; i < size_; ++i) {
    Element g = from_index(i);
    bool generates = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t l) {
      return pow(g, order / l) != one();
    });
    if (generates) {
      primitive_ = g;
      return *primitive_;
    }
  }
  throw Error(Error::Kind::Arithmetic, "no primitive element found");
}

FiniteField::Element FiniteField::root_of_unity(std::uint64_t k) const {
  if (k == 0 || (size_ - 1) % k != 0)
    throw Error(Error::Kind::Precondition, "root of unity order must divide the multiplicative group order");
  return pow(primitive_element(), (size_ - 1) / k);
}

}  // namespace orbizeta
