#include "orbizeta/cyclo.hpp"

#include <sstream>
#include <utility>

#include "orbizeta/error.hpp"

namespace orbizeta {

namespace {

void require_root_index(std::int64_t n) {
  if (n < 1) throw Error(Error::Kind::Arithmetic, "root index must be positive");
}

// Brings both operands to the lcm of their root indices.
std::pair<CycloScalar, CycloScalar> align(const CycloScalar& a, const CycloScalar& b) {
  if (a.root_index() == b.root_index()) return {a, b};
  std::int64_t n = lcm64(a.root_index(), b.root_index());
  return {a.rescaled(n), b.rescaled(n)};
}

}  // namespace

CycloScalar::CycloScalar(std::int64_t root_index) : root_index_(root_index) {
  require_root_index(root_index);
}

CycloScalar::CycloScalar(std::int64_t root_index, Terms terms)
    : root_index_(root_index), terms_(std::move(terms)) {
  require_root_index(root_index);
  prune();
}

CycloScalar CycloScalar::constant(const BigRational& c, std::int64_t root_index) {
  return monomial(c, 0, root_index);
}

CycloScalar CycloScalar::monomial(const BigRational& c, std::int64_t exponent,
                                  std::int64_t root_index) {
  Terms t;
  t.emplace(exponent, c);
  return CycloScalar(root_index, std::move(t));
}

CycloScalar CycloScalar::q_power(const BigRational& power, const BigRational& c) {
  std::int64_t n = to_int64(power.get_den());
  return monomial(c, to_int64(power.get_num()), n);
}

BigRational CycloScalar::coefficient(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigRational(0) : it->second;
}

void CycloScalar::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

CycloScalar CycloScalar::rescaled(std::int64_t new_root_index) const {
  require_root_index(new_root_index);
  if (new_root_index % root_index_ != 0)
    throw Error(Error::Kind::Arithmetic, "rescale target must be a multiple of the root index");
  std::int64_t k = new_root_index / root_index_;
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace(e * k, c);
  return CycloScalar(new_root_index, std::move(t));
}

CycloScalar CycloScalar::normalized() const {
  std::int64_t g = root_index_;
  for (const auto& [e, c] : terms_) g = gcd64(g, e);
  if (g <= 1) return *this;
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace(e / g, c);
  return CycloScalar(root_index_ / g, std::move(t));
}

CycloScalar CycloScalar::frobenius_iterate(std::int64_t r) const {
  if (r < 1) throw Error(Error::Kind::Arithmetic, "iterate index must be positive");
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace(e * r, c);
  return CycloScalar(root_index_, std::move(t));
}

CycloScalar CycloScalar::specialize(const BigRational& q) const {
  if (q == 0) throw Error(Error::Kind::Arithmetic, "cannot specialize at q = 0");
  CycloScalar out(root_index_);
  for (const auto& [e, c] : terms_) {
    std::int64_t s = mod64(e, root_index_);
    std::int64_t k = (e - s) / root_index_;
    out.terms_[s] += c * pow(q, k);
  }
  out.prune();
  return out;
}

BigRational CycloScalar::evaluate(const BigRational& q) const {
  BigRational v = 0;
  for (const auto& [e, c] : terms_) {
    if (e % root_index_ != 0)
      throw Error(Error::Kind::Arithmetic,
                  "fractional power of q cannot be evaluated exactly: " + to_string());
    v += c * pow(q, e / root_index_);
  }
  return v;
}

BigRational CycloScalar::evaluate_at_root(const BigRational& u0) const {
  BigRational v = 0;
  for (const auto& [e, c] : terms_) v += c * pow(u0, e);
  return v;
}

CycloScalar CycloScalar::inverse_monomial() const {
  if (!is_monomial()) throw Error(Error::Kind::Arithmetic, "non-invertible scalar");
  const auto& [e, c] = *terms_.begin();
  return monomial(BigRational(1) / c, -e, root_index_);
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& other) {
  if (other.root_index_ != root_index_) {
    auto [a, b] = align(*this, other);
    *this = std::move(a);
    return *this += b;
  }
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) continue;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& other) { return *this += -other; }

CycloScalar& CycloScalar::operator*=(const CycloScalar& other) { return *this = *this * other; }

CycloScalar& CycloScalar::operator*=(const BigRational& c) {
  for (auto& [e, v] : terms_) v *= c;
  prune();
  return *this;
}

CycloScalar operator*(const CycloScalar& lhs, const CycloScalar& rhs) {
  if (lhs.root_index_ != rhs.root_index_) {
    auto [a, b] = align(lhs, rhs);
    return a * b;
  }
  CycloScalar out(lhs.root_index_);
  BigRational product;
  for (const auto& [ea, ca] : lhs.terms_)
    for (const auto& [eb, cb] : rhs.terms_) {
      product = ca * cb;
      out.terms_[ea + eb] += product;
    }
  out.prune();
  return out;
}

bool operator==(const CycloScalar& lhs, const CycloScalar& rhs) {
  if (lhs.root_index_ == rhs.root_index_) return lhs.terms_ == rhs.terms_;
  auto [a, b] = align(lhs, rhs);
  return a.terms_ == b.terms_;
}

std::string CycloScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    BigRational c = it->second;
    BigRational power = make_rational(it->first, root_index_);
    bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (power == 0) {
      os << orbizeta::to_string(c);
      continue;
    }
    if (c != 1) os << orbizeta::to_string(c) << "*";
    os << "q";
    if (power != 1) os << "^" << orbizeta::to_string(power);
  }
  return os.str();
}

CycloScalar cyclo_add(const CycloScalar& a, const CycloScalar& b) { return a + b; }
CycloScalar cyclo_mul(const CycloScalar& a, const CycloScalar& b) { return a * b; }
CycloScalar cyclo_neg(const CycloScalar& a) { return -a; }
CycloScalar cyclo_inv_monomial(const CycloScalar& a) { return a.inverse_monomial(); }

}  // namespace orbizeta
