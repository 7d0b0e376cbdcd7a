#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbizeta/cyclo.hpp"
#include "orbizeta/model.hpp"
#include "orbizeta/report.hpp"

namespace orbizeta {

struct BasisElement {
  std::string name;
  std::optional<SectorLabel> label;
  int degree = 0;  // cohomological degree on the sector
  BigRational age;
  BigRational frobenius_weight;  // untwisted F* acts by q^{-frobenius_weight}

  BigRational cr_degree() const { return BigRational(degree) + 2 * age; }
};

// Sparse linear combination: basis index -> coefficient, zero terms absent.
using RingElement = std::map<std::size_t, CycloScalar>;

// Finite-rank graded ring given by a structure-constant table. Products
// missing from the table are zero.
class GradedRing {
 public:
  GradedRing(std::vector<BasisElement> basis, std::size_t unit);

  const std::vector<BasisElement>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }
  std::size_t unit() const { return unit_; }
  std::size_t index_of(const std::string& name) const;

  void set_product(std::size_t x, std::size_t y, RingElement value);
  const RingElement& product(std::size_t x, std::size_t y) const;
  RingElement multiply(const RingElement& a, const RingElement& b) const;

  RingElement basis_element(std::size_t i) const;
  std::string format(const RingElement& e) const;

 private:
  std::vector<BasisElement> basis_;
  std::size_t unit_;
  std::map<std::pair<std::size_t, std::size_t>, RingElement> table_;
  RingElement zero_;
};

// Diagonal action: basis element i -> multipliers[i] * basis element i.
struct RingMap {
  std::vector<CycloScalar> multipliers;

  RingElement apply(const RingElement& e) const;
};

// Q[A]/(A^{b+1}) for P(1,b), b prime; the group ring of Z/n for B mu_n;
// the user table for raw specs that carry one.
GradedRing build_ring(const OrbifoldSpec& spec);

// x -> q^{-(age(x) + w(x))} x.
RingMap frobenius_orb(const GradedRing& ring);
// x -> q^{-w(x)} x, the action before the age twist.
RingMap untwisted_frobenius(const GradedRing& ring);
RingMap identity_map(const GradedRing& ring);

Report verify_ring_hom(const GradedRing& ring, const RingMap& map);
Report verify_grading(const GradedRing& ring);
// Unit, commutativity and associativity, exhaustively.
Report verify_ring_axioms(const GradedRing& ring);

}  // namespace orbizeta
