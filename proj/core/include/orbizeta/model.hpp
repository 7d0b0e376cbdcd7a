#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "orbizeta/rational.hpp"

namespace orbizeta {

// Group element zeta_m^c under the fixed embedding mu_m -> G_m, stored in
// lowest terms with 0 <= c < m. Equality is equality of c/m in Q/Z.
struct SectorLabel {
  std::int64_t c = 0;
  std::int64_t m = 1;

  static SectorLabel make(std::int64_t c, std::int64_t m);
  static SectorLabel identity() { return {0, 1}; }

  bool is_identity() const { return c == 0; }
  SectorLabel inverse() const;
  std::string to_string() const;

  auto operator<=>(const SectorLabel&) const = default;
};

// F* acts on a `multiplicity`-dimensional piece of H^degree by q^{-weight}.
struct ProfileEntry {
  int degree = 0;
  BigRational weight;
  std::int64_t multiplicity = 1;

  bool operator==(const ProfileEntry&) const = default;
};

// Presentation of a sector as [cone / (mu_g x G_m)] or [V / mu_g] for the
// point-count oracle. h = omega^k in mu_g acts on coordinate j by h^{weights[j]}.
struct PointCountModel {
  std::vector<std::int64_t> coordinate_weights;
  std::int64_t group_order = 1;
  // Punctured cone modulo G_m (weighted projective); otherwise an affine space.
  bool projective = false;

  bool operator==(const PointCountModel&) const = default;
};

struct Sector {
  SectorLabel label;
  int dim = 0;
  BigRational age;
  std::vector<ProfileEntry> profile;
  std::int64_t aut_order = 1;
  SectorLabel inverse_label;
  std::optional<PointCountModel> geometry;

  std::int64_t betti() const;
};

struct InertiaDecomposition {
  std::vector<Sector> sectors;
  int ambient_dim = 0;
  bool proper = true;

  const Sector* find(const SectorLabel& label) const;
  const Sector& at(const SectorLabel& label) const;
  std::int64_t total_betti() const;
};

struct FieldParam {
  std::optional<std::int64_t> q;  // absent = symbolic
  std::int64_t p = 0;
  std::int64_t e = 0;

  static FieldParam symbolic() { return {}; }
  // Factors q as p^e; throws unless q is a prime power.
  static FieldParam specialized(std::int64_t q);
  bool is_specialized() const { return q.has_value(); }

  bool operator==(const FieldParam&) const = default;
};

struct WeightedProjective {
  std::vector<std::int64_t> weights;
  bool operator==(const WeightedProjective&) const = default;
};

struct ClassifyingBMu {
  std::int64_t n = 1;
  bool operator==(const ClassifyingBMu&) const = default;
};

struct AffineCyclicQuotient {
  std::int64_t m = 1;
  std::vector<std::int64_t> action_weights;  // reduced mod m
  bool operator==(const AffineCyclicQuotient&) const = default;
};

// User-supplied Chen-Ruan ring table for raw mode.
struct RawRingBasis {
  std::string name;
  std::optional<SectorLabel> label;
  int degree = 0;
  BigRational age;
  BigRational frobenius_weight;  // untwisted F* acts by q^{-frobenius_weight}
  bool operator==(const RawRingBasis&) const = default;
};

struct RawRingProduct {
  std::string left;
  std::string right;
  std::vector<std::pair<BigRational, std::string>> terms;
  bool operator==(const RawRingProduct&) const = default;
};

struct RawRingTable {
  std::vector<RawRingBasis> basis;
  std::vector<RawRingProduct> products;
  std::string unit;
  bool operator==(const RawRingTable&) const = default;
};

struct RawSectors {
  std::vector<Sector> sectors;
  bool proper = true;
  std::optional<RawRingTable> ring;
};

using Family = std::variant<WeightedProjective, ClassifyingBMu, AffineCyclicQuotient, RawSectors>;

struct OrbifoldSpec {
  Family family;
  FieldParam base;
  std::string label;
};

// "wps", "bmu", "acq" or "raw".
std::string family_tag(const OrbifoldSpec& spec);
// Orders of every finite group the family involves; tameness and
// splitness are checked against these.
std::vector<std::int64_t> group_orders(const OrbifoldSpec& spec);
// Throws Error(Validation) on the first violated invariant.
void validate_spec(const OrbifoldSpec& spec);

bool operator==(const Sector& a, const Sector& b);
bool operator==(const RawSectors& a, const RawSectors& b);
bool operator==(const OrbifoldSpec& a, const OrbifoldSpec& b);

}  // namespace orbizeta
