#include "orbizeta/inertia.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "orbizeta/error.hpp"
#include "orbizeta/spec_io.hpp"

namespace orbizeta {

namespace {

bool label_order(const SectorLabel& a, const SectorLabel& b) {
  BigRational x = make_rational(a.c, a.m), y = make_rational(b.c, b.m);
  if (x != y) return x < y;
  return a.m < b.m;
}

void sort_sectors(std::vector<Sector>& sectors) {
  std::sort(sectors.begin(), sectors.end(),
            [](const Sector& a, const Sector& b) { return label_order(a.label, b.label); });
}

std::vector<ProfileEntry> tate_profile(int dim) {
  std::vector<ProfileEntry> profile;
  for (int k = 0; k <= dim; ++k) profile.push_back(ProfileEntry{2 * k, BigRational(k), 1});
  return profile;
}

InertiaDecomposition enumerate_wps(const WeightedProjective& wps) {
  const auto& w = wps.weights;
  std::int64_t g = 0;
  for (auto x : w) g = gcd64(g, x);
  if (g > 1)
    throw Error(Error::Kind::Unsupported,
                "generically non-trivial isotropy unsupported by enumerator; use raw mode");

  std::set<SectorLabel> labels;
  for (auto x : w)
    for (std::int64_t c = 0; c < x; ++c) labels.insert(SectorLabel::make(c, x));

  InertiaDecomposition d;
  d.ambient_dim = static_cast<int>(w.size()) - 1;
  d.proper = true;
  for (const auto& label : labels) {
    std::vector<std::int64_t> fixed, normal;
    for (auto x : w) (mod64(label.c * x, label.m) == 0 ? fixed : normal).push_back(x);
    Sector s;
    s.label = label;
    s.dim = static_cast<int>(fixed.size()) - 1;
    s.age = age_of(label, normal);
    s.profile = tate_profile(s.dim);
    s.aut_order = std::accumulate(fixed.begin(), fixed.end(), std::int64_t{0}, gcd64);
    s.inverse_label = label.inverse();
    s.geometry = PointCountModel{fixed, s.aut_order, true};
    d.sectors.push_back(std::move(s));
  }
  sort_sectors(d.sectors);
  return d;
}

InertiaDecomposition enumerate_bmu(const ClassifyingBMu& bmu) {
  InertiaDecomposition d;
  d.ambient_dim = 0;
  d.proper = true;
  for (std::int64_t c = 0; c < bmu.n; ++c) {
    Sector s;
    s.label = SectorLabel::make(c, bmu.n);
    s.dim = 0;
    s.age = 0;
    s.profile = {ProfileEntry{0, BigRational(0), 1}};
    s.aut_order = bmu.n;
    s.inverse_label = s.label.inverse();
    s.geometry = PointCountModel{{}, bmu.n, false};
    d.sectors.push_back(std::move(s));
  }
  sort_sectors(d.sectors);
  return d;
}

InertiaDecomposition enumerate_acq(const AffineCyclicQuotient& acq) {
  InertiaDecomposition d;
  d.ambient_dim = static_cast<int>(acq.action_weights.size());
  d.proper = false;
  for (std::int64_t c = 0; c < acq.m; ++c) {
    SectorLabel label = SectorLabel::make(c, acq.m);
    std::vector<std::int64_t> fixed, normal;
    for (auto a : acq.action_weights) (mod64(label.c * a, label.m) == 0 ? fixed : normal).push_back(a);
    Sector s;
    s.label = label;
    s.dim = static_cast<int>(fixed.size());
    s.age = age_of(label, normal);
    s.profile = {ProfileEntry{0, BigRational(0), 1}};
    s.aut_order = acq.m;
    s.inverse_label = label.inverse();
    s.geometry = PointCountModel{fixed, acq.m, false};
    d.sectors.push_back(std::move(s));
  }
  sort_sectors(d.sectors);
  return d;
}

InertiaDecomposition passthrough_raw(const RawSectors& raw) {
  InertiaDecomposition d;
  d.sectors = raw.sectors;
  d.proper = raw.proper;
  int ambient = 0;
  bool have_identity = false;
  for (const auto& s : raw.sectors) {
    if (s.label.is_identity()) {
      ambient = s.dim;
      have_identity = true;
    } else if (!have_identity) {
      ambient = std::max(ambient, s.dim);
    }
  }
  d.ambient_dim = ambient;
  sort_sectors(d.sectors);

  Report report = validate_decomposition(d);
  if (!report.passed()) {
    Check first = report.failures().front();
    throw Error(Error::Kind::Validation, "raw sectors rejected: " + first.name + ": " + first.detail);
  }
  return d;
}

}  // namespace

BigRational age_of(const SectorLabel& label, std::span<const std::int64_t> normal_weights) {
  BigRational age = 0;
  if (label.is_identity()) return age;
  for (auto w : normal_weights) age += make_rational(mod64(label.c * w, label.m), label.m);
  return age;
}

InertiaDecomposition enumerate_sectors(const OrbifoldSpec& spec) {
  if (auto* w = std::get_if<WeightedProjective>(&spec.family)) return enumerate_wps(*w);
  if (auto* b = std::get_if<ClassifyingBMu>(&spec.family)) return enumerate_bmu(*b);
  if (auto* a = std::get_if<AffineCyclicQuotient>(&spec.family)) return enumerate_acq(*a);
  return passthrough_raw(std::get<RawSectors>(spec.family));
}

std::map<SectorLabel, SectorLabel> involution(const InertiaDecomposition& d) {
  std::map<SectorLabel, SectorLabel> out;
  for (const auto& s : d.sectors) {
    SectorLabel inv = s.label.inverse();
    if (d.find(inv) == nullptr)
      throw Error(Error::Kind::Structure,
                  "inverse of sector " + s.label.to_string() + " is not present in the decomposition");
    out.emplace(s.label, inv);
  }
  return out;
}

}  // namespace orbizeta
