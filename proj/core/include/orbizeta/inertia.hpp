#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "orbizeta/model.hpp"

namespace orbizeta {

// Cyclotomic inertia decomposition of a supported orbifold. Sectors are
// ordered by the value c/m of their label, identity first.
InertiaDecomposition enumerate_sectors(const OrbifoldSpec& spec);

// Sum of frac(c * w / m) over the normal weights.
BigRational age_of(const SectorLabel& label, std::span<const std::int64_t> normal_weights);

// g -> g^{-1} on the labels present in d.
std::map<SectorLabel, SectorLabel> involution(const InertiaDecomposition& d);

}  // namespace orbizeta
