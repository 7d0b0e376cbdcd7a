#pragma once

#include <string>
#include <string_view>

#include "orbizeta/model.hpp"
#include "orbizeta/report.hpp"

namespace orbizeta {

// Parses and validates an orbifold description document. Errors carry the
// JSON pointer (or byte offset, for syntax errors) of the offending value.
OrbifoldSpec parse_spec(std::string_view text);
OrbifoldSpec load_spec(const std::string& path);

// Canonical document: sorted keys, compact form.
std::string serialize_spec(const OrbifoldSpec& spec);

// {"ambient_dim":n,"proper":b,"sectors":[...]} with sectors in the raw schema.
std::string decomposition_to_json(const InertiaDecomposition& d);

// Checks every InertiaDecomposition invariant and reports each one.
Report validate_decomposition(const InertiaDecomposition& d);

std::string read_file(const std::string& path);

}  // namespace orbizeta
