#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "orbizeta/zeta.hpp"

namespace orbizeta {

// {"factors":[{"exponent":[num,den],"multiplicity":m},...],"formal":bool,
//  "product":"...","root_index":N,"string":"..."}; factors sorted by exponent.
std::string zeta_to_json(const ZetaFunction& z);
// Accepts the document above; only "factors" is required.
ZetaFunction parse_zeta(std::string_view text);
ZetaFunction load_zeta(const std::string& path);

// [{"r":1,"classes":[{"q_exponent":[num,den],"value":[num,den]},...]},...].
// With q given, integer powers of q are absorbed first so only
// u-exponents in [0, N) remain.
std::string trace_series_to_json(const TraceSeries& ts, std::optional<std::int64_t> q = std::nullopt);

}  // namespace orbizeta
