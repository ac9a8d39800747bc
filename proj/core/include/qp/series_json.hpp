#pragma once

#include <string>
#include <string_view>

#include "qp/bi_series.hpp"
#include "qp/power_series.hpp"
#include "qp/series_family.hpp"

namespace qp {

/// {"variable": "g", "order": N, "coefficients": ["num/den", ...]}
std::string to_json(const PowerSeries& s, int indent = -1);
PowerSeries power_series_from_json(std::string_view text);

/// {"outer_variable": "t", "degree": D, "order": N, "coefficients": [series, ...]}
std::string to_json(const BiSeries& s, int indent = -1);

/// {"name": ..., "max_index": K, "order": N, "entries": [series, ...], "limit": series|null}
std::string to_json(const SeriesFamily& f, int indent = -1);

}  // namespace qp
