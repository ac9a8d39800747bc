#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qp/power_series.hpp"

namespace qp {

/// Indexed family S_0..S_K of series sharing one variable and order, with
/// an optional k -> infinity limit.
struct SeriesFamily {
  std::string name;
  std::vector<PowerSeries> entries;
  std::optional<PowerSeries> limit;

  int max_index() const { return static_cast<int>(entries.size()) - 1; }
  int order() const { return entries.front().order(); }
  const PowerSeries& operator[](int k) const { return entries.at(static_cast<std::size_t>(k)); }

  bool is_integral() const;
  /// Every coefficient of every entry (and the limit) is a nonnegative integer.
  bool is_counting() const;
};

}  // namespace qp
