#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <vector>

#include "qp/maps/combinatorial_map.hpp"
#include "qp/series_family.hpp"

namespace qp::maps {

/// Rooted quadrangulations with n faces: 2 * 3^n (2n)! / (n! (n+2)!).
std::uint64_t rooted_quadrangulation_count(int n);

/// Visits each pointed rooted quadrangulation with n faces once, deduplicated
/// by canonical code.
void for_each_pointed_rooted(int n, const std::function<void(const CombinatorialMap&)>& visit);

/// Distance between root vertex and pointed vertex.
int root_distance(const CombinatorialMap& m);

struct TwoPointTally {
  int faces = 0;
  std::map<int, std::uint64_t> by_distance;  ///< includes distance 0
  std::uint64_t total = 0;                   ///< pointed rooted, deduplicated
  std::uint64_t rooted_total = 0;            ///< rooted only, deduplicated
  std::uint64_t generated = 0;               ///< closures built
};

/// Throws MapError when either total disagrees with the closed-form count.
TwoPointTally tally_two_point(int n);

struct TallyRow {
  int n = 0;
  int k = 0;
  std::uint64_t count = 0;
  std::string series_coefficient;
  bool match = false;
};

/// One row per k = 1..n+1 comparing tally counts with [g^n] G_k.
std::vector<TallyRow> compare_with_series(const TwoPointTally& tally, const SeriesFamily& G);

void write_tally_csv(std::ostream& os, const std::vector<TallyRow>& rows);

}  // namespace qp::maps
