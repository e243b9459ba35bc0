#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "equilat/surface.hpp"

namespace equilat {

struct CensusOptions {
  // Largest T accepted without an explicit override.
  int max_t = 10;
  int jobs = 1;
};

using SurfaceFilter = std::function<bool(const GluedSurface&)>;

// Canonical forms of all connected closed surfaces with T faces, one per
// orientation-preserving isomorphism class, sorted. Throws PreconditionError for
// odd T, T < 2 or T above options.max_t.
std::vector<std::string> enumerate_surfaces(int t, const SurfaceFilter& filter = {},
                                            const CensusOptions& options = {});

struct CensusRow {
  int t = 0;
  int genus = 0;
  std::int64_t count = 0;
  std::int64_t tran_count = 0;
  std::int64_t lb_count = 0;
  // Surfaces whose 1-skeleton has a loop or a repeated edge.
  std::int64_t degenerate_count = 0;
  std::map<int, std::int64_t> max_degree_histogram;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

// One row per (T, genus) over even T <= t_max, restricted to surfaces passing
// `filter`.
std::vector<CensusRow> count_table(int t_max, const SurfaceFilter& filter = {}, const CensusOptions& options = {});

// Columns T,genus,count,tran_count,lb_count.
std::string census_csv(const std::vector<CensusRow>& rows);

bool has_loops_or_multi_edges(const GluedSurface& s);

}  // namespace equilat
