#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sumdiff/group.hpp"

namespace sumdiff {

// One row of the published reference tables: MSTD and MDTS counts of one
// (group, size) pair. Balanced counts are not published; they follow by complement.
struct PublishedCell {
  Family family = Family::Dicyclic;
  int n = 0;
  int size = 0;
  std::uint64_t mstd = 0;
  std::uint64_t mdts = 0;
};

// Parses CSV with header family,n,size,mstd,mdts; '#' lines are comments.
// Throws std::invalid_argument on malformed input.
std::vector<PublishedCell> parse_published_csv(std::string_view text);

// The checked-in table compiled into the library.
const std::vector<PublishedCell>& published_cells();
std::optional<PublishedCell> find_published(Family family, int n, int size);

}  // namespace sumdiff
