#pragma once

#include <cstdint>
#include <vector>

#include "sumdiff/group.hpp"
#include "sumdiff/setops.hpp"

namespace sumdiff {

struct CountTriple {
  std::uint64_t mstd = 0;
  std::uint64_t mdts = 0;
  std::uint64_t balanced = 0;

  std::uint64_t total() const { return mstd + mdts + balanced; }
  void add(Classification c);
  CountTriple& operator+=(const CountTriple& o);
  bool operator==(const CountTriple&) const = default;
};

// Split of a subset into rotation and reflection elements.
struct TypeDescriptor {
  int rotations = 0;
  int reflections = 0;

  int size() const { return rotations + reflections; }
  bool operator==(const TypeDescriptor&) const = default;
};

// All splits of a k-subset, ordered by decreasing rotation count.
std::vector<TypeDescriptor> type_descriptors(int k);

// Exact binomial coefficient for n <= 64.
std::uint64_t binomial(int n, int k);

// Exhaustive count over all k-subsets. Requires 1 <= k <= order <= 64.
CountTriple count_by_size(const GroupTable& g, int k);

// Same contract as count_by_size; the subsets are stratified by their smallest
// element and the strata are spread over `workers` threads.
CountTriple parallel_count(const GroupTable& g, int k, int workers);

// Counts restricted to one rotation/reflection split. Dicyclic and dihedral only.
CountTriple count_by_type(const GroupTable& g, int k, TypeDescriptor t);

// Number of triples 0 <= i < j < k < 2n with 2i = j+k, 2j = i+k or 2k = i+j (mod 2n).
// Requires odd n >= 3.
std::uint64_t triple_congruence_count(int n);

// Resolves a worker count: positive values pass through, otherwise SUMDIFF_WORKERS,
// otherwise hardware concurrency.
int resolve_workers(int requested);

}  // namespace sumdiff
