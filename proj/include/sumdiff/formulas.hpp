#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sumdiff/enumerator.hpp"

namespace sumdiff {

using BigInt = boost::multiprecision::cpp_int;

enum class BoundKind { Exact, LowerBound };

struct FormulaResult {
  BigInt value;
  BoundKind kind = BoundKind::Exact;
  std::string source;
};

struct FormulaTriple {
  BigInt mstd;
  BigInt mdts;
  BigInt balanced;

  BigInt total() const { return mstd + mdts + balanced; }
  bool matches(const CountTriple& c) const;
  bool operator==(const FormulaTriple&) const = default;
};

FormulaTriple to_formula_triple(const CountTriple& c);

BigInt big_binomial(int n, int k);

// Closed-form MSTD/MDTS/balanced counts of 2-subsets of Dic_4n, n >= 2.
FormulaTriple theorem_size2(int n);

// Closed-form counts of 3-subsets of Dic_4n for odd n >= 3. Even n is rejected:
// no closed form is known to this library and none is extrapolated.
FormulaTriple theorem_size3_odd(int n);

// Size of the congruence-triple set over Z/2nZ, odd n >= 3.
FormulaResult lemma_Tn(int n);

// Per-type counts of 3-subsets for odd n >= 3; t is one of (3,0), (2,1), (1,2), (0,3).
FormulaTriple lemma_type_counts(int n, TypeDescriptor t);

struct BoundaryBounds {
  FormulaResult mstd;
  FormulaResult mdts;
  FormulaResult balanced;
};

// Lower bounds on MSTD/MDTS/balanced 2n-subsets of Dic_4n, n >= 6.
BoundaryBounds boundary_bounds(int n);

// Divisibility and sign observations for S(m), D(m), B(m) over Dic_4n.
struct ProbeRow {
  int n = 0;
  int m = 0;
  CountTriple counts;
  bool all_even = false;
  bool mstd_div4 = false;
  bool mstd_div4n = false;
  int mstd_minus_mdts_sign = 0;
};

// Every (n, m) must give an enumerable Dic_4n (order <= 64) with 1 <= m <= 4n.
std::vector<ProbeRow> probe_section6(const std::vector<int>& ns, const std::vector<int>& ms, int workers = 1);

// Finite-n ratios of the closed forms; these are observations, not limits.
struct RatioProbe {
  int n = 0;
  double size2_mstd_over_balanced = 0;
  double size3_mstd_over_mdts = 0;  // odd n only, else 0
  double size3_mstd_over_balanced = 0;
};
RatioProbe ratio_probe(int n);

}  // namespace sumdiff
