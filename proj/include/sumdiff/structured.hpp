#pragma once

#include <cstdint>
#include <vector>

#include "sumdiff/enumerator.hpp"
#include "sumdiff/formulas.hpp"
#include "sumdiff/group.hpp"
#include "sumdiff/setops.hpp"

namespace sumdiff {

// Bit i set <=> residue i in Z/2nZ is present. Needs 2n <= 64.
using ResidueMask = std::uint64_t;

// A = {a^r, ..., a^(r+n-1)} U {a^s b : s in S} inside Dic_4n, |S| = n, 0 <= r <= n.
struct StructuredSpec {
  int n = 6;
  int r = 0;
  ResidueMask residues = 0;
};

inline constexpr int kMinStructuredN = 6;
inline constexpr int kMaxStructuredN = 32;
inline constexpr int kMaxEnumeratedStructuredN = 10;

// Throws std::invalid_argument unless 6 <= n <= 32, 0 <= r <= n, |S| = n and S inside Z/2nZ.
void validate(const StructuredSpec& spec);

ResidueMask residue_mask(int n, std::initializer_list<int> residues);
// Cyclic shift s -> s + k inside Z/2nZ.
ResidueMask rotate_residues(int n, ResidueMask s, int k);
// S - S as a residue mask.
ResidueMask residue_differences(int n, ResidueMask s);
// {r + t + s : 0 <= t < n, s in S}.
ResidueMask cover_residues(int n, int r, ResidueMask s);

struct ConditionReport {
  bool has_n_in_SmS = false;      // n in S - S
  bool has_shift_in_SmS = false;  // 2r + n - 1 (mod 2n) in S - S
  bool covers_all = false;        // cover_residues(...) is all of Z/2nZ
  bool operator==(const ConditionReport&) const = default;
};

SubsetMask realize(const StructuredSpec& spec);
ConditionReport condition_report(const StructuredSpec& spec);

// Holds the Dic_4n table so repeated classifications share it.
class StructuredAnalyzer {
 public:
  explicit StructuredAnalyzer(int n);
  int n() const { return n_; }
  const GroupTable& group() const { return group_; }
  // Ground truth from the sum/difference set sizes of the realized subset.
  Classification classify(const StructuredSpec& spec) const;

 private:
  int n_;
  GroupTable group_;
};

Classification classify_structured(const StructuredSpec& spec);

// The 2^n size-n subsets of Z/2nZ that avoid difference n (one residue from each pair {i, i+n}).
std::vector<ResidueMask> pair_transversals(int n);

struct StructuredSummary {
  int n = 0;
  std::uint64_t specs = 0;
  CountTriple counts;
  BoundaryBounds bounds;
  bool mstd_bound_ok = false;
  bool mdts_ok = false;  // >= 2(n+1) for even n, == 0 for odd n
  bool balanced_bound_ok = false;
  // Implication checks over every enumerated spec.
  std::uint64_t claim1_premises = 0;  // shift && !has_n && covers
  std::uint64_t claim1_violations = 0;
  std::uint64_t claim2_premises = 0;  // !shift && has_n
  std::uint64_t claim2_violations = 0;
  std::uint64_t cover_violations = 0;  // has_n && !covers
  bool all_pass() const;
};

// Every (r, S) for 6 <= n <= 10.
StructuredSummary enumerate_structured(int n, int workers = 1);

struct LemmaCheck {
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;
  bool holds() const { return cases > 0 && violations == 0; }
};

// For even n >= 6: every r in [0, n] and every pair transversal S has 2r+n-1 in S-S.
LemmaCheck verify_lemma_2_2(int n);
// For odd n >= 6: every size-n S and every r has 2r+n-1 in S-S.
LemmaCheck verify_lemma_2_3_exhaustive(int n);
LemmaCheck verify_lemma_2_3_sampled(int n, std::uint64_t samples, std::uint64_t seed);
// n in S-S implies full cover, over every size-n S with n in S-S and every r.
LemmaCheck verify_lemma_2_4_exhaustive(int n);
LemmaCheck verify_lemma_2_4_sampled(int n, std::uint64_t samples, std::uint64_t seed);
// Number of pair transversals S whose cover is all of Z/2nZ for this r.
std::uint64_t verify_lemma_2_5(int n, int r);
// 7 * 2^(n-3) - 4
std::uint64_t lemma_2_5_bound(int n);

}  // namespace sumdiff
