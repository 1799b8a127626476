#include "sumdiff/formulas.hpp"

#include <stdexcept>

namespace sumdiff {

namespace {

void require_odd(int n, const char* what) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument(std::string(what) + " needs odd n >= 3");
}

// Exact division; the closed forms are integral on their domain.
BigInt exact_div(const BigInt& num, int den) {
  if (num % den != 0) throw std::logic_error("closed form is not integral");
  return num / den;
}

}  // namespace

bool FormulaTriple::matches(const CountTriple& c) const {
  return mstd == c.mstd && mdts == c.mdts && balanced == c.balanced;
}

FormulaTriple to_formula_triple(const CountTriple& c) {
  return {BigInt(c.mstd), BigInt(c.mdts), BigInt(c.balanced)};
}

BigInt big_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

FormulaTriple theorem_size2(int n) {
  if (n < 2) throw std::invalid_argument("size-2 closed form needs n >= 2");
  const BigInt N = n;
  if (n % 2 == 0) return {4 * N * (N - 2), 0, 2 * N * (2 * N + 3)};
  return {4 * N * (N - 1), 0, 2 * N * (2 * N + 1)};
}

FormulaTriple theorem_size3_odd(int n) {
  require_odd(n, "size-3 closed form");
  const BigInt N = n;
  FormulaTriple t;
  t.mstd = 4 * N * (N - 1) * (2 * N - 5);
  if (n % 3 == 0) {
    t.mdts = exact_div(2 * N * (2 * N * N + 3 * N - 3), 3);
    t.balanced = exact_div(2 * N * (2 * N * N + 27 * N - 25), 3);
  } else {
    t.mdts = exact_div(2 * N * (N - 1) * (2 * N + 5), 3);
    t.balanced = exact_div(2 * N * (2 * N * N + 27 * N - 23), 3);
  }
  return t;
}

FormulaResult lemma_Tn(int n) {
  require_odd(n, "congruence triple count");
  const BigInt N = n;
  if (n % 3 == 0) return {exact_div(2 * N * (3 * N - 5), 3), BoundKind::Exact, "2n(3n-5)/3 for 3 | n"};
  return {2 * N * (N - 1), BoundKind::Exact, "2n(n-1) for 3 !| n"};
}

FormulaTriple lemma_type_counts(int n, TypeDescriptor t) {
  require_odd(n, "size-3 type counts");
  const BigInt N = n;
  if (t == TypeDescriptor{3, 0}) {
    // Three rotations: congruence triples are balanced, the rest difference-dominant.
    if (n % 3 == 0) return {0, exact_div(4 * N * (N * N - 3 * N + 3), 3), exact_div(2 * N * (3 * N - 5), 3)};
    return {0, exact_div(4 * N * (N - 1) * (N - 2), 3), 2 * N * (N - 1)};
  }
  if (t == TypeDescriptor{2, 1}) return {2 * N * (N - 1) * (2 * N - 5), 2 * N * (N - 1), 2 * N * (5 * N - 4)};
  if (t == TypeDescriptor{1, 2}) return {2 * N * (N - 1) * (2 * N - 5), 4 * N * (N - 1), 2 * N * (4 * N - 3)};
  if (t == TypeDescriptor{0, 3}) return {0, 0, exact_div(2 * N * (N - 1) * (2 * N - 1), 3)};
  throw std::invalid_argument("not a 3-element type descriptor");
}

BoundaryBounds boundary_bounds(int n) {
  if (n < 6) throw std::invalid_argument("boundary bounds need n >= 6");
  const BigInt N = n;
  const BigInt pow2 = BigInt(1) << n;
  BoundaryBounds b;
  b.mstd = {(N + 1) * (7 * (BigInt(1) << (n - 3)) - 4), BoundKind::LowerBound, "(n+1)(7*2^(n-3)-4)"};
  if (n % 2 == 0) {
    b.mdts = {2 * (N + 1), BoundKind::LowerBound, "2(n+1), n even"};
    BigInt sum = 0;
    for (int i = 3; i <= n + 3; i += 2) sum += big_binomial(2 * n - i, n - 3);
    b.balanced = {(N + 1) * sum, BoundKind::LowerBound, "(n+1) sum_{odd i=3..n+3} C(2n-i,n-3), n even"};
  } else {
    b.mdts = {0, BoundKind::LowerBound, "0, n odd"};
    b.balanced = {big_binomial(2 * n, n) * (N + 1) - pow2 * (N + 1), BoundKind::LowerBound,
                  "C(2n,n)(n+1) - 2^n(n+1), n odd"};
  }
  return b;
}

std::vector<ProbeRow> probe_section6(const std::vector<int>& ns, const std::vector<int>& ms, int workers) {
  std::vector<ProbeRow> rows;
  for (int n : ns) {
    const GroupTable g = build_group({Family::Dicyclic, n}, kMaxExhaustiveOrder);
    for (int m : ms) {
      ProbeRow row;
      row.n = n;
      row.m = m;
      row.counts = parallel_count(g, m, workers);
      const auto& c = row.counts;
      row.all_even = c.mstd % 2 == 0 && c.mdts % 2 == 0 && c.balanced % 2 == 0;
      row.mstd_div4 = c.mstd % 4 == 0;
      row.mstd_div4n = c.mstd % (4 * static_cast<std::uint64_t>(n)) == 0;
      row.mstd_minus_mdts_sign = c.mstd > c.mdts ? 1 : (c.mstd < c.mdts ? -1 : 0);
      rows.push_back(row);
    }
  }
  return rows;
}

RatioProbe ratio_probe(int n) {
  RatioProbe p;
  p.n = n;
  const auto s2 = theorem_size2(n);
  p.size2_mstd_over_balanced = s2.mstd.convert_to<double>() / s2.balanced.convert_to<double>();
  if (n >= 3 && n % 2 == 1) {
    const auto s3 = theorem_size3_odd(n);
    p.size3_mstd_over_mdts = s3.mstd.convert_to<double>() / s3.mdts.convert_to<double>();
    p.size3_mstd_over_balanced = s3.mstd.convert_to<double>() / s3.balanced.convert_to<double>();
  }
  return p;
}

}  // namespace sumdiff
