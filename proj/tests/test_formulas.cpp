#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "sumdiff/enumerator.hpp"
#include "sumdiff/formulas.hpp"

using namespace sumdiff;

namespace {

FormulaTriple ft(long long s, long long d, long long b) { return {BigInt(s), BigInt(d), BigInt(b)}; }

}  // namespace

TEST_CASE("size-2 closed form examples") {
  CHECK(theorem_size2(4) == ft(32, 0, 88));
  CHECK(theorem_size2(3) == ft(24, 0, 42));
  CHECK(theorem_size2(2) == ft(0, 0, 28));
  CHECK_THROWS_AS(theorem_size2(1), std::invalid_argument);
}

TEST_CASE("size-3 closed form examples, both divisibility branches") {
  CHECK(theorem_size3_odd(3) == ft(24, 48, 148));
  CHECK(theorem_size3_odd(5) == ft(400, 200, 540));
  CHECK(theorem_size3_odd(9) == ft(3744, 1116, 2280));
  CHECK_THROWS_AS(theorem_size3_odd(4), std::invalid_argument);
  CHECK_THROWS_AS(theorem_size3_odd(1), std::invalid_argument);
}

TEST_CASE("congruence triple count closed form") {
  CHECK(lemma_Tn(3).value == 8);
  CHECK(lemma_Tn(5).value == 40);
  CHECK(lemma_Tn(15).value == 400);
  CHECK(lemma_Tn(7).kind == BoundKind::Exact);
  CHECK_THROWS_AS(lemma_Tn(6), std::invalid_argument);
}

TEST_CASE("per-type closed forms") {
  CHECK(lemma_type_counts(3, {1, 2}) == ft(12, 24, 54));
  CHECK(lemma_type_counts(3, {3, 0}) == ft(0, 12, 8));
  CHECK(lemma_type_counts(5, {0, 3}) == ft(0, 0, 120));
  CHECK_THROWS_AS(lemma_type_counts(5, {2, 2}), std::invalid_argument);
  for (int n = 3; n <= 31; n += 2) {
    FormulaTriple sum;
    for (const auto t : type_descriptors(3)) {
      const auto f = lemma_type_counts(n, t);
      sum.mstd += f.mstd;
      sum.mdts += f.mdts;
      sum.balanced += f.balanced;
    }
    CHECK(sum == theorem_size3_odd(n));
  }
}

TEST_CASE("closed forms sum to the binomial") {
  for (int n = 2; n <= 60; ++n) CHECK(theorem_size2(n).total() == big_binomial(4 * n, 2));
  for (int n = 3; n <= 61; n += 2) CHECK(theorem_size3_odd(n).total() == big_binomial(4 * n, 3));
  CHECK(big_binomial(200, 100) > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("MSTD beats MDTS among 3-subsets once n >= 5") {
  CHECK(theorem_size3_odd(3).mstd < theorem_size3_odd(3).mdts);
  for (int n = 5; n <= 201; n += 2) CHECK(theorem_size3_odd(n).mstd > theorem_size3_odd(n).mdts);
}

TEST_CASE("boundary lower bounds") {
  const auto b6 = boundary_bounds(6);
  CHECK(b6.mstd.value == 364);
  CHECK(b6.mdts.value == 14);
  CHECK(b6.balanced.value == 910);
  CHECK(b6.mstd.kind == BoundKind::LowerBound);
  const auto b7 = boundary_bounds(7);
  CHECK(b7.mstd.value == 864);
  CHECK(b7.mdts.value == 0);
  CHECK(b7.balanced.value == 26432);
  CHECK_THROWS_AS(boundary_bounds(5), std::invalid_argument);
}

TEST_CASE("formula triples compare against counts") {
  const FormulaTriple f = ft(1, 2, 3);
  CHECK(f.matches(CountTriple{1, 2, 3}));
  CHECK_FALSE(f.matches(CountTriple{1, 2, 4}));
  CHECK(to_formula_triple(CountTriple{5, 6, 7}) == ft(5, 6, 7));
}

TEST_CASE("probe observations") {
  const auto rows = probe_section6({2, 3, 5}, {2, 3}, 2);
  REQUIRE(rows.size() == 6);
  const auto& n3m2 = rows[2];
  CHECK(n3m2.n == 3);
  CHECK(n3m2.m == 2);
  CHECK(n3m2.counts.mstd == 24);
  CHECK(n3m2.mstd_div4);
  CHECK(n3m2.mstd_div4n);
  CHECK(n3m2.all_even);
  const auto& n2m3 = rows[1];
  CHECK(n2m3.counts.mstd == 0);
  CHECK(n2m3.counts.mdts == 24);
  CHECK(n2m3.mstd_minus_mdts_sign == -1);
  CHECK(rows[5].mstd_minus_mdts_sign == 1);
  CHECK_THROWS(probe_section6({17}, {2}));
}

TEST_CASE("ratio probe is finite and odd-only for size 3") {
  const auto r15 = ratio_probe(15);
  CHECK(r15.size3_mstd_over_mdts == doctest::Approx(21000.0 / 4920.0));
  CHECK(ratio_probe(8).size3_mstd_over_mdts == 0.0);
  CHECK(ratio_probe(8).size2_mstd_over_balanced == doctest::Approx(8.0 * 4 * 6 / (16.0 * 19)));
}
