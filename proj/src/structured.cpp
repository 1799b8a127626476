#include "sumdiff/structured.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "combinations.hpp"

namespace sumdiff {

namespace {

using detail::for_each_combination;

ResidueMask full_residues(int n) {
  const int m = 2 * n;
  return m == 64 ? ~ResidueMask{0} : (ResidueMask{1} << m) - 1;
}

void require_range(int n) {
  if (n < kMinStructuredN || n > kMaxStructuredN) {
    throw std::invalid_argument("structured sets need 6 <= n <= 32, got n = " + std::to_string(n));
  }
}

ResidueMask random_n_subset(int n, std::mt19937_64& rng) {
  std::vector<int> pool(2 * n);
  std::iota(pool.begin(), pool.end(), 0);
  std::shuffle(pool.begin(), pool.end(), rng);
  ResidueMask s = 0;
  for (int i = 0; i < n; ++i) s |= ResidueMask{1} << pool[i];
  return s;
}

}  // namespace

void validate(const StructuredSpec& spec) {
  require_range(spec.n);
  if (spec.r < 0 || spec.r > spec.n) throw std::invalid_argument("structured r must lie in [0, n]");
  if ((spec.residues & ~full_residues(spec.n)) != 0) {
    throw std::invalid_argument("structured residue set has entries outside Z/2nZ");
  }
  if (std::popcount(spec.residues) != spec.n) {
    throw std::invalid_argument("structured residue set must have exactly n elements");
  }
}

ResidueMask residue_mask(int n, std::initializer_list<int> residues) {
  ResidueMask s = 0;
  for (int x : residues) {
    const int m = 2 * n;
    s |= ResidueMask{1} << (((x % m) + m) % m);
  }
  return s;
}

ResidueMask rotate_residues(int n, ResidueMask s, int k) {
  const int m = 2 * n;
  k = ((k % m) + m) % m;
  if (k == 0) return s;
  return ((s << k) | (s >> (m - k))) & full_residues(n);
}

ResidueMask residue_differences(int n, ResidueMask s) {
  ResidueMask d = 0;
  for (ResidueMask bits = s; bits != 0; bits &= bits - 1) {
    d |= rotate_residues(n, s, -std::countr_zero(bits));
  }
  return d;
}

ResidueMask cover_residues(int n, int r, ResidueMask s) {
  ResidueMask run = 0;
  for (int t = 0; t < n; ++t) run |= rotate_residues(n, s, t);
  return rotate_residues(n, run, r);
}

SubsetMask realize(const StructuredSpec& spec) {
  validate(spec);
  const int m = 2 * spec.n;
  SubsetMask a;
  for (int t = 0; t < spec.n; ++t) a.set(static_cast<Element>((spec.r + t) % m));
  for (ResidueMask bits = spec.residues; bits != 0; bits &= bits - 1) {
    a.set(static_cast<Element>(m + std::countr_zero(bits)));
  }
  return a;
}

ConditionReport condition_report(const StructuredSpec& spec) {
  validate(spec);
  const int n = spec.n;
  const ResidueMask diff = residue_differences(n, spec.residues);
  ConditionReport rep;
  rep.has_n_in_SmS = (diff >> n) & 1U;
  rep.has_shift_in_SmS = (diff >> ((2 * spec.r + n - 1) % (2 * n))) & 1U;
  rep.covers_all = cover_residues(n, spec.r, spec.residues) == full_residues(n);
  return rep;
}

StructuredAnalyzer::StructuredAnalyzer(int n) : n_(n) {
  require_range(n);
  group_ = build_group({Family::Dicyclic, n}, kMaxOrder);
}

Classification StructuredAnalyzer::classify(const StructuredSpec& spec) const {
  if (spec.n != n_) throw std::invalid_argument("structured spec belongs to a different n");
  return sumdiff::classify(group_, realize(spec));
}

Classification classify_structured(const StructuredSpec& spec) {
  validate(spec);
  return StructuredAnalyzer(spec.n).classify(spec);
}

std::vector<ResidueMask> pair_transversals(int n) {
  if (n < 1 || n > 20) throw std::invalid_argument("pair transversals limited to 1 <= n <= 20");
  std::vector<ResidueMask> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << n); ++choice) {
    ResidueMask s = 0;
    for (int i = 0; i < n; ++i) s |= ResidueMask{1} << (i + (((choice >> i) & 1U) ? n : 0));
    out.push_back(s);
  }
  return out;
}

bool StructuredSummary::all_pass() const {
  return mstd_bound_ok && mdts_ok && balanced_bound_ok && claim1_violations == 0 && claim2_violations == 0 &&
         cover_violations == 0 && counts.total() == specs;
}

StructuredSummary enumerate_structured(int n, int workers) {
  if (n < kMinStructuredN || n > kMaxEnumeratedStructuredN) {
    throw std::invalid_argument("structured enumeration needs 6 <= n <= 10");
  }
  const StructuredAnalyzer analyzer(n);
  const int strata = n + 1;
  workers = std::clamp(workers, 1, strata);

  std::vector<StructuredSummary> partial(workers);
  auto run = [&](int w) {
    auto& out = partial[w];
    for (int r = w; r <= n; r += workers) {
      for_each_combination(2 * n, n, [&](std::uint64_t s) {
        const StructuredSpec spec{n, r, s};
        const auto cond = condition_report(spec);
        const auto cls = analyzer.classify(spec);
        ++out.specs;
        out.counts.add(cls);
        if (cond.has_shift_in_SmS && !cond.has_n_in_SmS && cond.covers_all) {
          ++out.claim1_premises;
          if (cls != Classification::MSTD) ++out.claim1_violations;
        }
        if (!cond.has_shift_in_SmS && cond.has_n_in_SmS) {
          ++out.claim2_premises;
          if (cls != Classification::MDTS) ++out.claim2_violations;
        }
        if (cond.has_n_in_SmS && !cond.covers_all) ++out.cover_violations;
      });
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }

  StructuredSummary sum;
  sum.n = n;
  for (const auto& p : partial) {
    sum.specs += p.specs;
    sum.counts += p.counts;
    sum.claim1_premises += p.claim1_premises;
    sum.claim1_violations += p.claim1_violations;
    sum.claim2_premises += p.claim2_premises;
    sum.claim2_violations += p.claim2_violations;
    sum.cover_violations += p.cover_violations;
  }
  sum.bounds = boundary_bounds(n);
  sum.mstd_bound_ok = BigInt(sum.counts.mstd) >= sum.bounds.mstd.value;
  sum.mdts_ok = n % 2 == 0 ? BigInt(sum.counts.mdts) >= sum.bounds.mdts.value : sum.counts.mdts == 0;
  sum.balanced_bound_ok = BigInt(sum.counts.balanced) >= sum.bounds.balanced.value;
  return sum;
}

LemmaCheck verify_lemma_2_2(int n) {
  if (n < 6 || n % 2 != 0 || n > 20) throw std::invalid_argument("lemma check needs even 6 <= n <= 20");
  LemmaCheck out;
  for (ResidueMask s : pair_transversals(n)) {
    const ResidueMask diff = residue_differences(n, s);
    for (int r = 0; r <= n; ++r) {
      ++out.cases;
      if (!((diff >> ((2 * r + n - 1) % (2 * n))) & 1U)) ++out.violations;
    }
  }
  return out;
}

namespace {

void check_shift(int n, ResidueMask s, LemmaCheck& out) {
  const ResidueMask diff = residue_differences(n, s);
  for (int r = 0; r <= n; ++r) {
    ++out.cases;
    if (!((diff >> ((2 * r + n - 1) % (2 * n))) & 1U)) ++out.violations;
  }
}

void check_cover(int n, ResidueMask s, LemmaCheck& out) {
  if (!((residue_differences(n, s) >> n) & 1U)) return;
  for (int r = 0; r < 2 * n; ++r) {
    ++out.cases;
    if (cover_residues(n, r, s) != full_residues(n)) ++out.violations;
  }
}

}  // namespace

LemmaCheck verify_lemma_2_3_exhaustive(int n) {
  if (n < 6 || n % 2 == 0 || n > 13) throw std::invalid_argument("exhaustive check needs odd 7 <= n <= 13");
  LemmaCheck out;
  for_each_combination(2 * n, n, [&](std::uint64_t s) { check_shift(n, s, out); });
  return out;
}

LemmaCheck verify_lemma_2_3_sampled(int n, std::uint64_t samples, std::uint64_t seed) {
  if (n < 6 || n % 2 == 0 || n > kMaxStructuredN) throw std::invalid_argument("sampled check needs odd n >= 7");
  std::mt19937_64 rng(seed);
  LemmaCheck out;
  for (std::uint64_t i = 0; i < samples; ++i) check_shift(n, random_n_subset(n, rng), out);
  return out;
}

LemmaCheck verify_lemma_2_4_exhaustive(int n) {
  if (n < 6 || n > 12) throw std::invalid_argument("exhaustive cover check needs 6 <= n <= 12");
  LemmaCheck out;
  for_each_combination(2 * n, n, [&](std::uint64_t s) { check_cover(n, s, out); });
  return out;
}

LemmaCheck verify_lemma_2_4_sampled(int n, std::uint64_t samples, std::uint64_t seed) {
  require_range(n);
  std::mt19937_64 rng(seed);
  LemmaCheck out;
  for (std::uint64_t i = 0; i < samples; ++i) check_cover(n, random_n_subset(n, rng), out);
  return out;
}

std::uint64_t verify_lemma_2_5(int n, int r) {
  if (n < 6 || n > 20) throw std::invalid_argument("cover count needs 6 <= n <= 20");
  if (r < 0 || r > n) throw std::invalid_argument("r must lie in [0, n]");
  std::uint64_t count = 0;
  for (ResidueMask s : pair_transversals(n)) {
    if (cover_residues(n, r, s) == full_residues(n)) ++count;
  }
  return count;
}

std::uint64_t lemma_2_5_bound(int n) {
  if (n < 3) throw std::invalid_argument("bound needs n >= 3");
  return 7 * (std::uint64_t{1} << (n - 3)) - 4;
}

}  // namespace sumdiff
