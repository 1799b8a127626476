// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero if any
// criterion fails. Pass --stretch to run the full size-12 enumeration of Dic_24.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sumdiff/commands.hpp"
#include "sumdiff/enumerator.hpp"
#include "sumdiff/formulas.hpp"
#include "sumdiff/setops.hpp"
#include "sumdiff/structured.hpp"

using namespace sumdiff;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

int failures = 0;

void verdict(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] %2d %-28s %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt_time(double s, double limit) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s (limit %.0f s)", s, limit);
  return buf;
}

std::string stable_json(RunReport r) {
  r.elapsed_ms = 0;
  return to_json(r);
}

std::uint64_t compared_cells(const RunReport& r) {
  for (const auto& note : r.notes)
    if (note.rfind("compared ", 0) == 0) return std::stoull(note.substr(9));
  return 0;
}

std::vector<RunReport> table_reports(int workers) {
  TableOptions dic;
  dic.family = Family::Dicyclic;
  dic.ns = parse_int_range("2..5");
  dic.sizes = parse_int_range("2..10");
  dic.expect_paper = true;
  dic.workers = workers;
  TableOptions dih = dic;
  dih.family = Family::Dihedral;
  dih.ns = parse_int_range("4..10:even");
  return {run_table(dic), run_table(dih)};
}

void criterion_tables(std::string& json_w1) {
  auto t = Clock::now();
  const auto single = table_reports(1);
  const double t1 = seconds_since(t);
  t = Clock::now();
  const auto eight = table_reports(8);
  const double t8 = seconds_since(t);
  std::uint64_t cells = 0;
  bool ok = true;
  for (const auto& r : single) {
    cells += compared_cells(r);
    ok = ok && r.status == RunStatus::AllPass;
  }
  for (const auto& r : eight) ok = ok && r.status == RunStatus::AllPass;
  ok = ok && cells == 144 && t1 < 10.0 && t8 < 3.0;
  json_w1 = stable_json(single[0]) + stable_json(single[1]);
  verdict(1, "table reproduction", ok,
          std::to_string(cells) + "/144 cells; 1 worker " + fmt_time(t1, 10) + ", 8 workers " + fmt_time(t8, 3));
}

void criterion_size2() {
  const auto t = Clock::now();
  int matched = 0;
  for (int n = 2; n <= 15; ++n)
    if (theorem_size2(n).matches(count_by_size(build_group({Family::Dicyclic, n}), 2))) ++matched;
  const double s = seconds_since(t);
  verdict(2, "size-2 closed form", matched == 14 && s < 1.0, std::to_string(matched) + "/14 n; " + fmt_time(s, 1));
}

void criterion_size3() {
  const auto t = Clock::now();
  int matched = 0, div3 = 0, nondiv3 = 0;
  for (int n = 3; n <= 15; n += 2) {
    if (theorem_size3_odd(n).matches(count_by_size(build_group({Family::Dicyclic, n}), 3))) {
      ++matched;
      ++(n % 3 == 0 ? div3 : nondiv3);
    }
  }
  const double s = seconds_since(t);
  verdict(3, "size-3 closed form, odd n", matched == 7 && div3 > 0 && nondiv3 > 0 && s < 5.0,
          std::to_string(matched) + "/7 n (" + std::to_string(div3) + " with 3|n); " + fmt_time(s, 5));
}

void criterion_tn() {
  const auto t = Clock::now();
  int matched = 0;
  for (int n = 3; n <= 15; n += 2)
    if (lemma_Tn(n).value == triple_congruence_count(n)) ++matched;
  const double s = seconds_since(t);
  verdict(4, "congruence triples", matched == 7 && s < 1.0, std::to_string(matched) + "/7 n; " + fmt_time(s, 1));
}

void criterion_types() {
  const auto t = Clock::now();
  int matched = 0, sums = 0;
  for (int n = 3; n <= 11; n += 2) {
    const auto g = build_group({Family::Dicyclic, n});
    FormulaTriple total;
    for (const auto type : type_descriptors(3)) {
      const auto f = lemma_type_counts(n, type);
      if (f.matches(count_by_type(g, 3, type))) ++matched;
      total.mstd += f.mstd;
      total.mdts += f.mdts;
      total.balanced += f.balanced;
    }
    if (total == theorem_size3_odd(n)) ++sums;
  }
  const double s = seconds_since(t);
  verdict(5, "per-type size-3 forms", matched == 20 && sums == 5 && s < 5.0,
          std::to_string(matched) + "/20 type triples, " + std::to_string(sums) + "/5 sums; " + fmt_time(s, 5));
}

void criterion_sign() {
  bool ok = true;
  for (int n = 3; n <= 15; n += 2) {
    const auto c = count_by_size(build_group({Family::Dicyclic, n}), 3);
    ok = ok && (n == 3 ? c.mstd < c.mdts : c.mstd > c.mdts);
  }
  verdict(6, "S(3) vs D(3) sign", ok, "brute force over odd n in 3..15");
}

void criterion_lemmas() {
  bool ok = true;
  std::string detail;
  for (int n : {6, 8}) {
    const auto l = verify_lemma_2_2(n);
    const bool full = l.cases == static_cast<std::uint64_t>(n + 1) << n;
    ok = ok && l.holds() && full;
    detail += "pairs n=" + std::to_string(n) + " " + std::to_string(l.cases) + " cases; ";
  }
  const auto e7 = verify_lemma_2_3_exhaustive(7);
  const auto s9 = verify_lemma_2_3_sampled(9, 100000, 20250109);
  ok = ok && e7.holds() && s9.holds() && s9.cases >= 100000;
  detail += "shift n=7 " + std::to_string(e7.cases) + ", n=9 sampled " + std::to_string(s9.cases) + "; ";

  std::uint64_t cover_cases = 0;
  for (int n = 6; n <= 8; ++n) {
    const auto l = verify_lemma_2_4_exhaustive(n);
    ok = ok && l.holds();
    cover_cases += l.cases;
  }
  const auto c9 = verify_lemma_2_4_sampled(9, 100000, 20250209);
  ok = ok && c9.holds();
  for (int n = 6; n <= 9; ++n) ok = ok && enumerate_structured(n).cover_violations == 0;
  detail += "cover " + std::to_string(cover_cases + c9.cases) + " cases; ";

  int rs = 0;
  for (int n = 6; n <= 9; ++n)
    for (int r = 0; r <= n; ++r, ++rs) ok = ok && verify_lemma_2_5(n, r) >= lemma_2_5_bound(n);
  detail += "transversal cover bound " + std::to_string(rs) + " (n,r)";
  verdict(7, "residue lemmas", ok, detail);
}

StructuredSummary structured6;

void criterion_structured() {
  bool ok = true;
  std::string detail;
  for (int n : {6, 7}) {
    const auto t = Clock::now();
    const auto s = enumerate_structured(n);
    const double secs = seconds_since(t);
    if (n == 6) structured6 = s;
    const std::uint64_t specs = n == 6 ? 6468 : 27456;
    ok = ok && s.all_pass() && s.specs == specs && secs < 1.0;
    ok = ok && s.bounds.mstd.value == (n == 6 ? 364 : 864) && s.bounds.mdts.value == (n == 6 ? 14 : 0) &&
         s.bounds.balanced.value == (n == 6 ? 910 : 26432);
    if (n == 7) ok = ok && s.counts.mdts == 0;
    detail += "n=" + std::to_string(n) + " " + std::to_string(s.counts.mstd) + "/" + std::to_string(s.counts.mdts) +
              "/" + std::to_string(s.counts.balanced) + " in " + fmt_time(secs, 1) + "; ";
  }
  verdict(8, "structured bounds", ok, detail);
}

void criterion_boundary(bool stretch, std::string& json_w8) {
  if (!stretch) {
    std::printf("[SKIP]  9 %-28s pass --stretch to run\n", "boundary exhaustive");
    return;
  }
  const auto t = Clock::now();
  const auto r = run_boundary({6, BoundaryMode::Exhaustive, 8});
  const double s = seconds_since(t);
  json_w8 = stable_json(r);
  std::string detail;
  for (const auto& row : r.rows) detail += row.get("kind") + " " + row.get("global") + ">=" + row.get("structured") + "; ";
  verdict(9, "boundary exhaustive Dic_24", r.status == RunStatus::AllPass && s < 60.0, detail + fmt_time(s, 60));
}

void criterion_properties() {
  std::mt19937_64 rng(20250110);
  std::vector<GroupSpec> specs;
  for (int n = 2; n <= 6; ++n) specs.push_back({Family::Dicyclic, n});
  for (int n = 4; n <= 10; ++n) specs.push_back({Family::Dihedral, n});
  std::uint64_t failures_seen = 0, trials = 0;
  for (const auto& spec : specs) {
    const auto g = build_group(spec);
    const int m = g.order();
    for (int x = 0; x < m; ++x) {
      std::vector<int> rs(m), cs(m);
      for (int y = 0; y < m; ++y) {
        ++rs[g.mul(x, y)];
        ++cs[g.mul(y, x)];
        for (int z = 0; z < m; ++z)
          if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z))) ++failures_seen;
      }
      for (int z = 0; z < m; ++z)
        if (rs[z] != 1 || cs[z] != 1) ++failures_seen;
    }
    std::uniform_int_distribution<int> size_dist(1, m);
    for (int i = 0; i < 1000; ++i, ++trials) {
      std::vector<Element> pool(m);
      for (int e = 0; e < m; ++e) pool[e] = e;
      std::shuffle(pool.begin(), pool.end(), rng);
      SubsetMask a;
      const int k = size_dist(rng);
      for (int e = 0; e < k; ++e) a.set(pool[e]);
      const auto d = diffset(g, a);
      if (!d.test(g.identity())) ++failures_seen;
      d.for_each([&](Element x) {
        if (!d.test(g.inv(x))) ++failures_seen;
      });
      const Element h = static_cast<Element>(rng() % m);
      SubsetMask conj;
      a.for_each([&](Element x) { conj.set(g.mul(g.mul(h, x), g.inv(h))); });
      if (classify(g, conj) != classify(g, a)) ++failures_seen;
      if (2 * k > m) {
        const auto sz = measure(g, a);
        if (sz.sums != m || sz.differences != m) ++failures_seen;
      }
    }
  }
  verdict(10, "property suites", failures_seen == 0,
          std::to_string(specs.size()) + " groups, " + std::to_string(trials) + " random subsets, " +
              std::to_string(failures_seen) + " violations");
}

void criterion_determinism(const std::string& tables_w1, bool stretch, const std::string& boundary_w8) {
  bool ok = true;
  for (int w : {2, 8}) {
    const auto r = table_reports(w);
    ok = ok && stable_json(r[0]) + stable_json(r[1]) == tables_w1;
  }
  std::string detail = "tables identical for workers 1,2,8";
  if (stretch) {
    for (int w : {1, 2}) ok = ok && stable_json(run_boundary({6, BoundaryMode::Exhaustive, w})) == boundary_w8;
    detail += "; boundary identical for workers 1,2,8";
  } else {
    detail += "; boundary not run (needs --stretch)";
  }
  verdict(11, "determinism", ok, detail);
}

void ratio_probe_report() {
  for (int n : {5, 15, 29, 61}) {
    const auto p = ratio_probe(n);
    std::printf("[PROBE]    n=%-3d S(2)/B(2)=%.4f  S(3)/D(3)=%.4f  (finite-n observation, not a limit)\n", n,
                p.size2_mstd_over_balanced, p.size3_mstd_over_mdts);
  }
}

}  // namespace

int main(int argc, char** argv) {
  bool stretch = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--stretch") == 0) stretch = true;

  std::string tables_w1, boundary_w8;
  criterion_tables(tables_w1);
  criterion_size2();
  criterion_size3();
  criterion_tn();
  criterion_types();
  criterion_sign();
  criterion_lemmas();
  criterion_structured();
  criterion_boundary(stretch, boundary_w8);
  criterion_properties();
  criterion_determinism(tables_w1, stretch, boundary_w8);
  ratio_probe_report();
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
