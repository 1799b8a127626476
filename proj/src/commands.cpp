#include "sumdiff/commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <map>

#include "sumdiff/enumerator.hpp"
#include "sumdiff/formulas.hpp"
#include "sumdiff/published_tables.hpp"
#include "sumdiff/setops.hpp"
#include "sumdiff/structured.hpp"

namespace sumdiff {

namespace {

using Clock = std::chrono::steady_clock;

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(const BigInt& v) { return v.str(); }
std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::int64_t elapsed_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

int parse_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError("expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

void require_nonempty(const std::vector<int>& v, const char* what) {
  if (v.empty()) throw UsageError(std::string(what) + " range is empty");
}

void require_odd(int n, int lo, int hi, std::string_view what) {
  if (n < lo || n > hi || n % 2 == 0) {
    throw UsageError(std::string(what) + " needs odd n in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                     "], got " + std::to_string(n));
  }
}

void require_in(int n, int lo, int hi, std::string_view what) {
  if (n < lo || n > hi) {
    throw UsageError(std::string(what) + " needs n in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                     "], got " + std::to_string(n));
  }
}

void add_triple(ReportRow& row, std::string_view prefix, const FormulaTriple& t) {
  row.add(std::string(prefix) + "mstd", str(t.mstd));
  row.add(std::string(prefix) + "mdts", str(t.mdts));
  row.add(std::string(prefix) + "balanced", str(t.balanced));
}

void add_triple(ReportRow& row, std::string_view prefix, const CountTriple& t) {
  row.add(std::string(prefix) + "mstd", str(t.mstd));
  row.add(std::string(prefix) + "mdts", str(t.mdts));
  row.add(std::string(prefix) + "balanced", str(t.balanced));
}

void record(RunReport& report, bool ok) {
  if (!ok && report.status == RunStatus::AllPass) report.status = RunStatus::Mismatch;
}

GroupTable enumerable_group(GroupSpec spec) {
  if (spec.order() < 1) throw UsageError("group parameter must be positive");
  if (spec.order() > kMaxExhaustiveOrder) {
    throw UsageError(group_name(spec) + " is too large for exhaustive enumeration (order > 64)");
  }
  return build_group(spec, kMaxExhaustiveOrder);
}

}  // namespace

std::vector<int> parse_int_range(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view part = text.substr(pos, comma - pos);
    pos = comma + 1;
    if (part.empty()) throw UsageError("empty element in range '" + std::string(text) + "'");

    int parity = -1;  // -1 any, 0 even, 1 odd
    if (const auto colon = part.find(':'); colon != std::string_view::npos) {
      const auto filter = part.substr(colon + 1);
      if (filter == "odd") {
        parity = 1;
      } else if (filter == "even") {
        parity = 0;
      } else {
        throw UsageError("range filter must be :odd or :even, got '" + std::string(filter) + "'");
      }
      part = part.substr(0, colon);
    }
    int lo = 0;
    int hi = 0;
    if (const auto dots = part.find(".."); dots != std::string_view::npos) {
      lo = parse_int(part.substr(0, dots));
      hi = parse_int(part.substr(dots + 2));
    } else {
      lo = hi = parse_int(part);
    }
    if (lo > hi) throw UsageError("range '" + std::string(part) + "' is decreasing");
    for (int v = lo; v <= hi; ++v) {
      if (parity < 0 || ((v % 2 + 2) % 2) == parity) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RunReport run_table(const TableOptions& opt) {
  const auto start = Clock::now();
  require_nonempty(opt.ns, "n");
  require_nonempty(opt.sizes, "size");
  RunReport report;
  report.command = "table";
  report.parameters = {{"family", std::string(family_name(opt.family))},
                       {"n", join(opt.ns)},
                       {"sizes", join(opt.sizes)},
                       {"expect", opt.expect_paper ? "paper" : "none"}};

  std::uint64_t checked = 0;
  for (int n : opt.ns) {
    const GroupSpec spec{opt.family, n};
    const GroupTable g = enumerable_group(spec);
    for (int k : opt.sizes) {
      if (k < 1) throw UsageError("subset sizes must be positive");
      const CountTriple c = k <= g.order() ? parallel_count(g, k, opt.workers) : CountTriple{};
      ReportRow row;
      row.add("family", std::string(family_name(opt.family)))
          .add("n", std::to_string(n))
          .add("order", std::to_string(g.order()))
          .add("size", std::to_string(k))
          .add("mstd", str(c.mstd))
          .add("mdts", str(c.mdts))
          .add("balanced", str(c.balanced))
          .add("total", str(c.total()));
      report.rows.push_back(std::move(row));

      if (!opt.expect_paper) continue;
      const auto cell = find_published(opt.family, n, k);
      if (!cell) continue;
      checked += 2;
      if (cell->mstd != c.mstd || cell->mdts != c.mdts) {
        record(report, false);
        report.notes.push_back(group_name(spec) + " size " + std::to_string(k) + ": got mstd " + str(c.mstd) +
                               " mdts " + str(c.mdts) + ", published mstd " + str(cell->mstd) + " mdts " +
                               str(cell->mdts));
      }
    }
  }
  if (opt.expect_paper) {
    if (checked == 0) throw UsageError("no published cells fall inside the requested range");
    report.notes.push_back("compared " + str(checked) + " published cells");
  }
  report.elapsed_ms = elapsed_since(start);
  return report;
}

VerifyKind parse_verify_kind(std::string_view text) {
  static const std::map<std::string_view, VerifyKind> kinds = {
      {"size2", VerifyKind::Size2},     {"size3", VerifyKind::Size3},     {"Tn", VerifyKind::Tn},
      {"types", VerifyKind::Types},     {"sign3", VerifyKind::Sign3},
      {"lemma22", VerifyKind::Lemma22}, {"lemma23", VerifyKind::Lemma23}, {"lemma24", VerifyKind::Lemma24},
      {"lemma25", VerifyKind::Lemma25}};
  const auto it = kinds.find(text);
  if (it == kinds.end()) throw UsageError("unknown verifier '" + std::string(text) + "'");
  return it->second;
}

std::string_view verify_kind_name(VerifyKind k) {
  switch (k) {
    case VerifyKind::Size2:
      return "size2";
    case VerifyKind::Size3:
      return "size3";
    case VerifyKind::Tn:
      return "Tn";
    case VerifyKind::Types:
      return "types";
    case VerifyKind::Sign3:
      return "sign3";
    case VerifyKind::Lemma22:
      return "lemma22";
    case VerifyKind::Lemma23:
      return "lemma23";
    case VerifyKind::Lemma24:
      return "lemma24";
    case VerifyKind::Lemma25:
      return "lemma25";
  }
  return "?";
}

namespace {

void verify_size2(const VerifyOptions& opt, RunReport& report) {
  for (int n : opt.ns) require_in(n, 2, 16, "size2");
  for (int n : opt.ns) {
    const auto formula = theorem_size2(n);
    const auto brute = parallel_count(enumerable_group({Family::Dicyclic, n}), 2, opt.workers);
    const bool ok = formula.matches(brute);
    ReportRow row;
    row.add("n", std::to_string(n));
    add_triple(row, "formula_", formula);
    add_triple(row, "brute_", brute);
    row.add("match", yes_no(ok));
    report.rows.push_back(std::move(row));
    record(report, ok);
  }
}

void verify_size3(const VerifyOptions& opt, RunReport& report) {
  for (int n : opt.ns) require_odd(n, 3, 15, "size3");
  for (int n : opt.ns) {
    const auto formula = theorem_size3_odd(n);
    const auto brute = parallel_count(enumerable_group({Family::Dicyclic, n}), 3, opt.workers);
    const bool ok = formula.matches(brute);
    ReportRow row;
    row.add("n", std::to_string(n)).add("branch", n % 3 == 0 ? "3|n" : "3!|n");
    add_triple(row, "formula_", formula);
    add_triple(row, "brute_", brute);
    row.add("match", yes_no(ok));
    report.rows.push_back(std::move(row));
    record(report, ok);
  }
}

void verify_tn(const VerifyOptions& opt, RunReport& report) {
  for (int n : opt.ns) require_odd(n, 3, 1001, "Tn");
  for (int n : opt.ns) {
    const auto formula = lemma_Tn(n);
    const auto brute = triple_congruence_count(n);
    const bool ok = formula.value == brute;
    ReportRow row;
    row.add("n", std::to_string(n)).add("formula", str(formula.value)).add("brute_force", str(brute));
    row.add("match", yes_no(ok));
    report.rows.push_back(std::move(row));
    record(report, ok);
  }
}

std::string type_name(TypeDescriptor t) {
  return std::to_string(t.rotations) + "+" + std::to_string(t.reflections);
}

void verify_types(const VerifyOptions& opt, RunReport& report) {
  for (int n : opt.ns) require_odd(n, 3, 15, "types");
  for (int n : opt.ns) {
    const GroupTable g = enumerable_group({Family::Dicyclic, n});
    FormulaTriple summed{0, 0, 0};
    for (const auto t : type_descriptors(3)) {
      const auto formula = lemma_type_counts(n, t);
      const auto brute = count_by_type(g, 3, t);
      summed.mstd += formula.mstd;
      summed.mdts += formula.mdts;
      summed.balanced += formula.balanced;
      const bool ok = formula.matches(brute);
      ReportRow row;
      row.add("n", std::to_string(n)).add("type", type_name(t));
      add_triple(row, "formula_", formula);
      add_triple(row, "brute_", brute);
      row.add("match", yes_no(ok));
      report.rows.push_back(std::move(row));
      record(report, ok);
    }
    // The four type formulas must add up to the whole-group closed form.
    const auto whole = theorem_size3_odd(n);
    const bool ok = summed == whole;
    ReportRow row;
    row.add("n", std::to_string(n)).add("type", "sum");
    add_triple(row, "formula_", summed);
    add_triple(row, "brute_", whole);
    row.add("match", yes_no(ok));
    report.rows.push_back(std::move(row));
    record(report, ok);
  }
  report.notes.push_back("type rows compare per-type closed forms with restricted enumeration; "
                         "sum rows compare the summed type forms with the whole-group closed form");
}

void verify_sign3(const VerifyOptions& opt, RunReport& report) {
  for (int n : opt.ns) require_odd(n, 3, 15, "sign3");
  for (int n : opt.ns) {
    const auto brute = parallel_count(enumerable_group({Family::Dicyclic, n}), 3, opt.workers);
    const bool expect_more_mstd = n != 3;
    const bool ok = expect_more_mstd ? brute.mstd > brute.mdts : brute.mstd < brute.mdts;
    ReportRow row;
    row.add("n", std::to_string(n)).add("mstd", str(brute.mstd)).add("mdts", str(brute.mdts));
    row.add("expected", expect_more_mstd ? "mstd>mdts" : "mstd<mdts").add("match", yes_no(ok));
    report.rows.push_back(std::move(row));
    record(report, ok);
  }
}

void lemma_row(RunReport& report, int n, std::string_view mode, const LemmaCheck& c) {
  ReportRow row;
  row.add("n", std::to_string(n)).add("mode", std::string(mode)).add("cases", str(c.cases));
  row.add("violations", str(c.violations)).add("match", yes_no(c.holds()));
  report.rows.push_back(std::move(row));
  record(report, c.holds());
}

}  // namespace

RunReport run_verify(const VerifyOptions& opt) {
  const auto start = Clock::now();
  require_nonempty(opt.ns, "n");
  RunReport report;
  report.command = "verify";
  report.parameters = {{"which", std::string(verify_kind_name(opt.which))}, {"n", join(opt.ns)}};

  switch (opt.which) {
    case VerifyKind::Size2:
      verify_size2(opt, report);
      break;
    case VerifyKind::Size3:
      verify_size3(opt, report);
      break;
    case VerifyKind::Tn:
      verify_tn(opt, report);
      break;
    case VerifyKind::Types:
      verify_types(opt, report);
      break;
    case VerifyKind::Sign3:
      verify_sign3(opt, report);
      break;
    case VerifyKind::Lemma22:
      for (int n : opt.ns) {
        if (n < 6 || n > 20 || n % 2 != 0) throw UsageError("lemma22 needs even n in [6, 20]");
      }
      for (int n : opt.ns) lemma_row(report, n, "exhaustive", verify_lemma_2_2(n));
      break;
    case VerifyKind::Lemma23:
      for (int n : opt.ns) require_odd(n, 7, kMaxStructuredN, "lemma23");
      report.parameters.emplace_back("samples", str(opt.samples));
      report.parameters.emplace_back("seed", str(opt.seed));
      for (int n : opt.ns) {
        if (n <= 7) {
          lemma_row(report, n, "exhaustive", verify_lemma_2_3_exhaustive(n));
        } else {
          lemma_row(report, n, "sampled", verify_lemma_2_3_sampled(n, opt.samples, opt.seed + n));
        }
      }
      break;
    case VerifyKind::Lemma24:
      for (int n : opt.ns) require_in(n, 6, kMaxStructuredN, "lemma24");
      report.parameters.emplace_back("samples", str(opt.samples));
      report.parameters.emplace_back("seed", str(opt.seed));
      for (int n : opt.ns) {
        if (n <= 8) {
          lemma_row(report, n, "exhaustive", verify_lemma_2_4_exhaustive(n));
        } else {
          lemma_row(report, n, "sampled", verify_lemma_2_4_sampled(n, opt.samples, opt.seed + n));
        }
      }
      break;
    case VerifyKind::Lemma25:
      for (int n : opt.ns) require_in(n, 6, 20, "lemma25");
      for (int n : opt.ns) {
        const auto bound = lemma_2_5_bound(n);
        const auto upper = std::uint64_t{1} << n;
        for (int r = 0; r <= n; ++r) {
          const auto count = verify_lemma_2_5(n, r);
          const bool ok = count >= bound && count <= upper;
          ReportRow row;
          row.add("n", std::to_string(n)).add("r", std::to_string(r)).add("count", str(count));
          row.add("lower_bound", str(bound)).add("upper_bound", str(upper)).add("match", yes_no(ok));
          report.rows.push_back(std::move(row));
          record(report, ok);
        }
      }
      break;
  }
  report.elapsed_ms = elapsed_since(start);
  return report;
}

BoundaryMode parse_boundary_mode(std::string_view text) {
  if (text == "structured") return BoundaryMode::Structured;
  if (text == "exhaustive") return BoundaryMode::Exhaustive;
  throw UsageError("mode must be structured or exhaustive");
}

RunReport run_boundary(const BoundaryOptions& opt) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "boundary";
  report.parameters = {{"n", std::to_string(opt.n)},
                       {"mode", opt.mode == BoundaryMode::Structured ? "structured" : "exhaustive"}};
  const int n = opt.n;
  if (opt.mode == BoundaryMode::Structured) {
    require_in(n, kMinStructuredN, kMaxEnumeratedStructuredN, "structured boundary");
  } else {
    require_in(n, kMinStructuredN, 7, "exhaustive boundary");
  }

  const auto s = enumerate_structured(n, opt.workers);
  const bool even = n % 2 == 0;
  const std::uint64_t expected_specs = static_cast<std::uint64_t>(n + 1) * binomial(2 * n, n);

  if (opt.mode == BoundaryMode::Structured) {
    auto bound_row = [&](std::string kind, std::uint64_t count, const FormulaResult& bound, std::string rel,
                         bool ok) {
      ReportRow row;
      row.add("n", std::to_string(n)).add("kind", std::move(kind)).add("count", str(count));
      row.add("relation", std::move(rel)).add("bound", str(bound.value)).add("match", yes_no(ok));
      report.rows.push_back(std::move(row));
      record(report, ok);
    };
    bound_row("mstd", s.counts.mstd, s.bounds.mstd, ">=", s.mstd_bound_ok);
    bound_row("mdts", s.counts.mdts, s.bounds.mdts, even ? ">=" : "=", s.mdts_ok);
    bound_row("balanced", s.counts.balanced, s.bounds.balanced, ">=", s.balanced_bound_ok);

    record(report, s.specs == expected_specs && s.counts.total() == s.specs);
    report.notes.push_back("specs enumerated: " + str(s.specs) + " (expected (n+1)C(2n,n) = " +
                           str(expected_specs) + ")");
    report.notes.push_back("shift & !n-diff & cover => MSTD: " + str(s.claim1_premises) + " premises, " +
                           str(s.claim1_violations) + " violations");
    report.notes.push_back("!shift & n-diff => MDTS: " + str(s.claim2_premises) + " premises, " +
                           str(s.claim2_violations) + " violations");
    report.notes.push_back("n-diff without full cover: " + str(s.cover_violations));
    record(report, s.claim1_violations == 0 && s.claim2_violations == 0 && s.cover_violations == 0);
  } else {
    const GroupTable g = enumerable_group({Family::Dicyclic, n});
    const auto global = parallel_count(g, 2 * n, opt.workers);
    auto row_for = [&](std::string kind, std::uint64_t all, std::uint64_t structured, const FormulaResult& bound) {
      const bool ok = all >= structured && BigInt(all) >= bound.value;
      ReportRow row;
      row.add("n", std::to_string(n)).add("kind", std::move(kind)).add("global", str(all));
      row.add("structured", str(structured)).add("bound", str(bound.value)).add("match", yes_no(ok));
      report.rows.push_back(std::move(row));
      record(report, ok);
    };
    row_for("mstd", global.mstd, s.counts.mstd, s.bounds.mstd);
    row_for("mdts", global.mdts, s.counts.mdts, s.bounds.mdts);
    row_for("balanced", global.balanced, s.counts.balanced, s.bounds.balanced);
    const bool total_ok = global.total() == binomial(4 * n, 2 * n);
    record(report, total_ok);
    report.notes.push_back("subsets enumerated: " + str(global.total()) + " of C(4n,2n) = " +
                           str(binomial(4 * n, 2 * n)));
  }
  report.elapsed_ms = elapsed_since(start);
  return report;
}

RunReport run_classify(const ClassifyOptions& opt) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "classify";
  report.parameters = {{"group", opt.group}, {"set", opt.set}};

  GroupSpec spec;
  GroupTable g;
  SubsetMask a;
  try {
    spec = parse_group_spec(opt.group);
    g = build_group(spec, kMaxOrder);
    a = parse_subset(g, opt.set);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::length_error& e) {
    throw UsageError(e.what());
  }
  const auto sums = sumset(g, a);
  const auto diffs = diffset(g, a);
  const auto cls = classify_sizes({sums.count(), diffs.count()});
  ReportRow row;
  row.add("group", group_name(spec)).add("set", format_subset(g, a));
  row.add("sumset", format_subset(g, sums)).add("diffset", format_subset(g, diffs));
  row.add("sums", std::to_string(sums.count())).add("differences", std::to_string(diffs.count()));
  row.add("classification", std::string(classification_name(cls)));
  report.rows.push_back(std::move(row));
  report.elapsed_ms = elapsed_since(start);
  return report;
}

RunReport run_probe(const ProbeOptions& opt) {
  const auto start = Clock::now();
  require_nonempty(opt.ns, "n");
  require_nonempty(opt.sizes, "size");
  for (int n : opt.ns) require_in(n, 1, 16, "probe");
  for (int n : opt.ns) {
    for (int m : opt.sizes) {
      if (m < 1 || m > 4 * n) throw UsageError("probe sizes must lie in [1, 4n]");
    }
  }
  RunReport report;
  report.command = "probe";
  report.parameters = {{"n", join(opt.ns)}, {"sizes", join(opt.sizes)}};
  for (const auto& p : probe_section6(opt.ns, opt.sizes, opt.workers)) {
    ReportRow row;
    row.add("n", std::to_string(p.n)).add("size", std::to_string(p.m));
    add_triple(row, "", p.counts);
    row.add("all_even", yes_no(p.all_even)).add("mstd_div_4", yes_no(p.mstd_div4));
    row.add("mstd_div_4n", yes_no(p.mstd_div4n));
    row.add("mstd_vs_mdts", p.mstd_minus_mdts_sign > 0 ? ">" : (p.mstd_minus_mdts_sign < 0 ? "<" : "="));
    report.rows.push_back(std::move(row));
  }
  report.notes.push_back("observations over the listed range only");
  report.elapsed_ms = elapsed_since(start);
  return report;
}

RunReport run_ratios(const std::vector<int>& ns) {
  const auto start = Clock::now();
  require_nonempty(ns, "n");
  for (int n : ns) require_in(n, 2, 1000000, "ratios");
  RunReport report;
  report.command = "ratios";
  report.parameters = {{"n", join(ns)}};
  for (int n : ns) {
    const auto p = ratio_probe(n);
    const bool odd = n % 2 == 1 && n >= 3;
    ReportRow row;
    row.add("n", std::to_string(n)).add("size2_mstd_over_balanced", fixed6(p.size2_mstd_over_balanced));
    row.add("size3_mstd_over_mdts", odd ? fixed6(p.size3_mstd_over_mdts) : "n/a");
    row.add("size3_mstd_over_balanced", odd ? fixed6(p.size3_mstd_over_balanced) : "n/a");
    report.rows.push_back(std::move(row));
  }
  report.notes.push_back("finite-n ratios of the closed forms; probes, not limits");
  report.elapsed_ms = elapsed_since(start);
  return report;
}

}  // namespace sumdiff
