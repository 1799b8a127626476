// sumdiff: count and classify sum-dominant, difference-dominant and balanced
// subsets of small finite groups.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sumdiff/commands.hpp"
#include "sumdiff/enumerator.hpp"

namespace {

struct Common {
  std::string format = "md";
  int workers = 0;
  std::string output;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format: md, csv or json")
      ->check(CLI::IsMember({"md", "markdown", "csv", "json"}));
  cmd->add_option("--workers", c.workers, "Worker threads (default: SUMDIFF_WORKERS or all cores)");
  cmd->add_option("-o,--output", c.output, "Write the report to a file instead of stdout");
}

int emit(const sumdiff::RunReport& report, const Common& c) {
  const auto text = sumdiff::render(report, sumdiff::parse_format(c.format));
  if (c.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(c.output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << c.output << "\n";
      return 2;
    }
    out << text;
  }
  for (const auto& note : report.notes) {
    if (report.status != sumdiff::RunStatus::AllPass) std::cerr << note << "\n";
  }
  return sumdiff::exit_code(report.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sum-dominant / difference-dominant subset enumeration for small finite groups"};
  app.require_subcommand(1);

  Common common;

  std::string family = "dic";
  std::string table_n;
  std::string table_sizes;
  std::string expect;
  auto* table = app.add_subcommand("table", "Count MSTD/MDTS/balanced subsets by size");
  table->add_option("--family", family, "dic, dihedral, cyclic or cyclic2")->required();
  table->add_option("--n", table_n, "Family parameter range, e.g. 2..5 or 4..10:even")->required();
  table->add_option("--sizes", table_sizes, "Subset size range, e.g. 2..10")->required();
  table->add_option("--expect", expect, "Compare with the published reference table")
      ->check(CLI::IsMember({"paper"}));
  add_common(table, common);

  std::string which;
  std::string verify_n;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 20250101;
  auto* verify = app.add_subcommand("verify", "Check closed forms and lemmas against brute force");
  verify->add_option("which", which, "size2, size3, Tn, types, sign3, lemma22, lemma23, lemma24, lemma25")
      ->required();
  verify->add_option("--n", verify_n, "Parameter range, e.g. 3..15:odd")->required();
  verify->add_option("--samples", samples, "Random sets for sampled lemma checks");
  verify->add_option("--seed", seed, "Seed for sampled lemma checks");
  add_common(verify, common);

  int boundary_n = 6;
  std::string mode = "structured";
  auto* boundary = app.add_subcommand("boundary", "Subsets of size 2n in Dic_4n");
  boundary->add_option("--n", boundary_n, "Dicyclic parameter")->required();
  boundary->add_option("--mode", mode, "structured or exhaustive")
      ->check(CLI::IsMember({"structured", "exhaustive"}));
  add_common(boundary, common);

  std::string group;
  std::string set;
  auto* classify = app.add_subcommand("classify", "Sumset, difference set and class of one subset");
  classify->add_option("--group", group, "Group, e.g. dic:3 or dihedral:4")->required();
  classify->add_option("--set", set, "Elements as r<k> / f<k>, comma separated")->required();
  add_common(classify, common);

  std::string probe_n;
  std::string probe_sizes;
  auto* probe = app.add_subcommand("probe", "Divisibility and MSTD-vs-MDTS observations over Dic_4n");
  probe->add_option("--n", probe_n, "Dicyclic parameter range")->required();
  probe->add_option("--sizes", probe_sizes, "Subset size range")->required();
  add_common(probe, common);

  std::string ratio_n;
  auto* ratios = app.add_subcommand("ratios", "Finite-n ratios of the closed-form counts");
  ratios->add_option("--n", ratio_n, "Dicyclic parameter range")->required();
  add_common(ratios, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const int workers = sumdiff::resolve_workers(common.workers);
    if (*table) {
      sumdiff::TableOptions opt;
      opt.family = sumdiff::parse_family(family);
      opt.ns = sumdiff::parse_int_range(table_n);
      opt.sizes = sumdiff::parse_int_range(table_sizes);
      opt.expect_paper = expect == "paper";
      opt.workers = workers;
      return emit(sumdiff::run_table(opt), common);
    }
    if (*verify) {
      sumdiff::VerifyOptions opt;
      opt.which = sumdiff::parse_verify_kind(which);
      opt.ns = sumdiff::parse_int_range(verify_n);
      opt.samples = samples;
      opt.seed = seed;
      opt.workers = workers;
      return emit(sumdiff::run_verify(opt), common);
    }
    if (*boundary) {
      return emit(sumdiff::run_boundary({boundary_n, sumdiff::parse_boundary_mode(mode), workers}), common);
    }
    if (*classify) return emit(sumdiff::run_classify({group, set}), common);
    if (*probe) {
      return emit(sumdiff::run_probe({sumdiff::parse_int_range(probe_n), sumdiff::parse_int_range(probe_sizes),
                                      workers}),
                  common);
    }
    if (*ratios) return emit(sumdiff::run_ratios(sumdiff::parse_int_range(ratio_n)), common);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
