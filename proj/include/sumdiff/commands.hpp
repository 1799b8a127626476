#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sumdiff/group.hpp"
#include "sumdiff/report.hpp"

namespace sumdiff {

// Bad flags, ranges outside a verifier's domain, unparsable element lists. Exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// "5", "2..10", "3..15:odd", "6..12:even", and comma separated lists of those.
// Result is sorted and deduplicated.
std::vector<int> parse_int_range(std::string_view text);

struct TableOptions {
  Family family = Family::Dicyclic;
  std::vector<int> ns;
  std::vector<int> sizes;
  bool expect_paper = false;
  int workers = 1;
};
// One row per (n, size): family,n,order,size,mstd,mdts,balanced,total.
// Sizes above the group order give an all-zero row.
RunReport run_table(const TableOptions& opt);

enum class VerifyKind { Size2, Size3, Tn, Types, Sign3, Lemma22, Lemma23, Lemma24, Lemma25 };
VerifyKind parse_verify_kind(std::string_view text);
std::string_view verify_kind_name(VerifyKind k);

struct VerifyOptions {
  VerifyKind which = VerifyKind::Size2;
  std::vector<int> ns;
  int workers = 1;
  std::uint64_t samples = 100000;  // sampled lemma checks
  std::uint64_t seed = 20250101;
};
RunReport run_verify(const VerifyOptions& opt);

enum class BoundaryMode { Structured, Exhaustive };
BoundaryMode parse_boundary_mode(std::string_view text);

struct BoundaryOptions {
  int n = 6;
  BoundaryMode mode = BoundaryMode::Structured;
  int workers = 1;
};
RunReport run_boundary(const BoundaryOptions& opt);

struct ClassifyOptions {
  std::string group;  // "dic:3"
  std::string set;    // "r1,r4,f0"
};
RunReport run_classify(const ClassifyOptions& opt);

struct ProbeOptions {
  std::vector<int> ns;
  std::vector<int> sizes;
  int workers = 1;
};
// Divisibility and MSTD-vs-MDTS observations over Dic_4n. Never fails on an observation.
RunReport run_probe(const ProbeOptions& opt);
// Finite-n ratios of the closed-form counts.
RunReport run_ratios(const std::vector<int>& ns);

}  // namespace sumdiff
