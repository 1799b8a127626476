#include <doctest.h>

#include <stdexcept>

#include "sumdiff/commands.hpp"
#include "sumdiff/published_tables.hpp"
#include "sumdiff/report.hpp"

using namespace sumdiff;

TEST_CASE("exit code contract") {
  CHECK(exit_code(RunStatus::AllPass) == 0);
  CHECK(exit_code(RunStatus::Mismatch) == 1);
  CHECK(exit_code(RunStatus::Error) == 2);
  CHECK(parse_status(status_name(RunStatus::Mismatch)) == RunStatus::Mismatch);
  CHECK(parse_format("markdown") == OutputFormat::Markdown);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("JSON round trip is byte identical") {
  RunReport r;
  r.command = "table";
  r.parameters = {{"family", "dic"}, {"n", "2,3"}};
  r.rows.push_back(ReportRow{}.add("n", "2").add("note", "quote \" and, comma"));
  r.rows.push_back(ReportRow{}.add("n", "3").add("note", ""));
  r.notes = {"one", "two"};
  r.status = RunStatus::Mismatch;
  r.elapsed_ms = 17;
  const auto text = to_json(r);
  const auto back = report_from_json(text);
  CHECK(back == r);
  CHECK(to_json(back) == text);
  CHECK_THROWS_AS(report_from_json("{"), std::invalid_argument);
}

TEST_CASE("CSV escaping and line endings") {
  RunReport r;
  r.rows.push_back(ReportRow{}.add("a", "x,y").add("b", "say \"hi\""));
  CHECK(to_csv(r) == "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n");
}

TEST_CASE("integer ranges") {
  CHECK(parse_int_range("5") == std::vector<int>{5});
  CHECK(parse_int_range("2..5") == std::vector<int>{2, 3, 4, 5});
  CHECK(parse_int_range("3..9:odd") == std::vector<int>{3, 5, 7, 9});
  CHECK(parse_int_range("4..10:even") == std::vector<int>{4, 6, 8, 10});
  CHECK(parse_int_range("7,2..3,3") == std::vector<int>{2, 3, 7});
  CHECK_THROWS_AS(parse_int_range(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_int_range("5..2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_int_range("a..b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_int_range("2..5:prime"), std::invalid_argument);
}

TEST_CASE("table command") {
  TableOptions opt;
  opt.ns = {2};
  opt.sizes = {2, 9};
  const auto r = run_table(opt);
  CHECK(to_csv(r).substr(0, to_csv(r).find('\n')) == "family,n,order,size,mstd,mdts,balanced,total");
  REQUIRE(r.rows.size() == 2);
  CHECK(r.rows[0].get("balanced") == "28");
  CHECK(r.rows[1].get("total") == "0");
  CHECK(r.status == RunStatus::AllPass);

  opt.expect_paper = true;
  opt.ns = {4};
  opt.sizes = {4};
  const auto p = run_table(opt);
  CHECK(p.status == RunStatus::AllPass);
  CHECK(p.rows[0].get("mstd") == "392");
  CHECK(p.rows[0].get("mdts") == "832");

  opt.ns = {17};
  CHECK_THROWS_AS(run_table(opt), UsageError);
  opt.ns = {6};  // no published cells for Dic_24
  CHECK_THROWS_AS(run_table(opt), UsageError);
}

TEST_CASE("classify command") {
  const auto r = run_classify({"dic:3", "r1,r4,f0"});
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].get("sums") == "7");
  CHECK(r.rows[0].get("differences") == "4");
  CHECK(r.rows[0].get("classification") == "MSTD");
  CHECK_THROWS_AS(run_classify({"dic:3", "r1,x4"}), UsageError);
  CHECK_THROWS_AS(run_classify({"dic:40", "r1"}), UsageError);
}

TEST_CASE("verify command domains") {
  VerifyOptions opt;
  opt.which = VerifyKind::Size3;
  opt.ns = {4};
  CHECK_THROWS_AS(run_verify(opt), UsageError);
  opt.ns = {3, 5};
  CHECK(run_verify(opt).status == RunStatus::AllPass);
  CHECK(parse_verify_kind("Tn") == VerifyKind::Tn);
  CHECK_THROWS_AS(parse_verify_kind("lemma99"), std::invalid_argument);
}

TEST_CASE("published reference cells") {
  const auto& cells = published_cells();
  CHECK(cells.size() == 72);
  const auto c = find_published(Family::Dihedral, 10, 9);
  REQUIRE(c.has_value());
  CHECK(c->mstd == 43200);
  CHECK(c->mdts == 5560);
  CHECK_FALSE(find_published(Family::Dicyclic, 9, 3).has_value());
  CHECK_THROWS_AS(parse_published_csv("family,n,size,mstd,mdts\ndic,2,x,0,0\n"), std::invalid_argument);
}
