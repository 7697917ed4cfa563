#include <gtest/gtest.h>

#include "qord/report.hpp"

using namespace qord;

namespace {

Report sample_report() {
  Report r;
  r.seed = 7;
  ReportEntry a;
  a.name = "compat(v, q): compatible";
  a.status = Status::fail;
  a.witness = {"3", "X^2"};
  a.detail = "v(3) = 1 < 2 = v(X^2)";
  a.seed = 7;
  a.samples_used = 12;
  ReportEntry b;
  b.name = "val_axioms(v): V1";
  b.seed = 9;
  b.samples_used = 1076;
  b.elapsed_ms = 3;
  r.checks = {a, b};
  r.shown = {"v = valuation v3 on Q"};
  return r;
}

}  // namespace

TEST(Report, PassOnlySummary) {
  Report r;
  ReportEntry e;
  e.name = "x";
  r.checks = {e, e};
  EXPECT_NE(render_text(r).find("all 2 checks passed"), std::string::npos);
  EXPECT_EQ(exit_code(r), 0);
}

TEST(Report, FailingReportShowsCanonicalWitness) {
  Report r = sample_report();
  const std::string text = render_text(r);
  EXPECT_NE(text.find("(3, X^2)"), std::string::npos);
  EXPECT_NE(text.find("1 failed"), std::string::npos);
  const std::string json = render_json(r);
  EXPECT_NE(json.find("\"X^2\""), std::string::npos);
  EXPECT_EQ(exit_code(r), 1);
}

TEST(Report, JsonRoundTrip) {
  Report r = sample_report();
  EXPECT_EQ(parse_report_json(render_json(r)), r);
  Report empty;
  EXPECT_EQ(parse_report_json(render_json(empty)), empty);
}

TEST(Report, JsonKeyOrderIsStable) {
  const std::string json = render_json(sample_report());
  const auto pos = [&](const char* k) { return json.find(k); };
  EXPECT_LT(pos("\"version\""), pos("\"seed\""));
  EXPECT_LT(pos("\"seed\""), pos("\"checks\""));
  EXPECT_LT(pos("\"name\""), pos("\"status\""));
  EXPECT_LT(pos("\"status\""), pos("\"witness\""));
  EXPECT_LT(pos("\"samples_used\""), pos("\"elapsed_ms\""));
  EXPECT_EQ(json, render_json(sample_report()));
}

TEST(Report, ExitCodesByWorstStatus) {
  Report r = sample_report();
  r.checks[1].status = Status::hard_inconsistency;
  EXPECT_EQ(exit_code(r), 4);
  r.checks[0].status = Status::inconclusive;
  r.checks[1].status = Status::pass;
  EXPECT_EQ(exit_code(r), 0);
  EXPECT_EQ(r.overall(), Status::inconclusive);
}

TEST(Report, MalformedJsonThrows) {
  EXPECT_THROW(parse_report_json("{"), std::invalid_argument);
  EXPECT_THROW(parse_report_json("{\"version\": 1}"), std::invalid_argument);
  EXPECT_THROW(parse_report_json(R"({"version":1,"seed":1,"checks":[{"name":"a","status":"odd","seed":1,
    "samples_used":0,"elapsed_ms":0}]})"),
               std::invalid_argument);
}

TEST(Report, EntryFromFinding) {
  auto Z = Ring::integers();
  Finding f{"QR1", Status::fail, {Z->from_integer(2), Z->from_integer(-3)}, "detail", 5};
  ReportEntry e = make_entry(f, "qo_axioms(q): QR1", 11, 4);
  EXPECT_EQ(e.witness, (std::vector<std::string>{"2", "-3"}));
  EXPECT_EQ(e.samples_used, 5u);
  EXPECT_EQ(e.seed, 11u);
  EXPECT_EQ(e.elapsed_ms, 4);
}
