#include "doctest.h"

#include <sstream>

#include "fgkit/report.hpp"

using namespace fgkit;

namespace {

std::size_t count_lines(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

}  // namespace

TEST_CASE("verify at g = 2, l = 3") {
  const VerificationReport r = verify(FamilyParams::make(2, 3));
  CHECK(r.passed());
  CHECK(r.injective);
  CHECK(r.image_rank == 4);
  CHECK(r.closed_form_ok);
  CHECK(r.identities_ok);
  CHECK(r.block_letter_ok);
  REQUIRE(r.quotient_order.has_value());
  CHECK(*r.quotient_order == 24);
  CHECK(r.stated_order == 16);
  CHECK_FALSE(r.stated_order_match);
  CHECK(r.failures.empty());
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("24") != std::string::npos);
  CHECK(r.boundary_class.size() == 72);
  CHECK_FALSE(r.timings.empty());
}

TEST_CASE("report JSON") {
  const VerificationReport r = verify(FamilyParams::make(2, 4));
  const nlohmann::json j = nlohmann::json::parse(render(r, {ReportFormat::json, true}));
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["params"]["g"] == 2);
  CHECK(j["params"]["l"] == 4);
  CHECK(j["injective"] == true);
  CHECK(j["image_rank"] == 4);
  CHECK(j["closed_form_ok"] == true);
  CHECK(j["identities_36_37_ok"] == true);
  CHECK(j["block_letter_ok"] == true);
  CHECK(j["quotient_order"] == 36);
  CHECK(j["reference_order"] == 20);
  CHECK(j["paper_order_match"] == false);
  CHECK(j["boundary_class"].is_string());
  CHECK(j["boundary_class_length"] == r.boundary_class.size());
  CHECK(j["passed"] == true);
  CHECK(j["failures"].empty());
  CHECK(j["warnings"].size() == 1);
  CHECK(j.contains("timings"));
  CHECK_FALSE(nlohmann::json::parse(render(r, {ReportFormat::json, false})).contains("timings"));

  // Boundary class round-trips through the parser.
  const Word parsed = parse_word(j["boundary_class"].get<std::string>(), handlebody_alphabet());
  CHECK(parsed == r.boundary_class.to_word());
}

TEST_CASE("infinite order is rendered as a string") {
  VerificationReport r = verify(FamilyParams::make(2, 3));
  r.quotient_order.reset();
  CHECK_FALSE(r.passed());
  CHECK(to_json(r, false)["quotient_order"] == "INFINITE");
}

TEST_CASE("sweep") {
  SweepConfig config{{2}, {3, 4, 5}, kDefaultSeed, 2};
  const SweepResult s = run_sweep(config);
  REQUIRE(s.reports.size() == 3);
  CHECK(s.passed());
  REQUIRE(s.distinctness.size() == 1);
  CHECK(s.distinctness[0].unoriented_distinct);
  CHECK(s.distinctness[0].oriented_distinct);

  const std::string csv = render(s, {ReportFormat::csv, false});
  CHECK(count_lines(csv) == 1 + 3 + 1);
  CHECK(csv.rfind("kind,g,l,", 0) == 0);

  const nlohmann::json j = nlohmann::json::parse(render(s, {ReportFormat::json, false}));
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["reports"].size() == 3);
  CHECK(j["distinctness"].size() == 1);
  CHECK(j["passed"] == true);

  const std::string table = render(s, {ReportFormat::table, false});
  CHECK(table.find("PASS") != std::string::npos);
}

TEST_CASE("sweep output is independent of parallelism") {
  SweepConfig serial{{2, 4}, {3, 5, 7, 9}, kDefaultSeed, 1};
  SweepConfig parallel = serial;
  parallel.parallelism = 8;
  for (const ReportFormat f : {ReportFormat::json, ReportFormat::csv, ReportFormat::table}) {
    CHECK(render(run_sweep(serial), {f, false}) == render(run_sweep(parallel), {f, false}));
  }
}

TEST_CASE("sweep validation") {
  CHECK_THROWS_AS(run_sweep({{2}, {}, kDefaultSeed, 1}), InvalidParams);
  CHECK_THROWS_AS(run_sweep({{}, {3}, kDefaultSeed, 1}), InvalidParams);
  CHECK_THROWS_AS(run_sweep({{3}, {3}, kDefaultSeed, 1}), InvalidParams);
  CHECK_THROWS_AS(run_sweep({{2}, {2}, kDefaultSeed, 1}), InvalidParams);
  CHECK_THROWS_AS(run_sweep({{2}, {3}, kDefaultSeed, 0}), InvalidParams);
}
