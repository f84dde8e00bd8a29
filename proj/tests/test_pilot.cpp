#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "atsp/pilot.hpp"
#include "oracle.hpp"

using namespace atsp;

namespace {

std::string fixture_path() {
  return std::string(ATSP_SOURCE_DIR) + "/data/pilot_table.csv";
}

}  // namespace

TEST_CASE("improvement: table anchors and sign coherence") {
  CHECK(improvement(20210, 33400) == doctest::Approx(39.49102).epsilon(1e-6));
  CHECK(improvement(15270, 14400) == doctest::Approx(-6.04167).epsilon(1e-5));
  CHECK(improvement(123, 123) == 0.0);
  CHECK(improvement(10, 20) > 0);
  CHECK(improvement(20, 10) < 0);
  CHECK_THROWS_AS(improvement(5, 0), std::domain_error);
  CHECK_THROWS_AS(improvement(5, -2), std::domain_error);
}

TEST_CASE("improvement pair list is the recovered eight") {
  const auto& pairs = improvement_pairs();
  REQUIRE(pairs.size() == 8);
  CHECK(pairs[0].numerator == Algorithm::ga);
  CHECK(pairs[0].baseline == Algorithm::sa);
  CHECK(pairs[7].numerator == Algorithm::k_ga_sa);
  CHECK(pairs[7].baseline == Algorithm::kmeans);
}

TEST_CASE("verify_paper_table: anchors match, negative control flagged") {
  auto rows = parse_fixture_file(fixture_path());
  REQUIRE(rows.size() == 14);
  auto report = verify_paper_table(rows);
  CHECK(report.total == 112);

  auto cell = [&](int row, int col) { return report.cells[(row - 1) * 8 + col]; };
  CHECK(cell(1, 0).match);  // 39.49102
  CHECK(cell(1, 1).match);  // 9.166539
  CHECK(cell(1, 2).match);  // 33.38323
  CHECK(cell(2, 1).match);  // -2.07841
  CHECK(cell(4, 6).match);  // -6.04167
  CHECK(cell(14, 0).match); // 35.52788
  CHECK(report.matched >= 107);  // >= 95% of 112

  // Corrupt one cell: it must be flagged.
  rows[0].printed[0] += 1.0;
  auto corrupted = verify_paper_table(rows);
  CHECK_FALSE(corrupted.cells[0].match);
  CHECK(corrupted.matched == report.matched - 1);
}

TEST_CASE("parse_fixture: malformed input") {
  CHECK_THROWS_AS(parse_fixture("header\n1,2,3\n"), ParseError);
  CHECK_THROWS_AS(parse_fixture("header only\n"), ParseError);
  CHECK_THROWS_AS(
      parse_fixture("h\n1,2,3,4,5,6,7,8,9,10,11,12,13,oops\n"), ParseError);
}

TEST_CASE("run_pilot: n=2 row has six equal raw costs") {
  PilotConfig cfg;
  cfg.cities = 2;
  cfg.instances = 1;
  cfg.budget = 100;
  cfg.ga.population_size = 4;
  auto rows = run_pilot(cfg);
  REQUIRE(rows.size() == 1);
  for (int c = 1; c < 6; ++c) CHECK(rows[0].raw[c] == rows[0].raw[0]);
  REQUIRE(rows[0].optimum);
  CHECK(*rows[0].optimum == rows[0].raw[0]);
}

TEST_CASE("run_pilot: percentage cells re-derive from raw cells") {
  PilotConfig cfg;
  cfg.cities = 7;
  cfg.instances = 3;
  cfg.budget = 2000;
  cfg.ga.population_size = 20;
  auto rows = run_pilot(cfg);
  const auto& pairs = improvement_pairs();
  for (const auto& row : rows) {
    for (int c = 0; c < 8; ++c) {
      std::int64_t a = 0, b = 0;
      for (int col = 0; col < 6; ++col) {
        if (kPilotAlgorithms[col] == pairs[c].numerator) a = row.raw[col];
        if (kPilotAlgorithms[col] == pairs[c].baseline) b = row.raw[col];
      }
      CHECK(row.improvements[c] == doctest::Approx(improvement(a, b)).epsilon(1e-9));
    }
    // Oracle bound: gap-to-optimum never negative.
    REQUIRE(row.optimum);
    for (int col = 0; col < 6; ++col) CHECK(row.raw[col] >= *row.optimum);
  }
}

TEST_CASE("run_pilot: deterministic in the base seed") {
  PilotConfig cfg;
  cfg.cities = 6;
  cfg.instances = 2;
  cfg.budget = 1500;
  cfg.base_seed = 99;
  cfg.ga.population_size = 20;
  auto a = emit_report(run_pilot(cfg), ReportFormat::csv);
  auto b = emit_report(run_pilot(cfg), ReportFormat::csv);
  CHECK(a == b);
}

TEST_CASE("emit_report: csv shape, json count, markdown mirror") {
  PilotConfig cfg;
  cfg.cities = 5;
  cfg.instances = 2;
  cfg.budget = 1000;
  cfg.ga.population_size = 10;
  auto rows = run_pilot(cfg);

  auto csv = emit_report(rows, ReportFormat::csv);
  int lines = 0;
  for (char ch : csv) lines += ch == '\n';
  CHECK(lines == 3);  // header + 2 rows

  auto md = emit_report(rows, ReportFormat::markdown);
  CHECK(md.find("| index |") == 0);

  auto json = emit_report(rows, ReportFormat::json);
  CHECK(json.find("\"index\": 1") != std::string::npos);
  CHECK(json.find("\"index\": 2") != std::string::npos);
  CHECK(json.find("\"index\": 3") == std::string::npos);

  // csv -> parse -> emit round trip is byte-identical.
  CHECK(emit_report(parse_report_csv(csv), ReportFormat::csv) == csv);
}

TEST_CASE("emit_report: empty input rejected") {
  CHECK_THROWS_AS(emit_report({}, ReportFormat::csv), ValidationError);
}
