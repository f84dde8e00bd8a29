#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "atsp/hybrids.hpp"
#include "atsp/instance_io.hpp"
#include "atsp/solvers.hpp"

namespace atsp {

// The six benchmarked algorithms, in the comparison table's column order.
constexpr std::array<Algorithm, 6> kPilotAlgorithms = {
    Algorithm::kmeans, Algorithm::ga,      Algorithm::sa,
    Algorithm::ga_sa,  Algorithm::k_ga_sa, Algorithm::k_ga,
};

struct ImprovementPair {
  std::string_view label;
  Algorithm numerator;  // A, the algorithm being credited
  Algorithm baseline;   // B
};

// Fixed pairwise comparison list, in output column order.
const std::array<ImprovementPair, 8>& improvement_pairs();

// 100 * (cost_b - cost_a) / cost_b; positive means A beats baseline B.
double improvement(std::int64_t cost_a, std::int64_t cost_b);

struct PilotRow {
  int index = 0;  // 1-based
  std::array<std::int64_t, 6> raw;        // kPilotAlgorithms order
  std::array<double, 8> improvements;     // improvement_pairs() order
  std::optional<std::int64_t> optimum;    // when the exact solver ran
};

struct PilotConfig {
  int cities = 14;
  int instances = 14;
  std::uint64_t base_seed = 0;
  std::int64_t budget = 50000;
  bool with_exact = true;
  double coord_box = 1000.0;
  double asymmetry_alpha = 0.3;
  GaParams ga;
  SaParams sa;
  KMeansParams km;
};

// Generates `instances` seeded instances and runs the six-algorithm suite on
// each with per-(instance, algorithm) derived seeds. Deterministic in
// base_seed.
std::vector<PilotRow> run_pilot(const PilotConfig& config);

enum class ReportFormat { csv, markdown, json };

std::string emit_report(const std::vector<PilotRow>& rows, ReportFormat format);

// Inverse of the CSV emitter, for round-tripping stored reports.
std::vector<PilotRow> parse_report_csv(const std::string& text);

// Fixture: CSV of printed raw costs and printed percentages per row.
struct FixtureRow {
  std::array<std::int64_t, 6> raw;
  std::array<double, 8> printed;
};

std::vector<FixtureRow> parse_fixture(const std::string& text);
std::vector<FixtureRow> parse_fixture_file(const std::filesystem::path& path);

struct CellCheck {
  int row = 0;     // 1-based
  int column = 0;  // 0-based into improvement_pairs()
  double printed = 0.0;
  double recomputed = 0.0;
  bool match = false;
};

struct TableReport {
  std::vector<CellCheck> cells;  // row-major, 8 per fixture row
  int matched = 0;
  int total = 0;
};

// Recomputes every percentage cell from the fixture's raw costs and diffs
// against the printed values.
TableReport verify_paper_table(const std::vector<FixtureRow>& rows,
                               double tolerance = 0.01);

}  // namespace atsp
