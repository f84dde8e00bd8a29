#include "atsp/pilot.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace atsp {

const std::array<ImprovementPair, 8>& improvement_pairs() {
  static const std::array<ImprovementPair, 8> pairs = {{
      {"ga_over_sa", Algorithm::ga, Algorithm::sa},
      {"ga_over_ga_sa", Algorithm::ga, Algorithm::ga_sa},
      {"ga_sa_over_sa", Algorithm::ga_sa, Algorithm::sa},
      {"kmeans_over_ga", Algorithm::kmeans, Algorithm::ga},
      {"kmeans_over_ga_sa", Algorithm::kmeans, Algorithm::ga_sa},
      {"k_ga_over_kmeans", Algorithm::k_ga, Algorithm::kmeans},
      {"k_ga_over_k_ga_sa", Algorithm::k_ga, Algorithm::k_ga_sa},
      {"k_ga_sa_over_kmeans", Algorithm::k_ga_sa, Algorithm::kmeans},
  }};
  return pairs;
}

double improvement(std::int64_t cost_a, std::int64_t cost_b) {
  if (cost_b <= 0) {
    throw std::domain_error("improvement: baseline cost must be > 0");
  }
  return 100.0 * static_cast<double>(cost_b - cost_a) /
         static_cast<double>(cost_b);
}

namespace {

int pilot_column(Algorithm a) {
  for (int c = 0; c < 6; ++c) {
    if (kPilotAlgorithms[c] == a) return c;
  }
  throw std::logic_error("not a pilot algorithm");
}

std::array<double, 8> improvements_from_raw(const std::array<std::int64_t, 6>& raw) {
  std::array<double, 8> out{};
  const auto& pairs = improvement_pairs();
  for (int c = 0; c < 8; ++c) {
    out[c] = improvement(raw[pilot_column(pairs[c].numerator)],
                         raw[pilot_column(pairs[c].baseline)]);
  }
  return out;
}

std::string pct(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.5f", v);
  return buf;
}

std::vector<std::string> report_columns(bool with_optimum) {
  std::vector<std::string> cols{"index"};
  for (Algorithm a : kPilotAlgorithms) cols.emplace_back(algorithm_name(a));
  for (const auto& p : improvement_pairs()) cols.emplace_back(p.label);
  if (with_optimum) {
    cols.emplace_back("optimum");
    for (Algorithm a : kPilotAlgorithms) {
      cols.push_back("gap_" + std::string(algorithm_name(a)));
    }
  }
  return cols;
}

std::vector<std::string> report_cells(const PilotRow& row, bool with_optimum) {
  std::vector<std::string> cells{std::to_string(row.index)};
  for (std::int64_t c : row.raw) cells.push_back(std::to_string(c));
  for (double p : row.improvements) cells.push_back(pct(p));
  if (with_optimum) {
    cells.push_back(std::to_string(*row.optimum));
    for (std::int64_t c : row.raw) {
      cells.push_back(pct(100.0 * static_cast<double>(c - *row.optimum) /
                          static_cast<double>(*row.optimum)));
    }
  }
  return cells;
}

}  // namespace

std::vector<PilotRow> run_pilot(const PilotConfig& config) {
  if (config.instances < 1) throw ValidationError("pilot: instances must be >= 1");
  if (config.with_exact && config.cities > 18) {
    throw ValidationError("pilot: exact reference requires cities <= 18");
  }

  RandomSource root(config.base_seed);
  Budget budget{config.budget};
  std::vector<PilotRow> rows;
  rows.reserve(config.instances);

  for (int i = 1; i <= config.instances; ++i) {
    GeneratorConfig gc;
    gc.n = config.cities;
    gc.seed = config.base_seed + static_cast<std::uint64_t>(i);
    gc.coord_box = config.coord_box;
    gc.asymmetry_alpha = config.asymmetry_alpha;
    gc.name = "pilot-" + std::to_string(i);
    RandomSource gen_src(gc.seed);
    Instance inst = generate_instance(gc, gen_src);

    PilotRow row;
    row.index = i;
    try {
      for (int c = 0; c < 6; ++c) {
        Algorithm algo = kPilotAlgorithms[c];
        RandomSource src = root.derive_child(
            "pilot/i" + std::to_string(i) + "/" +
            std::string(algorithm_name(algo)));
        SolveReport rep;
        switch (algo) {
          case Algorithm::kmeans:
            rep = solve_cluster_heuristic(inst, config.km, src);
            break;
          case Algorithm::ga:
            rep = solve_ga(inst, config.ga, budget, src);
            break;
          case Algorithm::sa:
            rep = solve_sa(inst, config.sa, budget, src);
            break;
          case Algorithm::ga_sa:
            rep = solve_ga_sa(inst, config.ga, config.sa, budget, src);
            break;
          case Algorithm::k_ga:
            rep = solve_k_ga(inst, config.km, config.ga, budget, src);
            break;
          case Algorithm::k_ga_sa:
            rep = solve_k_ga_sa(inst, config.km, config.ga, config.sa, budget, src);
            break;
          default:
            throw std::logic_error("unexpected pilot algorithm");
        }
        row.raw[c] = rep.best.cost;
      }
      if (config.with_exact) row.optimum = solve_exact(inst).best.cost;
    } catch (const std::exception& e) {
      throw ValidationError("pilot instance " + std::to_string(i) + " (" +
                            inst.name + "): " + e.what());
    }
    row.improvements = improvements_from_raw(row.raw);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string emit_report(const std::vector<PilotRow>& rows, ReportFormat format) {
  if (rows.empty()) throw ValidationError("emit_report: no rows");
  const bool with_optimum = rows.front().optimum.has_value();
  const auto cols = report_columns(with_optimum);

  if (format == ReportFormat::csv || format == ReportFormat::markdown) {
    const bool md = format == ReportFormat::markdown;
    std::ostringstream out;
    auto emit_line = [&](const std::vector<std::string>& cells) {
      if (md) out << "| ";
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c) out << (md ? " | " : ",");
        out << cells[c];
      }
      if (md) out << " |";
      out << '\n';
    };
    emit_line(cols);
    if (md) {
      out << '|';
      for (std::size_t c = 0; c < cols.size(); ++c) out << " --- |";
      out << '\n';
    }
    for (const auto& row : rows) emit_line(report_cells(row, with_optimum));
    return out.str();
  }

  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json rec;
    rec["index"] = row.index;
    for (int c = 0; c < 6; ++c) {
      rec["raw"][std::string(algorithm_name(kPilotAlgorithms[c]))] = row.raw[c];
    }
    for (int c = 0; c < 8; ++c) {
      rec["improvements"][std::string(improvement_pairs()[c].label)] =
          row.improvements[c];
    }
    if (with_optimum) {
      rec["optimum"] = *row.optimum;
      for (int c = 0; c < 6; ++c) {
        rec["gaps"][std::string(algorithm_name(kPilotAlgorithms[c]))] =
            100.0 * static_cast<double>(row.raw[c] - *row.optimum) /
            static_cast<double>(*row.optimum);
      }
    }
    arr.push_back(std::move(rec));
  }
  return arr.dump(2) + "\n";
}

std::vector<PilotRow> parse_report_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty report");
  const bool with_optimum = line.find(",optimum,") != std::string::npos;
  std::vector<PilotRow> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    const std::size_t want = with_optimum ? 22u : 15u;
    if (cells.size() != want) {
      throw ParseError("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(want) + " cells, got " +
                       std::to_string(cells.size()));
    }
    PilotRow pr;
    pr.index = std::stoi(cells[0]);
    for (int c = 0; c < 6; ++c) pr.raw[c] = std::stoll(cells[1 + c]);
    for (int c = 0; c < 8; ++c) pr.improvements[c] = std::stod(cells[7 + c]);
    if (with_optimum) pr.optimum = std::stoll(cells[15]);
    rows.push_back(std::move(pr));
  }
  return rows;
}

std::vector<FixtureRow> parse_fixture(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<FixtureRow> rows;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {  // header
      first = false;
      continue;
    }
    std::istringstream row(line);
    std::string cell;
    std::vector<double> values;
    while (std::getline(row, cell, ',')) {
      try {
        std::size_t pos = 0;
        values.push_back(std::stod(cell, &pos));
        if (pos != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) +
                         ": non-numeric cell '" + cell + "'");
      }
    }
    if (values.size() != 14) {
      throw ParseError("line " + std::to_string(lineno) + ": expected 14 cells, got " +
                       std::to_string(values.size()));
    }
    FixtureRow fr;
    for (int c = 0; c < 6; ++c) fr.raw[c] = std::llround(values[c]);
    for (int c = 0; c < 8; ++c) fr.printed[c] = values[6 + c];
    rows.push_back(fr);
  }
  if (rows.empty()) throw ParseError("fixture has no data rows");
  return rows;
}

std::vector<FixtureRow> parse_fixture_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open: " + path.string());
  std::ostringstream buf;
  buf << f.rdbuf();
  try {
    return parse_fixture(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

TableReport verify_paper_table(const std::vector<FixtureRow>& rows,
                               double tolerance) {
  TableReport report;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto recomputed = improvements_from_raw(rows[r].raw);
    for (int c = 0; c < 8; ++c) {
      CellCheck cell;
      cell.row = static_cast<int>(r) + 1;
      cell.column = c;
      cell.printed = rows[r].printed[c];
      cell.recomputed = recomputed[c];
      cell.match = std::fabs(cell.recomputed - cell.printed) <= tolerance;
      report.matched += cell.match ? 1 : 0;
      ++report.total;
      report.cells.push_back(cell);
    }
  }
  return report;
}

}  // namespace atsp
