// Command-line workbench: instance generation, RFID log ingestion, the
// solver suite, the pilot benchmark, and the comparison-table checker.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "atsp/hybrids.hpp"
#include "atsp/instance_io.hpp"
#include "atsp/pilot.hpp"
#include "atsp/rfid_ingest.hpp"
#include "atsp/solvers.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;
constexpr int kExitSolverPrecondition = 3;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw atsp::IoError("cannot open for writing: " + path);
  f << content;
  if (!f) throw atsp::IoError("write failed: " + path);
}

nlohmann::json report_to_json(const atsp::SolveReport& r, const atsp::Budget& b) {
  nlohmann::json j;
  j["algorithm"] = std::string(atsp::algorithm_name(r.algorithm));
  j["instance"] = r.instance_name;
  j["seed"] = r.seed;
  j["budget"] = b.max_evaluations;
  j["evaluations_used"] = r.evaluations_used;
  j["elapsed_millis"] = r.elapsed_millis;
  j["best"]["cost"] = r.best.cost;
  j["best"]["order"] = r.best.order;
  return j;
}

struct SolveOptions {
  std::string instance_path;
  std::string algo = "ga";
  std::uint64_t seed = 0;
  std::int64_t budget = 50000;
  std::string out;
  atsp::GaParams ga;
  atsp::SaParams sa;
  atsp::KMeansParams km;
};

int run_solve(const SolveOptions& opt) {
  atsp::Instance inst = atsp::parse_instance_file(opt.instance_path);
  auto algo = atsp::algorithm_from_name(opt.algo);
  if (!algo) {
    std::cerr << "unknown algorithm '" << opt.algo << "'\n";
    return kExitValidation;
  }
  atsp::Budget budget{opt.budget};
  atsp::RandomSource source(opt.seed);
  atsp::SolveReport rep;
  try {
    switch (*algo) {
      case atsp::Algorithm::exact:
        rep = atsp::solve_exact(inst);
        break;
      case atsp::Algorithm::nn:
        rep = atsp::solve_nearest_neighbor(inst);
        break;
      case atsp::Algorithm::random_walk:
        rep = atsp::solve_random_walk(inst, budget, source);
        break;
      case atsp::Algorithm::ga:
        rep = atsp::solve_ga(inst, opt.ga, budget, source);
        break;
      case atsp::Algorithm::sa:
        rep = atsp::solve_sa(inst, opt.sa, budget, source);
        break;
      case atsp::Algorithm::ga_sa:
        rep = atsp::solve_ga_sa(inst, opt.ga, opt.sa, budget, source);
        break;
      case atsp::Algorithm::kmeans:
        rep = atsp::solve_cluster_heuristic(inst, opt.km, source);
        break;
      case atsp::Algorithm::k_ga:
        rep = atsp::solve_k_ga(inst, opt.km, opt.ga, budget, source);
        break;
      case atsp::Algorithm::k_ga_sa:
        rep = atsp::solve_k_ga_sa(inst, opt.km, opt.ga, opt.sa, budget, source);
        break;
    }
  } catch (const atsp::ValidationError& e) {
    std::cerr << "solver precondition: " << e.what() << "\n";
    return kExitSolverPrecondition;
  }
  write_output(opt.out, report_to_json(rep, budget).dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ATSP solver workbench"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a random instance");
  atsp::GeneratorConfig gen_cfg;
  std::string gen_out;
  gen->add_option("--cities", gen_cfg.n, "City count")->required();
  gen->add_option("--seed", gen_cfg.seed, "Random seed");
  gen->add_option("--coord-box", gen_cfg.coord_box, "Coordinate square side");
  gen->add_option("--asymmetry", gen_cfg.asymmetry_alpha,
                  "Max relative arc perturbation in [0,1]");
  gen->add_option("--name", gen_cfg.name, "Instance name");
  gen->add_option("--out", gen_out, "Output path (default stdout)");

  // ingest
  auto* ing = app.add_subcommand("ingest", "Build an instance from an RFID event log");
  std::string ing_events, ing_depot, ing_out;
  double ing_alpha = 0.3;
  std::uint64_t ing_seed = 0;
  ing->add_option("--events", ing_events, "Event log CSV")->required();
  ing->add_option("--depot", ing_depot, "Depot reader id")->required();
  ing->add_option("--asymmetry", ing_alpha, "Max relative arc perturbation");
  ing->add_option("--seed", ing_seed, "Random seed");
  ing->add_option("--out", ing_out, "Output path (default stdout)");

  // solve
  auto* sol = app.add_subcommand("solve", "Run one solver on an instance");
  SolveOptions sopt;
  sol->add_option("--instance", sopt.instance_path, "Instance file")->required();
  sol->add_option("--algo", sopt.algo,
                  "exact|nn|random-walk|ga|sa|ga-sa|kmeans|k-ga|k-ga-sa")
      ->required();
  sol->add_option("--seed", sopt.seed, "Random seed");
  sol->add_option("--budget", sopt.budget, "Tour-evaluation budget");
  sol->add_option("--out", sopt.out, "Report path, JSON (default stdout)");
  sol->add_option("--pop", sopt.ga.population_size, "GA population size");
  sol->add_option("--elite", sopt.ga.elite_count, "GA elite count");
  sol->add_option("--tournament", sopt.ga.tournament_size, "GA tournament size");
  sol->add_option("--crossover", sopt.ga.crossover_rate, "GA crossover rate");
  sol->add_option("--mutation", sopt.ga.mutation_rate, "GA mutation rate");
  sol->add_option("--operator-mix", sopt.ga.operator_mix,
                  "P(uniform-order crossover) per mating");
  sol->add_option("--beta", sopt.sa.cooling_ratio, "SA cooling ratio");
  sol->add_option("--acceptance", sopt.sa.initial_acceptance,
                  "SA initial acceptance probability");
  sol->add_option("--epoch", sopt.sa.epoch_length, "SA epoch length (0 = 100*n)");
  sol->add_option("--move-mix", sopt.sa.move_mix, "P(insertion move) per proposal");
  sol->add_option("--k", sopt.km.k, "Cluster count (0 = auto)");

  // bench
  auto* ben = app.add_subcommand("bench", "Run the pilot benchmark");
  atsp::PilotConfig pcfg;
  std::string ben_exact = "on", ben_format = "csv", ben_out;
  ben->add_option("--cities", pcfg.cities, "Cities per instance");
  ben->add_option("--instances", pcfg.instances, "Instance count");
  ben->add_option("--seed", pcfg.base_seed, "Base seed");
  ben->add_option("--budget", pcfg.budget, "Per-solver evaluation budget");
  ben->add_option("--exact", ben_exact, "on|off: include exact optimum columns")
      ->check(CLI::IsMember({"on", "off"}));
  ben->add_option("--format", ben_format, "csv|markdown|json")
      ->check(CLI::IsMember({"csv", "markdown", "json"}));
  ben->add_option("--asymmetry", pcfg.asymmetry_alpha, "Max relative arc perturbation");
  ben->add_option("--coord-box", pcfg.coord_box, "Coordinate square side");
  ben->add_option("--pop", pcfg.ga.population_size, "GA population size");
  ben->add_option("--k", pcfg.km.k, "Cluster count (0 = auto)");
  ben->add_option("--out", ben_out, "Output path (default stdout)");

  // verify-table
  auto* ver = app.add_subcommand("verify-table",
                                 "Recompute the comparison table's percentages");
  std::string ver_fixture;
  double ver_tolerance = 0.01;
  ver->add_option("--fixture", ver_fixture, "Fixture CSV")->required();
  ver->add_option("--tolerance", ver_tolerance, "Match tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      atsp::RandomSource source(gen_cfg.seed);
      atsp::Instance inst = atsp::generate_instance(gen_cfg, source);
      write_output(gen_out, atsp::write_instance(inst));
      return kExitOk;
    }
    if (ing->parsed()) {
      auto events = atsp::parse_event_log_file(ing_events);
      atsp::RandomSource source(ing_seed);
      atsp::Instance inst =
          atsp::build_instance_from_events(events, ing_depot, ing_alpha, source);
      write_output(ing_out, atsp::write_instance(inst));
      return kExitOk;
    }
    if (sol->parsed()) {
      return run_solve(sopt);
    }
    if (ben->parsed()) {
      pcfg.with_exact = ben_exact == "on";
      auto rows = atsp::run_pilot(pcfg);
      atsp::ReportFormat fmt = ben_format == "csv" ? atsp::ReportFormat::csv
                               : ben_format == "markdown"
                                   ? atsp::ReportFormat::markdown
                                   : atsp::ReportFormat::json;
      write_output(ben_out, atsp::emit_report(rows, fmt));
      return kExitOk;
    }
    if (ver->parsed()) {
      auto rows = atsp::parse_fixture_file(ver_fixture);
      auto report = atsp::verify_paper_table(rows, ver_tolerance);
      for (const auto& cell : report.cells) {
        if (cell.match) continue;
        std::cout << "mismatch row " << cell.row << " "
                  << atsp::improvement_pairs()[cell.column].label << ": printed "
                  << cell.printed << ", recomputed " << cell.recomputed << "\n";
      }
      std::cout << "matched " << report.matched << "/" << report.total
                << " cells within " << ver_tolerance << "\n";
      return kExitOk;
    }
  } catch (const atsp::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const atsp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const atsp::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
