#pragma once

#include "atsp/instance.hpp"
#include "atsp/random.hpp"

namespace atsp {

struct GaParams {
  int population_size = 100;
  int tournament_size = 3;
  int elite_count = 2;
  double crossover_rate = 0.9;
  double mutation_rate = 0.2;  // per-offspring swap probability
  double operator_mix = 0.5;   // P(uniform-order crossover) vs swap crossover
};

struct SaParams {
  double initial_acceptance = 0.8;
  double cooling_ratio = 0.95;   // beta, geometric per epoch
  int epoch_length = 0;          // proposals per temperature; 0 means 100*n
  double min_temperature_ratio = 1e-4;
  double move_mix = 0.5;         // P(insertion move) vs swap move
};

void validate_params(const GaParams& p);
void validate_params(const SaParams& p);

// Held-Karp dynamic program, provably optimal, n <= 18.
SolveReport solve_exact(const Instance& inst);

// Greedy from the depot, ties broken by lowest city index.
SolveReport solve_nearest_neighbor(const Instance& inst);

// Best of uniformly random depot-rooted permutations.
SolveReport solve_random_walk(const Instance& inst, Budget budget,
                              RandomSource& source);

SolveReport solve_ga(const Instance& inst, const GaParams& params,
                     Budget budget, RandomSource& source);

SolveReport solve_sa(const Instance& inst, const SaParams& params,
                     Budget budget, RandomSource& source,
                     const Tour* initial = nullptr);

// Permutation-safe crossovers over depot-rooted orders. Exposed for tests
// and reused by the hybrid solvers.
std::vector<int> crossover_uniform_order(std::span<const int> parent_a,
                                         std::span<const int> parent_b,
                                         RandomSource& source);
std::vector<int> crossover_swap(std::span<const int> parent_a,
                                std::span<const int> parent_b,
                                RandomSource& source);

// Shared pieces (used by hybrids; not part of the CLI surface).
namespace detail {

std::vector<int> random_tour_order(const Instance& inst, RandomSource& source);

// Calibrates T0 so the mean uphill delta among `samples` random neighbor
// moves is accepted with probability `initial_acceptance`.
double calibrate_initial_temperature(Evaluator& eval, std::span<const int> start,
                                     double initial_acceptance,
                                     double move_mix, RandomSource& source,
                                     int samples = 100);

// Applies one random neighbor move (insertion or swap per move_mix) to
// `order` in place, never touching position 0.
void random_neighbor_move(std::vector<int>& order, double move_mix,
                          RandomSource& source);

// One SA epoch at fixed temperature; mutates `current`/`current_cost` and
// updates `best` when improved. Stops early if the evaluator runs dry.
void sa_epoch(const Instance& inst, Evaluator& eval, std::vector<int>& current,
              std::int64_t& current_cost, Tour& best, double temperature,
              int epoch_length, double move_mix, RandomSource& source);

// Generational GA loop over a caller-provided initial population. When
// sa != nullptr the best elite_count offspring receive one SA epoch per
// generation (memetic coupling), with the shared temperature cooled by beta
// each generation.
SolveReport ga_loop(const Instance& inst, const GaParams& params,
                    const SaParams* sa, Budget budget, RandomSource& source,
                    std::vector<std::vector<int>> initial_population,
                    Algorithm algorithm,
                    std::vector<std::int64_t>* generation_best = nullptr);

}  // namespace detail

}  // namespace atsp
