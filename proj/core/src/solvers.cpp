#include "atsp/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace atsp {

void validate_params(const GaParams& p) {
  if (p.population_size < 2) throw ValidationError("ga: population_size must be >= 2");
  if (p.tournament_size < 1) throw ValidationError("ga: tournament_size must be >= 1");
  if (p.elite_count < 0 || p.elite_count >= p.population_size) {
    throw ValidationError("ga: elite_count must be in [0, population_size)");
  }
  for (double r : {p.crossover_rate, p.mutation_rate, p.operator_mix}) {
    if (r < 0.0 || r > 1.0) throw ValidationError("ga: rates must be in [0, 1]");
  }
}

void validate_params(const SaParams& p) {
  if (p.cooling_ratio <= 0.0 || p.cooling_ratio >= 1.0) {
    throw ValidationError("sa: cooling_ratio must be in (0, 1)");
  }
  if (p.initial_acceptance <= 0.0 || p.initial_acceptance >= 1.0) {
    throw ValidationError("sa: initial_acceptance must be in (0, 1)");
  }
  if (p.epoch_length < 0) throw ValidationError("sa: epoch_length must be >= 1 (or 0 for 100*n)");
  if (p.move_mix < 0.0 || p.move_mix > 1.0) {
    throw ValidationError("sa: move_mix must be in [0, 1]");
  }
  if (p.min_temperature_ratio <= 0.0) {
    throw ValidationError("sa: min_temperature_ratio must be > 0");
  }
}

namespace {

SolveReport make_report(Algorithm algo, const Instance& inst, std::uint64_t seed,
                        const Evaluator& eval, Tour best) {
  SolveReport r;
  r.algorithm = algo;
  r.instance_name = inst.name;
  r.seed = seed;
  r.evaluations_used = eval.used();
  r.elapsed_millis = eval.elapsed_millis();
  r.best = std::move(best);
  return r;
}

}  // namespace

SolveReport solve_exact(const Instance& inst) {
  require_valid(inst);
  if (inst.n > 18) {
    throw ValidationError("instance too large for exact solver (n=" +
                          std::to_string(inst.n) + " > 18)");
  }
  Evaluator eval(inst, Budget{1});
  const int n = inst.n;
  const int depot = inst.depot;

  if (n == 1) {
    Tour t{{depot}, 0};
    t.cost = eval.cost(t.order);
    return make_report(Algorithm::exact, inst, 0, eval, std::move(t));
  }

  // Non-depot cities relabeled 0..m-1.
  std::vector<int> city(n - 1);
  for (int i = 0, k = 0; i < n; ++i) {
    if (i != depot) city[k++] = i;
  }
  const int m = n - 1;
  const std::size_t full = std::size_t{1} << m;
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;

  // dp[mask][j]: cheapest path depot -> ... -> city[j] visiting exactly mask.
  std::vector<std::int64_t> dp(full * m, inf);
  std::vector<std::int8_t> parent(full * m, -1);
  for (int j = 0; j < m; ++j) {
    dp[(std::size_t{1} << j) * m + j] = inst.cost(depot, city[j]);
  }
  for (std::size_t mask = 1; mask < full; ++mask) {
    for (int j = 0; j < m; ++j) {
      if (!(mask >> j & 1)) continue;
      std::int64_t base = dp[mask * m + j];
      if (base >= inf) continue;
      std::size_t rest = full - 1 - mask;
      for (int k = 0; k < m; ++k) {
        if (!(rest >> k & 1)) continue;
        std::size_t next = mask | (std::size_t{1} << k);
        std::int64_t cand = base + inst.cost(city[j], city[k]);
        if (cand < dp[next * m + k]) {
          dp[next * m + k] = cand;
          parent[next * m + k] = static_cast<std::int8_t>(j);
        }
      }
    }
  }

  std::int64_t best_cost = inf;
  int best_last = -1;
  for (int j = 0; j < m; ++j) {
    std::int64_t cand = dp[(full - 1) * m + j] + inst.cost(city[j], depot);
    if (cand < best_cost) {
      best_cost = cand;
      best_last = j;
    }
  }

  Tour t;
  t.order.resize(n);
  std::size_t mask = full - 1;
  int j = best_last;
  for (int pos = n - 1; pos >= 1; --pos) {
    t.order[pos] = city[j];
    int pj = parent[mask * m + j];
    mask ^= std::size_t{1} << j;
    j = pj;
  }
  t.order[0] = depot;
  t.cost = eval.cost(t.order);
  return make_report(Algorithm::exact, inst, 0, eval, std::move(t));
}

SolveReport solve_nearest_neighbor(const Instance& inst) {
  require_valid(inst);
  Evaluator eval(inst, Budget{1});
  const int n = inst.n;
  std::vector<char> visited(n, 0);
  Tour t;
  t.order.reserve(n);
  int cur = inst.depot;
  t.order.push_back(cur);
  visited[cur] = 1;
  for (int step = 1; step < n; ++step) {
    int best = -1;
    std::int64_t best_cost = 0;
    for (int c = 0; c < n; ++c) {
      if (visited[c]) continue;
      if (best < 0 || inst.cost(cur, c) < best_cost) {
        best = c;
        best_cost = inst.cost(cur, c);
      }
    }
    t.order.push_back(best);
    visited[best] = 1;
    cur = best;
  }
  t.cost = eval.cost(t.order);
  return make_report(Algorithm::nn, inst, 0, eval, std::move(t));
}

namespace detail {

std::vector<int> random_tour_order(const Instance& inst, RandomSource& source) {
  std::vector<int> rest;
  rest.reserve(inst.n - 1);
  for (int c = 0; c < inst.n; ++c) {
    if (c != inst.depot) rest.push_back(c);
  }
  source.shuffle(rest);
  std::vector<int> order;
  order.reserve(inst.n);
  order.push_back(inst.depot);
  order.insert(order.end(), rest.begin(), rest.end());
  return order;
}

void random_neighbor_move(std::vector<int>& order, double move_mix,
                          RandomSource& source) {
  const int n = static_cast<int>(order.size());
  if (n < 3) return;
  auto [a, b] = source.next_distinct_pair(1, n);
  if (source.next_bool(move_mix)) {
    // Insertion: remove the city at a, reinsert at b.
    int city = order[a];
    order.erase(order.begin() + a);
    order.insert(order.begin() + (b > a ? b - 1 : b), city);
  } else {
    std::swap(order[a], order[b]);
  }
}

double calibrate_initial_temperature(Evaluator& eval, std::span<const int> start,
                                     double initial_acceptance,
                                     double move_mix, RandomSource& source,
                                     int samples) {
  if (eval.exhausted()) return 1.0;
  std::int64_t base = eval.cost(start);
  double uphill_sum = 0.0;
  int uphill_count = 0;
  std::vector<int> probe(start.begin(), start.end());
  for (int s = 0; s < samples && !eval.exhausted(); ++s) {
    probe.assign(start.begin(), start.end());
    random_neighbor_move(probe, move_mix, source);
    std::int64_t delta = eval.cost(probe) - base;
    if (delta > 0) {
      uphill_sum += static_cast<double>(delta);
      ++uphill_count;
    }
  }
  if (uphill_count == 0) return 1.0;
  double mean_uphill = uphill_sum / uphill_count;
  return mean_uphill / -std::log(initial_acceptance);
}

void sa_epoch(const Instance& inst, Evaluator& eval, std::vector<int>& current,
              std::int64_t& current_cost, Tour& best, double temperature,
              int epoch_length, double move_mix, RandomSource& source) {
  std::vector<int> candidate;
  for (int k = 0; k < epoch_length; ++k) {
    if (eval.exhausted()) return;
    candidate = current;
    random_neighbor_move(candidate, move_mix, source);
    std::int64_t cand_cost = eval.cost(candidate);
    std::int64_t delta = cand_cost - current_cost;
    bool accept;
    if (delta <= 0) {
      accept = true;
    } else if (temperature <= 0.0) {
      accept = false;
    } else {
      accept = source.next_unit() <
               std::exp(-static_cast<double>(delta) / temperature);
    }
    if (accept) {
      current.swap(candidate);
      current_cost = cand_cost;
      if (current_cost < best.cost) {
        best.order = current;
        best.cost = current_cost;
      }
    }
  }
}

SolveReport ga_loop(const Instance& inst, const GaParams& params,
                    const SaParams* sa, Budget budget, RandomSource& source,
                    std::vector<std::vector<int>> initial_population,
                    Algorithm algorithm,
                    std::vector<std::int64_t>* generation_best) {
  validate_params(params);
  if (sa) validate_params(*sa);
  if (params.population_size > budget.max_evaluations) {
    throw ValidationError("ga: population_size exceeds evaluation budget");
  }

  Evaluator eval(inst, budget);
  const int pop_size = params.population_size;

  struct Member {
    std::vector<int> order;
    std::int64_t cost;
  };
  std::vector<Member> pop;
  pop.reserve(pop_size);
  for (auto& order : initial_population) {
    std::int64_t c = eval.cost(order);
    pop.push_back({std::move(order), c});
  }

  Tour best;
  best.cost = std::numeric_limits<std::int64_t>::max();
  auto note_best = [&](const Member& mb) {
    if (mb.cost < best.cost) {
      best.order = mb.order;
      best.cost = mb.cost;
    }
  };
  for (const auto& mb : pop) note_best(mb);

  auto tournament = [&]() -> const Member& {
    int winner = static_cast<int>(source.next_below(pop.size()));
    for (int t = 1; t < params.tournament_size; ++t) {
      int c = static_cast<int>(source.next_below(pop.size()));
      if (pop[c].cost < pop[winner].cost) winner = c;
    }
    return pop[winner];
  };

  double temperature = -1.0;  // calibrated lazily for the memetic variant
  const int sa_epoch_len =
      sa ? (sa->epoch_length > 0 ? sa->epoch_length : 100 * inst.n) : 0;

  // Tournament pressure collapses the population within a few generations,
  // after which single-swap mutation cannot leave a 1-swap local optimum.
  // After this many generations without a new best, the non-elite members
  // are replaced with fresh random tours.
  constexpr int kStagnationLimit = 20;
  int stagnant = 0;

  std::vector<int> rank(pop.size());
  while (!eval.exhausted()) {
    rank.resize(pop.size());
    std::iota(rank.begin(), rank.end(), 0);
    std::stable_sort(rank.begin(), rank.end(), [&](int a, int b) {
      return pop[a].cost < pop[b].cost;
    });

    std::vector<Member> next;
    next.reserve(pop_size);
    for (int e = 0; e < params.elite_count; ++e) next.push_back(pop[rank[e]]);

    const std::int64_t best_before = best.cost;
    if (stagnant >= kStagnationLimit) {
      stagnant = 0;
      while (static_cast<int>(next.size()) < pop_size && !eval.exhausted()) {
        auto order = random_tour_order(inst, source);
        std::int64_t c = eval.cost(order);
        next.push_back({std::move(order), c});
      }
    }

    while (static_cast<int>(next.size()) < pop_size) {
      if (eval.exhausted()) break;
      const Member& pa = tournament();
      const Member& pb = tournament();
      std::vector<int> child;
      if (source.next_bool(params.crossover_rate)) {
        child = source.next_bool(params.operator_mix)
                    ? crossover_uniform_order(pa.order, pb.order, source)
                    : crossover_swap(pa.order, pb.order, source);
      } else {
        child = pa.order;
      }
      if (inst.n >= 3 && source.next_bool(params.mutation_rate)) {
        auto [i, j] = source.next_distinct_pair(1, inst.n);
        std::swap(child[i], child[j]);
      }
      std::int64_t c = eval.cost(child);
      next.push_back({std::move(child), c});
    }
    if (next.empty()) break;
    pop.swap(next);
    for (const auto& mb : pop) note_best(mb);
    stagnant = best.cost < best_before ? 0 : stagnant + 1;

    if (sa) {
      if (temperature < 0.0) {
        temperature = detail::calibrate_initial_temperature(
            eval, best.order, sa->initial_acceptance, sa->move_mix, source,
            static_cast<int>(std::min<std::int64_t>(100, eval.remaining())));
      }
      rank.resize(pop.size());
      std::iota(rank.begin(), rank.end(), 0);
      std::stable_sort(rank.begin(), rank.end(), [&](int a, int b) {
        return pop[a].cost < pop[b].cost;
      });
      int chains = std::min<int>(std::max(params.elite_count, 1), pop_size);
      for (int e = 0; e < chains && !eval.exhausted(); ++e) {
        Member& mb = pop[rank[e]];
        sa_epoch(inst, eval, mb.order, mb.cost, best, temperature, sa_epoch_len,
                 sa->move_mix, source);
      }
      temperature *= sa->cooling_ratio;
    }

    if (generation_best) {
      std::int64_t gen_best = pop.front().cost;
      for (const auto& mb : pop) gen_best = std::min(gen_best, mb.cost);
      generation_best->push_back(gen_best);
    }
  }

  return make_report(algorithm, inst, source.seed(), eval, std::move(best));
}

}  // namespace detail

SolveReport solve_random_walk(const Instance& inst, Budget budget,
                              RandomSource& source) {
  require_valid(inst);
  if (budget.max_evaluations < 1) {
    throw ValidationError("random-walk: budget must allow at least 1 evaluation");
  }
  Evaluator eval(inst, budget);
  Tour best;
  best.cost = std::numeric_limits<std::int64_t>::max();
  while (!eval.exhausted()) {
    auto order = detail::random_tour_order(inst, source);
    std::int64_t c = eval.cost(order);
    if (c < best.cost) {
      best.order = std::move(order);
      best.cost = c;
    }
  }
  return make_report(Algorithm::random_walk, inst, source.seed(), eval,
                     std::move(best));
}

SolveReport solve_ga(const Instance& inst, const GaParams& params, Budget budget,
                     RandomSource& source) {
  require_valid(inst);
  validate_params(params);
  std::vector<std::vector<int>> pop;
  pop.reserve(params.population_size);
  for (int i = 0; i < params.population_size; ++i) {
    pop.push_back(detail::random_tour_order(inst, source));
  }
  SolveReport r = detail::ga_loop(inst, params, nullptr, budget, source,
                                  std::move(pop), Algorithm::ga);
  return r;
}

SolveReport solve_sa(const Instance& inst, const SaParams& params, Budget budget,
                     RandomSource& source, const Tour* initial) {
  require_valid(inst);
  validate_params(params);
  if (budget.max_evaluations < 1) {
    throw ValidationError("sa: budget must allow at least 1 evaluation");
  }

  Evaluator eval(inst, budget);
  std::vector<int> current =
      initial ? initial->order : detail::random_tour_order(inst, source);
  if (initial && !is_valid_tour(inst, current)) {
    throw ValidationError("sa: initial tour is not a valid depot-rooted tour");
  }
  std::int64_t current_cost = eval.cost(current);

  Tour best{current, current_cost};

  const int epoch_len = params.epoch_length > 0 ? params.epoch_length : 100 * inst.n;
  double t0 = detail::calibrate_initial_temperature(
      eval, current, params.initial_acceptance, params.move_mix, source);
  double temperature = t0;
  const double t_min = t0 * params.min_temperature_ratio;

  while (!eval.exhausted() && temperature >= t_min) {
    detail::sa_epoch(inst, eval, current, current_cost, best, temperature,
                     epoch_len, params.move_mix, source);
    temperature *= params.cooling_ratio;
  }
  return make_report(Algorithm::sa, inst, source.seed(), eval, std::move(best));
}

std::vector<int> crossover_uniform_order(std::span<const int> parent_a,
                                         std::span<const int> parent_b,
                                         RandomSource& source) {
  const int n = static_cast<int>(parent_a.size());
  if (parent_b.size() != parent_a.size()) {
    throw ValidationError("crossover: parent length mismatch");
  }
  std::vector<int> child(n, -1);
  std::vector<char> kept(n, 0);  // by city
  child[0] = parent_a.empty() ? 0 : parent_a[0];
  if (n > 0) kept[child[0]] = 1;
  for (int p = 1; p < n; ++p) {
    if (source.next_bool(0.5)) {
      child[p] = parent_a[p];
      kept[parent_a[p]] = 1;
    }
  }
  // Unkept cities flow in, in parent_b's relative order.
  int fill = 1;
  for (int p = 1; p < n; ++p) {
    int city = parent_b[p];
    if (kept[city]) continue;
    while (child[fill] != -1) ++fill;
    child[fill] = city;
  }
  return child;
}

std::vector<int> crossover_swap(std::span<const int> parent_a,
                                std::span<const int> parent_b,
                                RandomSource& source) {
  const int n = static_cast<int>(parent_a.size());
  if (parent_b.size() != parent_a.size()) {
    throw ValidationError("crossover: parent length mismatch");
  }
  std::vector<int> child(parent_a.begin(), parent_a.end());
  std::vector<int> pos(n);
  for (int p = 0; p < n; ++p) pos[child[p]] = p;
  for (int p = 1; p < n; ++p) {
    if (!source.next_bool(0.5)) continue;
    int q = pos[parent_b[p]];
    std::swap(child[p], child[q]);
    pos[child[p]] = p;
    pos[child[q]] = q;
  }
  return child;
}

}  // namespace atsp
