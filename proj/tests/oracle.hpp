#pragma once

// Test-only oracles, independent of the solver implementations.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "atsp/instance.hpp"
#include "atsp/instance_io.hpp"

namespace testutil {

// Exhaustive enumeration of all (n-1)! depot-rooted tours.
inline std::int64_t brute_force_optimum(const atsp::Instance& inst) {
  std::vector<int> rest;
  for (int c = 0; c < inst.n; ++c) {
    if (c != inst.depot) rest.push_back(c);
  }
  std::sort(rest.begin(), rest.end());
  std::int64_t best = -1;
  do {
    std::int64_t cost = 0;
    int prev = inst.depot;
    for (int c : rest) {
      cost += inst.cost(prev, c);
      prev = c;
    }
    cost += inst.cost(prev, inst.depot);
    if (best < 0 || cost < best) best = cost;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

inline atsp::Instance square_instance(std::vector<std::vector<std::int64_t>> rows,
                                      int depot = 0) {
  atsp::Instance inst;
  inst.name = "test";
  inst.n = static_cast<int>(rows.size());
  inst.depot = depot;
  for (const auto& row : rows) {
    inst.costs.insert(inst.costs.end(), row.begin(), row.end());
  }
  return inst;
}

inline atsp::Instance random_instance(int n, std::uint64_t seed,
                                      double alpha = 0.3) {
  atsp::GeneratorConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  cfg.asymmetry_alpha = alpha;
  atsp::RandomSource src(seed);
  return atsp::generate_instance(cfg, src);
}

}  // namespace testutil
