#pragma once

#include "atsp/instance.hpp"
#include "atsp/random.hpp"
#include "atsp/solvers.hpp"

namespace atsp {

struct KMeansParams {
  int k = 0;  // 0 means round(sqrt(n_points / 2)), clamped to [1, n_points]
  int max_iterations = 100;
};

struct Clustering {
  std::vector<int> assignments;  // point index -> cluster id
  std::vector<Point> centroids;
  double wcss = 0.0;
};

// Lloyd's iteration with deterministic seeding (k distinct points sampled
// uniformly) and empty-cluster repair by farthest-point reseeding.
// When wcss_trace is given, the WCSS after every completed iteration is
// appended to it (a non-increasing sequence).
Clustering kmeans(const std::vector<Point>& points, const KMeansParams& params,
                  RandomSource& source, std::vector<double>* wcss_trace = nullptr);

int default_cluster_count(int n_points);

// Cluster-first route-second: k-means over the non-depot cities, clusters
// ordered by centroid polar angle around the depot, nearest-neighbor routing
// within clusters, then strict-descent insertion/swap local search.
SolveReport solve_cluster_heuristic(const Instance& inst,
                                    const KMeansParams& params,
                                    RandomSource& source);

// Memetic GA: the best elite_count offspring of each generation receive one
// SA epoch at a shared, geometrically cooled temperature.
SolveReport solve_ga_sa(const Instance& inst, const GaParams& ga,
                        const SaParams& sa, Budget budget, RandomSource& source);

// GA whose initial population is the cluster-heuristic tour plus mutated
// copies of it (1-3 random swaps each).
SolveReport solve_k_ga(const Instance& inst, const KMeansParams& km,
                       const GaParams& ga, Budget budget, RandomSource& source);

SolveReport solve_k_ga_sa(const Instance& inst, const KMeansParams& km,
                          const GaParams& ga, const SaParams& sa, Budget budget,
                          RandomSource& source);

}  // namespace atsp
