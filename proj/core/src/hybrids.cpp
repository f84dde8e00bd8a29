#include "atsp/hybrids.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace atsp {
namespace {

double sq_dist(const Point& a, const Point& b) {
  double dx = a.x - b.x;
  double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

double wcss_of(const std::vector<Point>& points, const std::vector<int>& assign,
               const std::vector<Point>& centroids) {
  double total = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    total += sq_dist(points[i], centroids[assign[i]]);
  }
  return total;
}

}  // namespace

int default_cluster_count(int n_points) {
  int k = static_cast<int>(std::llround(std::sqrt(n_points / 2.0)));
  return std::clamp(k, 1, std::max(n_points, 1));
}

Clustering kmeans(const std::vector<Point>& points, const KMeansParams& params,
                  RandomSource& source, std::vector<double>* wcss_trace) {
  const int n = static_cast<int>(points.size());
  if (n == 0) throw ValidationError("kmeans: no points");
  const int k = params.k > 0 ? params.k : default_cluster_count(n);
  if (k > n) {
    throw ValidationError("kmeans: k=" + std::to_string(k) + " exceeds " +
                          std::to_string(n) + " points");
  }

  // Seed centroids with k distinct points.
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  source.shuffle(idx);
  std::vector<Point> centroids(k);
  for (int c = 0; c < k; ++c) centroids[c] = points[idx[c]];

  std::vector<int> assign(n, -1);
  std::vector<int> prev_assign;
  for (int iter = 0; iter < params.max_iterations; ++iter) {
    prev_assign = assign;

    for (int i = 0; i < n; ++i) {
      int best = 0;
      double best_d = sq_dist(points[i], centroids[0]);
      for (int c = 1; c < k; ++c) {
        double d = sq_dist(points[i], centroids[c]);
        if (d < best_d) {
          best = c;
          best_d = d;
        }
      }
      assign[i] = best;
    }

    // Empty-cluster repair: move the globally farthest point into the empty
    // cluster and park the centroid on it.
    std::vector<int> count(k, 0);
    for (int a : assign) ++count[a];
    for (int c = 0; c < k; ++c) {
      while (count[c] == 0) {
        int far_point = -1;
        double far_d = -1.0;
        for (int i = 0; i < n; ++i) {
          if (count[assign[i]] < 2) continue;
          double d = sq_dist(points[i], centroids[assign[i]]);
          if (d > far_d) {
            far_d = d;
            far_point = i;
          }
        }
        if (far_point < 0) break;  // unreachable when k <= n
        --count[assign[far_point]];
        assign[far_point] = c;
        ++count[c];
        centroids[c] = points[far_point];
      }
    }

    if (assign == prev_assign) {
      if (wcss_trace) wcss_trace->push_back(wcss_of(points, assign, centroids));
      break;
    }

    for (int c = 0; c < k; ++c) centroids[c] = {0.0, 0.0};
    std::vector<int> sz(k, 0);
    for (int i = 0; i < n; ++i) {
      centroids[assign[i]].x += points[i].x;
      centroids[assign[i]].y += points[i].y;
      ++sz[assign[i]];
    }
    for (int c = 0; c < k; ++c) {
      centroids[c].x /= sz[c];
      centroids[c].y /= sz[c];
    }
    if (wcss_trace) wcss_trace->push_back(wcss_of(points, assign, centroids));
  }

  Clustering result;
  result.assignments = std::move(assign);
  result.centroids = std::move(centroids);
  result.wcss = wcss_of(points, result.assignments, result.centroids);
  return result;
}

namespace {

// Strict-descent local search over insertion and swap moves, first
// improvement, repeated until a full pass finds nothing.
void descent(const Instance& inst, Evaluator& eval, std::vector<int>& order,
             std::int64_t& cost) {
  const int n = inst.n;
  if (n < 3) return;
  bool improved = true;
  std::vector<int> cand;
  while (improved) {
    improved = false;
    for (int i = 1; i < n && !improved; ++i) {
      for (int j = 1; j < n && !improved; ++j) {
        if (i == j) continue;
        cand = order;
        std::swap(cand[i], cand[j]);
        std::int64_t c = eval.cost(cand);
        if (c < cost) {
          order.swap(cand);
          cost = c;
          improved = true;
          break;
        }
        cand = order;
        int city = cand[i];
        cand.erase(cand.begin() + i);
        cand.insert(cand.begin() + (j > i ? j - 1 : j), city);
        c = eval.cost(cand);
        if (c < cost) {
          order.swap(cand);
          cost = c;
          improved = true;
        }
      }
    }
  }
}

Tour cluster_route(const Instance& inst, const KMeansParams& params,
                   RandomSource& source, Evaluator& eval) {
  if (!inst.coords) {
    throw ValidationError("cluster heuristic requires coordinates");
  }
  const int n = inst.n;
  if (n == 1) return Tour{{inst.depot}, 0};

  std::vector<int> cities;  // non-depot, original indices
  std::vector<Point> pts;
  for (int c = 0; c < n; ++c) {
    if (c == inst.depot) continue;
    cities.push_back(c);
    pts.push_back((*inst.coords)[c]);
  }

  KMeansParams kp = params;
  if (kp.k == 0) kp.k = default_cluster_count(static_cast<int>(pts.size()));
  kp.k = std::min<int>(kp.k, static_cast<int>(pts.size()));
  Clustering cl = kmeans(pts, kp, source);
  const int k = static_cast<int>(cl.centroids.size());

  // Clusters by polar angle of centroid around the depot, from angle 0,
  // ties by cluster id.
  const Point depot_pt = (*inst.coords)[inst.depot];
  std::vector<std::pair<double, int>> angle_order;
  angle_order.reserve(k);
  for (int c = 0; c < k; ++c) {
    double a = std::atan2(cl.centroids[c].y - depot_pt.y,
                          cl.centroids[c].x - depot_pt.x);
    if (a < 0) a += 2 * std::numbers::pi;
    angle_order.emplace_back(a, c);
  }
  std::sort(angle_order.begin(), angle_order.end());

  Tour t;
  t.order.reserve(n);
  t.order.push_back(inst.depot);
  int prev = inst.depot;
  for (auto [angle, c] : angle_order) {
    std::vector<int> members;
    for (std::size_t i = 0; i < cities.size(); ++i) {
      if (cl.assignments[i] == c) members.push_back(cities[i]);
    }
    while (!members.empty()) {
      std::size_t best = 0;
      for (std::size_t m = 1; m < members.size(); ++m) {
        if (inst.cost(prev, members[m]) < inst.cost(prev, members[best])) {
          best = m;
        }
      }
      prev = members[best];
      t.order.push_back(prev);
      members.erase(members.begin() + best);
    }
  }

  t.cost = eval.cost(t.order);
  descent(inst, eval, t.order, t.cost);
  return t;
}

std::vector<std::vector<int>> cluster_seeded_population(
    const Instance& inst, const Tour& seed_tour, int population_size,
    RandomSource& source) {
  std::vector<std::vector<int>> pop;
  pop.reserve(population_size);
  pop.push_back(seed_tour.order);
  for (int i = 1; i < population_size; ++i) {
    std::vector<int> copy = seed_tour.order;
    if (inst.n >= 3) {
      int swaps = 1 + static_cast<int>(source.next_below(3));
      for (int s = 0; s < swaps; ++s) {
        auto [a, b] = source.next_distinct_pair(1, inst.n);
        std::swap(copy[a], copy[b]);
      }
    }
    pop.push_back(std::move(copy));
  }
  return pop;
}

constexpr std::int64_t kUnmetered = std::numeric_limits<std::int64_t>::max() / 2;

}  // namespace

SolveReport solve_cluster_heuristic(const Instance& inst,
                                    const KMeansParams& params,
                                    RandomSource& source) {
  require_valid(inst);
  Evaluator eval(inst, Budget{kUnmetered});
  Tour t = cluster_route(inst, params, source, eval);
  SolveReport r;
  r.algorithm = Algorithm::kmeans;
  r.instance_name = inst.name;
  r.seed = source.seed();
  r.evaluations_used = eval.used();
  r.elapsed_millis = eval.elapsed_millis();
  r.best = std::move(t);
  return r;
}

SolveReport solve_ga_sa(const Instance& inst, const GaParams& ga,
                        const SaParams& sa, Budget budget,
                        RandomSource& source) {
  require_valid(inst);
  validate_params(ga);
  std::vector<std::vector<int>> pop;
  pop.reserve(ga.population_size);
  for (int i = 0; i < ga.population_size; ++i) {
    pop.push_back(detail::random_tour_order(inst, source));
  }
  return detail::ga_loop(inst, ga, &sa, budget, source, std::move(pop),
                         Algorithm::ga_sa);
}

SolveReport solve_k_ga(const Instance& inst, const KMeansParams& km,
                       const GaParams& ga, Budget budget, RandomSource& source) {
  require_valid(inst);
  validate_params(ga);
  Evaluator seed_eval(inst, Budget{kUnmetered});
  Tour seed_tour = cluster_route(inst, km, source, seed_eval);
  auto pop = cluster_seeded_population(inst, seed_tour, ga.population_size, source);
  return detail::ga_loop(inst, ga, nullptr, budget, source, std::move(pop),
                         Algorithm::k_ga);
}

SolveReport solve_k_ga_sa(const Instance& inst, const KMeansParams& km,
                          const GaParams& ga, const SaParams& sa, Budget budget,
                          RandomSource& source) {
  require_valid(inst);
  validate_params(ga);
  Evaluator seed_eval(inst, Budget{kUnmetered});
  Tour seed_tour = cluster_route(inst, km, source, seed_eval);
  auto pop = cluster_seeded_population(inst, seed_tour, ga.population_size, source);
  return detail::ga_loop(inst, ga, &sa, budget, source, std::move(pop),
                         Algorithm::k_ga_sa);
}

}  // namespace atsp
