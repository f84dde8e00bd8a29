#include <doctest.h>

#include <algorithm>

#include "atsp/hybrids.hpp"
#include "oracle.hpp"

using namespace atsp;

TEST_CASE("kmeans: single point") {
  RandomSource src(1);
  auto cl = kmeans({{2.0, 3.0}}, KMeansParams{1}, src);
  CHECK(cl.centroids.size() == 1);
  CHECK(cl.centroids[0] == Point{2.0, 3.0});
  CHECK(cl.wcss == 0.0);
}

TEST_CASE("kmeans: two well-separated pairs") {
  std::vector<Point> pts{{0, 0}, {0, 1}, {10, 0}, {10, 1}};
  // Lloyd's converges to the wcss-optimal left/right split whenever the two
  // seed centroids straddle the pairs; find such a seed by replaying the
  // seeding shuffle.
  std::uint64_t seed = 0;
  for (std::uint64_t s = 1; s < 100; ++s) {
    RandomSource probe(s);
    std::vector<int> idx{0, 1, 2, 3};
    probe.shuffle(idx);
    if ((idx[0] < 2) != (idx[1] < 2)) {
      seed = s;
      break;
    }
  }
  REQUIRE(seed != 0);
  RandomSource src(seed);
  auto cl = kmeans(pts, KMeansParams{2}, src);
  CHECK(cl.assignments[0] == cl.assignments[1]);
  CHECK(cl.assignments[2] == cl.assignments[3]);
  CHECK(cl.assignments[0] != cl.assignments[2]);
  std::vector<Point> cents = cl.centroids;
  std::sort(cents.begin(), cents.end(),
            [](const Point& a, const Point& b) { return a.x < b.x; });
  CHECK(cents[0] == Point{0.0, 0.5});
  CHECK(cents[1] == Point{10.0, 0.5});
}

TEST_CASE("kmeans: k=n puts every point in its own cluster") {
  std::vector<Point> pts{{0, 0}, {5, 5}, {9, 1}};
  RandomSource src(2);
  auto cl = kmeans(pts, KMeansParams{3}, src);
  CHECK(cl.wcss == 0.0);
  std::vector<int> seen = cl.assignments;
  std::sort(seen.begin(), seen.end());
  CHECK(seen == std::vector<int>{0, 1, 2});
}

TEST_CASE("kmeans: k > n rejected") {
  RandomSource src(1);
  CHECK_THROWS_AS(kmeans({{0, 0}}, KMeansParams{2}, src), ValidationError);
}

TEST_CASE("kmeans: wcss is non-increasing and assignments are nearest") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto inst = testutil::random_instance(30, seed);
    const auto& pts = *inst.coords;
    RandomSource src(seed * 7);
    std::vector<double> trace;
    auto cl = kmeans(pts, KMeansParams{4}, src, &trace);
    REQUIRE(!trace.empty());
    for (std::size_t i = 1; i < trace.size(); ++i) {
      CHECK(trace[i] <= trace[i - 1] + 1e-9);
    }
    // Every cluster non-empty, every point on its nearest centroid.
    std::vector<int> count(cl.centroids.size(), 0);
    for (std::size_t p = 0; p < pts.size(); ++p) {
      ++count[cl.assignments[p]];
      double assigned = -1.0;
      int nearest = 0;
      double nearest_d = -1.0;
      for (std::size_t c = 0; c < cl.centroids.size(); ++c) {
        double dx = pts[p].x - cl.centroids[c].x;
        double dy = pts[p].y - cl.centroids[c].y;
        double d = dx * dx + dy * dy;
        if (nearest_d < 0 || d < nearest_d) {
          nearest_d = d;
          nearest = static_cast<int>(c);
        }
        if (static_cast<int>(c) == cl.assignments[p]) assigned = d;
      }
      CHECK(assigned <= nearest_d + 1e-9);
      (void)nearest;
    }
    for (int c : count) CHECK(c > 0);
  }
}

TEST_CASE("cluster heuristic: n=2 and missing coords") {
  auto two = testutil::square_instance({{0, 9}, {9, 0}});
  RandomSource src(1);
  CHECK_THROWS_WITH_AS(solve_cluster_heuristic(two, KMeansParams{}, src),
                       doctest::Contains("requires coordinates"),
                       ValidationError);
  two.coords = std::vector<Point>{{0, 0}, {1, 0}};
  RandomSource src2(1);
  CHECK(solve_cluster_heuristic(two, KMeansParams{}, src2).best.order ==
        std::vector<int>{0, 1});
}

TEST_CASE("cluster heuristic: collinear line with depot at one end") {
  Instance inst;
  inst.name = "line";
  inst.n = 5;
  inst.depot = 0;
  std::vector<Point> pts;
  for (int i = 0; i < 5; ++i) pts.push_back({100.0 * i, 0.0});
  RandomSource csrc(1);
  inst.costs = costs_from_coords(pts, 0.0, csrc);
  inst.coords = pts;
  RandomSource src(2);
  auto r = solve_cluster_heuristic(inst, KMeansParams{1}, src);
  CHECK(r.best.order == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(r.best.cost == solve_exact(inst).best.cost);
}

TEST_CASE("cluster heuristic: oracle bound and tour validity") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    int n = 5 + static_cast<int>(seed % 8);
    auto inst = testutil::random_instance(n, seed);
    RandomSource src(seed);
    auto r = solve_cluster_heuristic(inst, KMeansParams{}, src);
    CHECK(is_valid_tour(inst, r.best.order));
    CHECK(evaluate_tour(inst, r.best.order) == r.best.cost);
    CHECK(r.best.cost >= solve_exact(inst).best.cost);
  }
}

TEST_CASE("ga-sa: best never worse than initial population best") {
  auto two = testutil::square_instance({{0, 9}, {9, 0}});
  GaParams ga;
  ga.population_size = 4;
  SaParams sa;
  RandomSource src(1);
  CHECK(solve_ga_sa(two, ga, sa, Budget{100}, src).best.order ==
        std::vector<int>{0, 1});

  auto inst = testutil::random_instance(10, 41);
  GaParams ga2;
  SaParams sa2;
  RandomSource src2(5);
  auto r = solve_ga_sa(inst, ga2, sa2, Budget{6000}, src2);
  CHECK(is_valid_tour(inst, r.best.order));
  CHECK(r.best.cost >= solve_exact(inst).best.cost);
  CHECK(r.evaluations_used <= 6000 + ga2.population_size);
}

TEST_CASE("k-ga and k-ga-sa: never worse than the cluster seed") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto inst = testutil::random_instance(12, 50 + seed);
    KMeansParams km;
    GaParams ga;
    SaParams sa;
    RandomSource ksrc(seed);
    auto cluster = solve_cluster_heuristic(inst, km, ksrc);
    RandomSource s1(seed), s2(seed);
    auto kga = solve_k_ga(inst, km, ga, Budget{4000}, s1);
    auto kgasa = solve_k_ga_sa(inst, km, ga, sa, Budget{4000}, s2);
    CHECK(kga.best.cost <= cluster.best.cost);
    CHECK(kgasa.best.cost <= cluster.best.cost);
    std::int64_t opt = solve_exact(inst).best.cost;
    CHECK(kga.best.cost >= opt);
    CHECK(kgasa.best.cost >= opt);
    CHECK(is_valid_tour(inst, kga.best.order));
    CHECK(is_valid_tour(inst, kgasa.best.order));
  }
}

TEST_CASE("k-ga: missing coords rejected, n=2 trivial") {
  auto inst = testutil::square_instance({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  GaParams ga;
  ga.population_size = 4;
  RandomSource src(1);
  CHECK_THROWS_AS(solve_k_ga(inst, KMeansParams{}, ga, Budget{100}, src),
                  ValidationError);

  auto two = testutil::square_instance({{0, 9}, {9, 0}});
  two.coords = std::vector<Point>{{0, 0}, {1, 0}};
  RandomSource src2(1);
  CHECK(solve_k_ga(two, KMeansParams{}, ga, Budget{50}, src2).best.order ==
        std::vector<int>{0, 1});
}

TEST_CASE("hybrids are deterministic in the seed") {
  auto inst = testutil::random_instance(11, 61);
  KMeansParams km;
  GaParams ga;
  SaParams sa;
  RandomSource a(5), b(5);
  auto ra = solve_k_ga_sa(inst, km, ga, sa, Budget{5000}, a);
  auto rb = solve_k_ga_sa(inst, km, ga, sa, Budget{5000}, b);
  CHECK(ra.best.order == rb.best.order);
  CHECK(ra.best.cost == rb.best.cost);
  CHECK(ra.evaluations_used == rb.evaluations_used);
}
