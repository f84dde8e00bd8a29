#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace atsp {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

// One ATSP instance: integer arc costs, zero diagonal, cost(i,j) need not
// equal cost(j,i). Immutable after construction by convention.
struct Instance {
  std::string name;
  int n = 0;
  int depot = 0;
  std::vector<std::int64_t> costs;  // row-major, n*n
  std::optional<std::vector<Point>> coords;

  std::int64_t cost(int i, int j) const {
    return costs[static_cast<std::size_t>(i) * n + j];
  }
  std::int64_t& cost(int i, int j) {
    return costs[static_cast<std::size_t>(i) * n + j];
  }

  bool operator==(const Instance&) const = default;
};

// Every invariant violation, in a stable order. Empty means valid.
std::vector<std::string> validate_instance(const Instance& inst);

// Throws ValidationError listing all violations if the instance is invalid.
void require_valid(const Instance& inst);

struct Tour {
  std::vector<int> order;  // order[0] is the depot
  std::int64_t cost = 0;
};

// Closed-walk cost of a depot-rooted permutation. Throws ValidationError
// naming the duplicated or missing city on non-permutation input. If
// eval_counter is given, increments it by one.
std::int64_t evaluate_tour(const Instance& inst, std::span<const int> order,
                           std::int64_t* eval_counter = nullptr);

// True if `order` is a valid depot-rooted permutation for `inst`.
bool is_valid_tour(const Instance& inst, std::span<const int> order);

struct Budget {
  std::int64_t max_evaluations = 0;
  std::optional<std::int64_t> max_millis;
};

// Shared evaluation meter for solvers: counts tour-cost evaluations against
// the budget and tracks wall time.
class Evaluator {
 public:
  Evaluator(const Instance& inst, Budget budget)
      : inst_(&inst), budget_(budget),
        start_(std::chrono::steady_clock::now()) {}

  std::int64_t cost(std::span<const int> order) {
    return evaluate_tour(*inst_, order, &used_);
  }

  bool exhausted() const {
    if (used_ >= budget_.max_evaluations) return true;
    if (budget_.max_millis && elapsed_millis() >= *budget_.max_millis) return true;
    return false;
  }

  std::int64_t used() const { return used_; }
  std::int64_t remaining() const {
    return budget_.max_evaluations > used_ ? budget_.max_evaluations - used_ : 0;
  }
  const Budget& budget() const { return budget_; }

  std::int64_t elapsed_millis() const {
    using namespace std::chrono;
    return duration_cast<milliseconds>(steady_clock::now() - start_).count();
  }

 private:
  const Instance* inst_;
  Budget budget_;
  std::int64_t used_ = 0;
  std::chrono::steady_clock::time_point start_;
};

enum class Algorithm {
  kmeans,
  ga,
  sa,
  ga_sa,
  k_ga,
  k_ga_sa,
  nn,
  random_walk,
  exact,
};

std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> algorithm_from_name(std::string_view name);

struct SolveReport {
  Algorithm algorithm = Algorithm::exact;
  std::string instance_name;
  std::uint64_t seed = 0;
  std::int64_t evaluations_used = 0;
  std::int64_t elapsed_millis = 0;
  Tour best;
};

}  // namespace atsp
