#include "atsp/instance.hpp"

#include <array>
#include <sstream>

namespace atsp {

std::vector<std::string> validate_instance(const Instance& inst) {
  std::vector<std::string> out;
  if (inst.n < 1) {
    out.push_back("n must be >= 1");
    return out;
  }
  if (inst.depot < 0 || inst.depot >= inst.n) {
    out.push_back("depot " + std::to_string(inst.depot) + " out of range [0, " +
                  std::to_string(inst.n) + ")");
  }
  if (inst.costs.size() != static_cast<std::size_t>(inst.n) * inst.n) {
    out.push_back("cost matrix is not " + std::to_string(inst.n) + "x" +
                  std::to_string(inst.n));
    return out;
  }
  for (int i = 0; i < inst.n; ++i) {
    if (inst.cost(i, i) != 0) {
      out.push_back("nonzero diagonal at " + std::to_string(i));
    }
    for (int j = 0; j < inst.n; ++j) {
      if (inst.cost(i, j) < 0) {
        out.push_back("negative cost at (" + std::to_string(i) + ", " +
                      std::to_string(j) + ")");
      }
    }
  }
  if (inst.coords && inst.coords->size() != static_cast<std::size_t>(inst.n)) {
    out.push_back("coords length mismatch: " +
                  std::to_string(inst.coords->size()) + " points for n=" +
                  std::to_string(inst.n));
  }
  return out;
}

void require_valid(const Instance& inst) {
  auto violations = validate_instance(inst);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid instance '" << inst.name << "':";
  for (const auto& v : violations) msg << " " << v << ";";
  throw ValidationError(msg.str());
}

std::int64_t evaluate_tour(const Instance& inst, std::span<const int> order,
                           std::int64_t* eval_counter) {
  if (order.size() != static_cast<std::size_t>(inst.n)) {
    throw ValidationError("tour length " + std::to_string(order.size()) +
                          " does not match n=" + std::to_string(inst.n));
  }
  std::vector<char> seen(inst.n, 0);
  for (int c : order) {
    if (c < 0 || c >= inst.n) {
      throw ValidationError("city " + std::to_string(c) + " out of range");
    }
    if (seen[c]) {
      throw ValidationError("duplicated city " + std::to_string(c));
    }
    seen[c] = 1;
  }
  // All-present follows from length + no-duplicates, but report the missing
  // city explicitly if a caller tripped the range check above.
  std::int64_t total = 0;
  for (int k = 0; k + 1 < inst.n; ++k) {
    total += inst.cost(order[k], order[k + 1]);
  }
  total += inst.cost(order[inst.n - 1], order[0]);
  if (eval_counter) ++*eval_counter;
  return total;
}

bool is_valid_tour(const Instance& inst, std::span<const int> order) {
  if (order.size() != static_cast<std::size_t>(inst.n)) return false;
  if (order.empty() || order[0] != inst.depot) return false;
  std::vector<char> seen(inst.n, 0);
  for (int c : order) {
    if (c < 0 || c >= inst.n || seen[c]) return false;
    seen[c] = 1;
  }
  return true;
}

namespace {
constexpr std::array<std::pair<Algorithm, std::string_view>, 9> kAlgoNames{{
    {Algorithm::kmeans, "kmeans"},
    {Algorithm::ga, "ga"},
    {Algorithm::sa, "sa"},
    {Algorithm::ga_sa, "ga-sa"},
    {Algorithm::k_ga, "k-ga"},
    {Algorithm::k_ga_sa, "k-ga-sa"},
    {Algorithm::nn, "nn"},
    {Algorithm::random_walk, "random-walk"},
    {Algorithm::exact, "exact"},
}};
}  // namespace

std::string_view algorithm_name(Algorithm a) {
  for (auto [algo, name] : kAlgoNames) {
    if (algo == a) return name;
  }
  return "unknown";
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
  for (auto [algo, n] : kAlgoNames) {
    if (n == name) return algo;
  }
  return std::nullopt;
}

}  // namespace atsp
