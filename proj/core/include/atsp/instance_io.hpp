#pragma once

#include <filesystem>
#include <string>

#include "atsp/instance.hpp"
#include "atsp/random.hpp"

namespace atsp {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GeneratorConfig {
  int n = 14;
  std::uint64_t seed = 0;
  double coord_box = 1000.0;
  double asymmetry_alpha = 0.3;  // max relative perturbation, in [0, 1]
  std::string name;              // defaults to "rand-<n>-<seed>"
};

// Uniform coordinates in [0, coord_box]^2; arc cost round(euclid * (1+eps))
// with eps drawn per ordered pair in [0, asymmetry_alpha]. Rounding is
// half-away-from-zero. Deterministic in (config, source seed).
Instance generate_instance(const GeneratorConfig& config, RandomSource& source);

// The cost-building step shared with the RFID ingest path.
std::vector<std::int64_t> costs_from_coords(const std::vector<Point>& coords,
                                            double asymmetry_alpha,
                                            RandomSource& source);

// TSPLIB ATSP dialect (EXPLICIT / FULL_MATRIX), with a NODE_COORD_SECTION
// extension when coordinates are present.
std::string write_instance(const Instance& inst);
void write_instance_file(const Instance& inst, const std::filesystem::path& path);

Instance parse_instance(const std::string& text);
Instance parse_instance_file(const std::filesystem::path& path);

}  // namespace atsp
