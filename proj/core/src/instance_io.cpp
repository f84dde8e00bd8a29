#include "atsp/instance_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace atsp {
namespace {

double quantize6(double v) { return std::round(v * 1e6) / 1e6; }

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::int64_t> costs_from_coords(const std::vector<Point>& coords,
                                            double asymmetry_alpha,
                                            RandomSource& source) {
  const int n = static_cast<int>(coords.size());
  std::vector<std::int64_t> costs(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      double dx = coords[i].x - coords[j].x;
      double dy = coords[i].y - coords[j].y;
      double eps = asymmetry_alpha * source.next_unit();
      costs[static_cast<std::size_t>(i) * n + j] =
          std::llround(std::hypot(dx, dy) * (1.0 + eps));
    }
  }
  return costs;
}

Instance generate_instance(const GeneratorConfig& config, RandomSource& source) {
  if (config.n < 1) throw ValidationError("generator: n must be >= 1");
  if (config.asymmetry_alpha < 0.0 || config.asymmetry_alpha > 1.0) {
    throw ValidationError("generator: asymmetry_alpha must be in [0, 1]");
  }
  Instance inst;
  inst.name = config.name.empty()
                  ? "rand-" + std::to_string(config.n) + "-" +
                        std::to_string(config.seed)
                  : config.name;
  inst.n = config.n;
  inst.depot = 0;
  std::vector<Point> coords(config.n);
  for (auto& p : coords) {
    // Quantized to 6 decimals so the file format round-trips exactly.
    p.x = quantize6(source.next_unit() * config.coord_box);
    p.y = quantize6(source.next_unit() * config.coord_box);
  }
  inst.costs = costs_from_coords(coords, config.asymmetry_alpha, source);
  inst.coords = std::move(coords);
  require_valid(inst);
  return inst;
}

std::string write_instance(const Instance& inst) {
  require_valid(inst);
  std::ostringstream out;
  out << "NAME: " << (inst.name.empty() ? "unnamed" : inst.name) << "\n";
  out << "TYPE: ATSP\n";
  out << "DIMENSION: " << inst.n << "\n";
  out << "EDGE_WEIGHT_TYPE: EXPLICIT\n";
  out << "EDGE_WEIGHT_FORMAT: FULL_MATRIX\n";
  out << "EDGE_WEIGHT_SECTION\n";
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.n; ++j) {
      if (j) out << ' ';
      out << inst.cost(i, j);
    }
    out << '\n';
  }
  if (inst.coords) {
    out << "NODE_COORD_SECTION\n";
    char buf[96];
    for (int i = 0; i < inst.n; ++i) {
      std::snprintf(buf, sizeof buf, "%d %.6f %.6f\n", i + 1,
                    (*inst.coords)[i].x, (*inst.coords)[i].y);
      out << buf;
    }
  }
  out << "EOF\n";
  return out.str();
}

void write_instance_file(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path.string());
  f << write_instance(inst);
  if (!f) throw IoError("write failed: " + path.string());
}

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  Instance inst;
  inst.n = -1;
  bool saw_type = false;

  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("line " + std::to_string(lineno) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty()) continue;
    if (t == "EOF") break;
    if (t == "EDGE_WEIGHT_SECTION") {
      if (inst.n < 1) throw fail("EDGE_WEIGHT_SECTION before DIMENSION");
      const std::size_t want = static_cast<std::size_t>(inst.n) * inst.n;
      inst.costs.clear();
      inst.costs.reserve(want);
      while (inst.costs.size() < want && std::getline(in, line)) {
        ++lineno;
        std::istringstream row(line);
        std::int64_t v;
        while (row >> v) {
          if (inst.costs.size() == want) {
            throw fail("matrix shape error: more than " +
                       std::to_string(want) + " entries");
          }
          inst.costs.push_back(v);
        }
        std::string leftover;
        if (row.clear(), row >> leftover) {
          throw fail("matrix shape error: non-numeric entry '" + leftover + "'");
        }
      }
      if (inst.costs.size() != want) {
        throw fail("matrix shape error: expected " + std::to_string(want) +
                   " entries, got " + std::to_string(inst.costs.size()));
      }
      continue;
    }
    if (t == "NODE_COORD_SECTION") {
      if (inst.n < 1) throw fail("NODE_COORD_SECTION before DIMENSION");
      std::vector<Point> coords(inst.n);
      for (int i = 0; i < inst.n; ++i) {
        if (!std::getline(in, line)) throw fail("truncated coord section");
        ++lineno;
        std::istringstream row(line);
        int idx;
        Point p;
        if (!(row >> idx >> p.x >> p.y)) throw fail("bad coord line");
        if (idx < 1 || idx > inst.n) throw fail("coord index out of range");
        coords[idx - 1] = p;
      }
      inst.coords = std::move(coords);
      continue;
    }
    auto colon = t.find(':');
    if (colon == std::string::npos) throw fail("unrecognized line '" + t + "'");
    std::string key = trim(t.substr(0, colon));
    std::string value = trim(t.substr(colon + 1));
    if (key == "NAME") {
      inst.name = value;
    } else if (key == "TYPE") {
      if (value != "ATSP") throw fail("unsupported type '" + value + "'");
      saw_type = true;
    } else if (key == "DIMENSION") {
      try {
        inst.n = std::stoi(value);
      } catch (const std::exception&) {
        throw fail("bad DIMENSION '" + value + "'");
      }
      if (inst.n < 1) throw fail("DIMENSION must be >= 1");
    } else if (key == "EDGE_WEIGHT_TYPE") {
      if (value != "EXPLICIT") throw fail("unsupported edge weight type '" + value + "'");
    } else if (key == "EDGE_WEIGHT_FORMAT") {
      if (value != "FULL_MATRIX") throw fail("unsupported edge weight format '" + value + "'");
    }
    // Unknown keys are ignored for forward compatibility.
  }
  if (!saw_type) throw ParseError("missing TYPE header");
  if (inst.n < 1) throw ParseError("missing DIMENSION header");
  if (inst.costs.empty()) throw ParseError("missing EDGE_WEIGHT_SECTION");
  require_valid(inst);
  return inst;
}

Instance parse_instance_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open: " + path.string());
  std::ostringstream buf;
  buf << f.rdbuf();
  try {
    return parse_instance(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace atsp
