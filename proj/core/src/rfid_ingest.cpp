#include "atsp/rfid_ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace atsp {
namespace {

constexpr std::string_view kHeader = "tag_id,reader_id,timestamp_ms,x_m,y_m";

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

std::vector<ReadEvent> parse_event_log(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("line " + std::to_string(lineno) + ": " + what);
  };

  if (!std::getline(in, line)) throw ParseError("empty event log, header required");
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader) {
    throw fail("bad header, expected '" + std::string(kHeader) + "'");
  }

  std::vector<ReadEvent> events;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv(line);
    if (fields.size() != 5) {
      throw fail("expected 5 columns, got " + std::to_string(fields.size()));
    }
    ReadEvent ev;
    ev.tag_id = fields[0];
    ev.reader_id = fields[1];
    if (ev.tag_id.empty()) throw fail("empty tag_id");
    if (ev.reader_id.empty()) throw fail("empty reader_id");
    try {
      std::size_t pos = 0;
      ev.timestamp_ms = std::stoll(fields[2], &pos);
      if (pos != fields[2].size()) throw std::invalid_argument(fields[2]);
      ev.x_m = std::stod(fields[3], &pos);
      if (pos != fields[3].size()) throw std::invalid_argument(fields[3]);
      ev.y_m = std::stod(fields[4], &pos);
      if (pos != fields[4].size()) throw std::invalid_argument(fields[4]);
    } catch (const std::exception&) {
      throw fail("non-numeric timestamp or coordinate");
    }
    if (ev.timestamp_ms < 0) throw fail("negative timestamp");
    events.push_back(std::move(ev));
  }
  return events;
}

std::vector<ReadEvent> parse_event_log_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open: " + path.string());
  std::ostringstream buf;
  buf << f.rdbuf();
  try {
    return parse_event_log(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Instance build_instance_from_events(const std::vector<ReadEvent>& events,
                                    const std::string& depot_reader,
                                    double asymmetry_alpha,
                                    RandomSource& source) {
  if (events.empty()) throw ValidationError("no read events");

  // Readers in first-appearance order, each with one consistent position.
  std::vector<std::string> reader_order;
  std::unordered_map<std::string, Point> positions;
  for (const auto& ev : events) {
    Point p{ev.x_m, ev.y_m};
    auto it = positions.find(ev.reader_id);
    if (it == positions.end()) {
      positions.emplace(ev.reader_id, p);
      reader_order.push_back(ev.reader_id);
    } else if (!(it->second == p)) {
      throw ValidationError("inconsistent site position for reader '" +
                            ev.reader_id + "'");
    }
  }

  auto depot_it = std::find(reader_order.begin(), reader_order.end(), depot_reader);
  if (depot_it == reader_order.end()) {
    throw ValidationError("depot reader '" + depot_reader + "' not present in log");
  }
  std::rotate(reader_order.begin(), depot_it, depot_it + 1);

  Instance inst;
  inst.name = "rfid-" + depot_reader;
  inst.n = static_cast<int>(reader_order.size());
  inst.depot = 0;
  std::vector<Point> coords;
  coords.reserve(reader_order.size());
  for (const auto& r : reader_order) {
    Point p = positions.at(r);
    coords.push_back({std::round(p.x * 1e6) / 1e6, std::round(p.y * 1e6) / 1e6});
  }
  inst.costs = costs_from_coords(coords, asymmetry_alpha, source);
  inst.coords = std::move(coords);
  require_valid(inst);
  return inst;
}

}  // namespace atsp
