#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "atsp/instance.hpp"
#include "atsp/instance_io.hpp"
#include "atsp/random.hpp"

namespace atsp {

// One simulated tag read: which shipment was seen, by which site reader,
// when, and where the reader sits.
struct ReadEvent {
  std::string tag_id;
  std::string reader_id;
  std::int64_t timestamp_ms = 0;
  double x_m = 0.0;
  double y_m = 0.0;
  bool operator==(const ReadEvent&) const = default;
};

// CSV with the exact header tag_id,reader_id,timestamp_ms,x_m,y_m.
// Preserves input order; malformed rows abort with their line number.
std::vector<ReadEvent> parse_event_log(const std::string& text);
std::vector<ReadEvent> parse_event_log_file(const std::filesystem::path& path);

// One city per distinct reader, in first-appearance order with the depot
// reader moved to index 0. Costs are built from reader positions exactly as
// generate_instance builds them from coordinates.
Instance build_instance_from_events(const std::vector<ReadEvent>& events,
                                    const std::string& depot_reader,
                                    double asymmetry_alpha,
                                    RandomSource& source);

}  // namespace atsp
