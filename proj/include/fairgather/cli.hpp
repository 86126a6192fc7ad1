#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fairgather/graph.hpp"
#include "fairgather/schedulers.hpp"

namespace fairgather {

/// Schedule CSV: header "holiday,happy", then one row per holiday starting at
/// 1 with the happy node ids joined by ';' (empty when nobody hosts).
std::string format_schedule_csv(const std::vector<std::vector<NodeId>>& happy_sets);
std::string format_schedule_csv(const Schedule& s, Holiday holidays);

/// Rows must be consecutive from holiday 1 and name only nodes of `g`.
RecordedSchedule parse_schedule_csv(std::string_view text, const ConflictGraph& g);

namespace cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Seed falls back to $FAIRGATHER_SEED, then 0.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace fairgather
