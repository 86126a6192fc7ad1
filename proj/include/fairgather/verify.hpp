#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fairgather/graph.hpp"
#include "fairgather/schedulers.hpp"

namespace fairgather {

class VerifyError : public Error {
public:
    using Error::Error;
};

struct NodeReport {
    NodeId node = 0;
    std::vector<Holiday> happy;  // holidays inside the window
    /// Longest run of consecutive unhappy holidays inside the window.
    std::uint64_t mul = 0;
    std::optional<Holiday> first_happy;
    /// Longest distance between consecutive happy holidays, measured from the
    /// first one. The window end counts as a happy holiday one past the
    /// window, so a trailing unhappy run of L contributes L + 1. A node never
    /// happy in the window gets window length + 1.
    std::uint64_t max_gap = 0;
    /// Smallest p <= window / 2 with happy(t) == happy(t + p) across the
    /// window; 0 when none exists.
    std::uint64_t detected_period = 0;
};

struct ScheduleReport {
    Holiday first = 1;
    Holiday last = 1;
    std::vector<NodeReport> nodes;  // ascending node id
    std::vector<Holiday> dependent_holidays;  // holidays whose happy set is not independent

    bool all_independent() const { return dependent_holidays.empty(); }
    const NodeReport& node(NodeId v) const;
};

/// Statistics over holidays [first, last], computed only through
/// Schedule::happy. Independence is re-checked edge by edge at every holiday.
ScheduleReport report(const ConflictGraph& g, const Schedule& s, Holiday first, Holiday last);

struct GapViolation {
    NodeId node;
    std::uint64_t gap;
    std::uint64_t bound;
};

using GapBound = std::function<std::uint64_t(NodeId)>;

/// Nodes whose anchored max_gap exceeds bound(node).
std::vector<GapViolation> check_gap_bounds(const ConflictGraph& g, const ScheduleReport& r, const GapBound& bound);

inline constexpr std::size_t kBruteForceNodeLimit = 20;

/// Exact maximum independent set size; rejects graphs above kBruteForceNodeLimit nodes.
std::size_t brute_force_mis(const ConflictGraph& g);

struct HappyVsMis {
    std::size_t max_observed = 0;
    std::size_t mis = 0;
};

/// Largest happy set over the window against the MIS size. Throws VerifyError
/// if a happy set is larger than the MIS.
HappyVsMis happy_set_vs_mis(const ConflictGraph& g, const Schedule& s, Holiday first, Holiday last);

}  // namespace fairgather
