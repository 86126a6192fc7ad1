#pragma once

#include <cstddef>
#include <cstdint>
#include <map>

#include "fairgather/graph.hpp"

namespace fairgather {

/// Head endpoint for every edge; a node is satisfied iff it heads at least one edge.
using Orientation = std::map<Edge, NodeId>;

std::size_t satisfied_count(const ConflictGraph& g, const Orientation& orientation);

struct SatisfactionResult {
    Orientation orientation;
    std::size_t satisfied = 0;
    /// Elementary steps taken (edge scans, queue pops, orientations); linear in |V| + |E|.
    std::uint64_t operations = 0;
    /// Times more than one unsatisfied single-edge node was pending while the
    /// residual graph was being consumed. Informational only.
    std::uint64_t concurrent_single_edge_nodes = 0;
};

/// Maximum satisfaction by peeling: an unsatisfied node with exactly one
/// unoriented edge takes it (lowest id first); when none remain, the lowest
/// unsatisfied node takes any unoriented edge and peeling resumes. Leftover
/// edges point to their lower endpoint.
SatisfactionResult max_satisfaction(const ConflictGraph& g);

inline constexpr std::size_t kBruteForceEdgeLimit = 20;

/// Exhaustive maximum over all 2^|E| orientations. Rejects graphs with more
/// than kBruteForceEdgeLimit edges.
std::size_t brute_force_satisfaction(const ConflictGraph& g);

/// Every edge points to its lower endpoint on odd holidays and its higher
/// endpoint on even ones. Isolated nodes are never satisfied.
bool alternating_satisfied(const ConflictGraph& g, NodeId v, std::uint64_t t);

}  // namespace fairgather
