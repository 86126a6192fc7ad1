#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "fairgather/graph.hpp"

namespace fairgather {

using Color = std::uint64_t;
using Coloring = std::map<NodeId, Color>;
/// Allowed colors per node, sorted and free of duplicates.
using PaletteMap = std::map<NodeId, std::vector<Color>>;

class ColoringError : public Error {
public:
    using Error::Error;
};

struct RoundLog {
    std::uint64_t rounds = 0;
    std::uint64_t messages = 0;

    RoundLog& operator+=(const RoundLog& other)
    {
        rounds += other.rounds;
        messages += other.messages;
        return *this;
    }
};

/// First edge whose endpoints share a color, or an edge touching an uncolored node.
std::optional<Edge> find_conflict(const ConflictGraph& g, const Coloring& coloring);
inline bool is_proper(const ConflictGraph& g, const Coloring& coloring)
{
    return !find_conflict(g, coloring).has_value();
}

/// Smallest positive color not used by any colored neighbor of v.
Color smallest_free_color(const ConflictGraph& g, const Coloring& coloring, NodeId v);

/// Sequential greedy coloring in the given order; `order` must be a
/// permutation of the graph's nodes.
Coloring greedy_color(const ConflictGraph& g, std::span<const NodeId> order);
Coloring greedy_color(const ConflictGraph& g);

/// {1, ..., degree(v) + 1} for every node.
PaletteMap default_palettes(const ConflictGraph& g);

struct RandomColoringResult {
    Coloring coloring;
    RoundLog log;
};

/// Synchronous randomized palette coloring over the nodes that have a palette.
///
/// Each round, every uncolored node draws a uniform candidate from its palette
/// minus the final colors of its neighbors, and keeps it iff no uncolored
/// neighbor drew the same value. Neighbors without a palette are ignored. A
/// node's draw in round r depends only on (seed, node, r).
///
/// Throws ColoringError if some palette has fewer than
/// (participating neighbors + 1) entries, or if `max_rounds` is exhausted.
RandomColoringResult local_random_color(const ConflictGraph& g, const PaletteMap& palettes,
                                        std::uint64_t seed, std::uint64_t max_rounds = 100000);

}  // namespace fairgather
