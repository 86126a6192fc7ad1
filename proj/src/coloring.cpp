#include "fairgather/coloring.hpp"

#include <algorithm>
#include <string>

#include "fairgather/random.hpp"

namespace fairgather {

std::optional<Edge> find_conflict(const ConflictGraph& g, const Coloring& coloring)
{
    for (const Edge& e : g.edges()) {
        auto cu = coloring.find(e.u);
        auto cv = coloring.find(e.v);
        if (cu == coloring.end() || cv == coloring.end() || cu->second == cv->second) return e;
    }
    return std::nullopt;
}

Color smallest_free_color(const ConflictGraph& g, const Coloring& coloring, NodeId v)
{
    std::vector<Color> used;
    for (NodeId w : g.neighbors(v))
        if (auto it = coloring.find(w); it != coloring.end()) used.push_back(it->second);
    std::sort(used.begin(), used.end());
    Color c = 1;
    for (Color u : used) {
        if (u == c)
            ++c;
        else if (u > c)
            break;
    }
    return c;
}

Coloring greedy_color(const ConflictGraph& g, std::span<const NodeId> order)
{
    if (order.size() != g.node_count()) throw ColoringError("order is not a permutation of the nodes");
    Coloring coloring;
    for (NodeId v : order) {
        if (!g.has_node(v) || coloring.contains(v))
            throw ColoringError("order is not a permutation of the nodes");
        coloring[v] = smallest_free_color(g, coloring, v);
    }
    return coloring;
}

Coloring greedy_color(const ConflictGraph& g)
{
    const auto order = g.nodes();
    return greedy_color(g, order);
}

PaletteMap default_palettes(const ConflictGraph& g)
{
    PaletteMap palettes;
    for (NodeId v : g.nodes()) {
        auto& p = palettes[v];
        for (Color c = 1; c <= g.degree(v) + 1; ++c) p.push_back(c);
    }
    return palettes;
}

namespace {

struct Participant {
    NodeId id;
    std::vector<Color> palette;
    std::vector<std::size_t> neighbors;  // indices into the participant array
    std::optional<Color> color;
    Color candidate = 0;
};

}  // namespace

RandomColoringResult local_random_color(const ConflictGraph& g, const PaletteMap& palettes,
                                        std::uint64_t seed, std::uint64_t max_rounds)
{
    std::vector<Participant> parts;
    std::map<NodeId, std::size_t> index;
    for (const auto& [v, palette] : palettes) {
        if (!g.has_node(v)) throw ColoringError("palette given for unknown node " + std::to_string(v));
        Participant p{v, palette, {}, std::nullopt};
        std::sort(p.palette.begin(), p.palette.end());
        p.palette.erase(std::unique(p.palette.begin(), p.palette.end()), p.palette.end());
        index[v] = parts.size();
        parts.push_back(std::move(p));
    }
    for (auto& p : parts) {
        for (NodeId w : g.neighbors(p.id))
            if (auto it = index.find(w); it != index.end()) p.neighbors.push_back(it->second);
        if (p.palette.size() < p.neighbors.size() + 1)
            throw ColoringError("palette of node " + std::to_string(p.id) + " has " +
                                std::to_string(p.palette.size()) + " colors but needs at least " +
                                std::to_string(p.neighbors.size() + 1));
    }

    RandomColoringResult result;
    std::size_t remaining = parts.size();
    std::vector<Color> available;
    std::vector<std::size_t> winners;
    while (remaining > 0) {
        if (result.log.rounds >= max_rounds)
            throw ColoringError("randomized coloring did not finish within " + std::to_string(max_rounds) +
                                " rounds");
        const std::uint64_t round = ++result.log.rounds;

        for (auto& p : parts) {
            if (p.color) continue;
            available.clear();
            for (Color c : p.palette) {
                bool taken = std::any_of(p.neighbors.begin(), p.neighbors.end(),
                                         [&](std::size_t w) { return parts[w].color == c; });
                if (!taken) available.push_back(c);
            }
            SplitMix64 rng(mix64(mix64(seed, p.id), round));
            p.candidate = available[rng.below(available.size())];
            for (std::size_t w : p.neighbors)
                if (!parts[w].color) ++result.log.messages;
        }

        winners.clear();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const auto& p = parts[i];
            if (p.color) continue;
            bool clash = std::any_of(p.neighbors.begin(), p.neighbors.end(), [&](std::size_t w) {
                return !parts[w].color && parts[w].candidate == p.candidate;
            });
            if (!clash) winners.push_back(i);
        }
        for (std::size_t i : winners) {
            parts[i].color = parts[i].candidate;
            --remaining;
        }
    }

    for (const auto& p : parts) result.coloring[p.id] = *p.color;
    return result;
}

}  // namespace fairgather
