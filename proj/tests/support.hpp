#pragma once

// Test-only oracles. Each one re-derives its answer by the most direct route
// available (string manipulation, literal simulation, enumeration) and must
// not call the library routine it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fairgather/graph.hpp"

namespace fairgather::testing {

/// Binary representation without leading zeros, via repeated division.
inline std::string binary_of(std::uint64_t n)
{
    std::string s;
    while (n > 0) {
        s.insert(s.begin(), static_cast<char>('0' + n % 2));
        n /= 2;
    }
    return s;
}

/// omega(n) straight from the recursive string definition.
inline std::string omega_by_definition(std::uint64_t n)
{
    std::string re;
    while (n > 1) {
        const std::string b = binary_of(n);
        re = b + re;
        n = b.size() - 1;
    }
    return re + "0";
}

/// Low `width` bits of t written least-significant first.
inline std::string low_bits_lsb_first(std::uint64_t t, std::size_t width)
{
    std::string s;
    for (std::size_t i = 0; i < width; ++i) s.push_back(i < 64 && ((t >> i) & 1U) ? '1' : '0');
    return s;
}

/// Product form: x * log x * log log x * ... over the iterated logs that exceed 1.
inline double phi_product(double x)
{
    double p = 1.0;
    for (double y = x; y > 1.0; y = std::log2(y)) p *= y;
    return p;
}

/// Literal phased greedy: scan every node each holiday, recolor from a
/// snapshot of the colors at the start of the holiday.
inline std::map<NodeId, std::vector<std::uint64_t>> phased_by_simulation(const ConflictGraph& g,
                                                                         std::map<NodeId, std::uint64_t> col,
                                                                         std::uint64_t horizon)
{
    std::map<NodeId, std::vector<std::uint64_t>> happy;
    for (NodeId v : g.nodes()) happy[v];
    for (std::uint64_t i = 1; i <= horizon; ++i) {
        const auto snapshot = col;
        for (NodeId p : g.nodes()) {
            if (snapshot.at(p) != i) continue;
            happy[p].push_back(i);
            const std::uint64_t l = g.degree(p);
            for (std::uint64_t s = i + 1; s <= i + l + 1; ++s) {
                bool used = false;
                for (NodeId q : g.neighbors(p)) used = used || snapshot.at(q) == s;
                if (!used) {
                    col[p] = s;
                    break;
                }
            }
        }
    }
    return happy;
}

/// Connected graphs on vertex set {0..k-1} (every vertex used) with 1..max_edges edges, k <= 7.
inline std::vector<ConflictGraph> all_connected_graphs(std::size_t max_edges)
{
    std::vector<ConflictGraph> out;
    for (std::size_t k = 2; k <= max_edges + 1; ++k) {
        std::vector<Edge> pool;
        for (NodeId a = 0; a < k; ++a)
            for (NodeId b = a + 1; b < k; ++b) pool.push_back({a, b});
        const std::size_t m = pool.size();
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
            const auto edges = static_cast<std::size_t>(__builtin_popcount(mask));
            if (edges > max_edges || edges + 1 < k) continue;
            // union-find connectivity over k vertices
            std::vector<std::size_t> parent(k);
            for (std::size_t i = 0; i < k; ++i) parent[i] = i;
            auto find = [&](std::size_t x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            std::size_t components = k;
            for (std::size_t e = 0; e < m; ++e) {
                if (!((mask >> e) & 1U)) continue;
                auto a = find(pool[e].u), b = find(pool[e].v);
                if (a != b) {
                    parent[a] = b;
                    --components;
                }
            }
            if (components != 1) continue;
            ConflictGraph g = edgeless_graph(k);
            for (std::size_t e = 0; e < m; ++e)
                if ((mask >> e) & 1U) g.insert_edge(pool[e].u, pool[e].v);
            out.push_back(std::move(g));
        }
    }
    return out;
}

/// Random simple graph on n nodes with exactly min(m, n(n-1)/2) edges.
inline ConflictGraph random_graph_with_edges(std::size_t n, std::size_t m, std::uint64_t seed)
{
    ConflictGraph g = edgeless_graph(n);
    std::uint64_t state = seed * 0x9e3779b97f4a7c15ULL + 1;
    auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    m = std::min(m, n * (n - 1) / 2);
    while (g.edge_count() < m) {
        auto a = static_cast<NodeId>(next() % n), b = static_cast<NodeId>(next() % n);
        if (a != b && !g.has_edge(a, b)) g.insert_edge(a, b);
    }
    return g;
}

}  // namespace fairgather::testing
