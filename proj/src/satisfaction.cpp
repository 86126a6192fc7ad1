#include "fairgather/satisfaction.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <string>
#include <vector>

namespace fairgather {

std::size_t satisfied_count(const ConflictGraph& g, const Orientation& orientation)
{
    std::set<NodeId> heads;
    for (const Edge& e : g.edges()) {
        auto it = orientation.find(e);
        if (it == orientation.end())
            throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not oriented");
        heads.insert(it->second);
    }
    return heads.size();
}

namespace {

class Peeler {
public:
    explicit Peeler(const ConflictGraph& g) : ids_(g.nodes()), edges_(g.edges())
    {
        std::map<NodeId, std::size_t> index;
        for (std::size_t i = 0; i < ids_.size(); ++i) index[ids_[i]] = i;
        incident_.resize(ids_.size());
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            ends_.push_back({index[edges_[e].u], index[edges_[e].v]});
            incident_[ends_[e][0]].push_back(e);
            incident_[ends_[e][1]].push_back(e);
        }
        remaining_.resize(ids_.size());
        for (std::size_t v = 0; v < ids_.size(); ++v) remaining_[v] = incident_[v].size();
        cursor_.assign(ids_.size(), 0);
        satisfied_.assign(ids_.size(), false);
        head_.assign(edges_.size(), kNone);
    }

    SatisfactionResult run()
    {
        for (std::size_t v = 0; v < ids_.size(); ++v) {
            ++ops_;
            if (remaining_[v] == 1) ready_.insert(v);
        }
        peel(false);
        for (std::size_t v = 0; v < ids_.size(); ++v) {
            ++ops_;
            if (satisfied_[v] || remaining_[v] == 0) continue;
            take(next_open_edge(v), v);
            peel(true);
        }

        SatisfactionResult out;
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            ++ops_;
            const std::size_t h = head_[e] == kNone ? ends_[e][0] : head_[e];
            out.orientation[edges_[e]] = ids_[h];
        }
        for (bool s : satisfied_) out.satisfied += s ? 1 : 0;
        out.operations = ops_;
        out.concurrent_single_edge_nodes = concurrent_;
        return out;
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    std::size_t next_open_edge(std::size_t v)
    {
        while (head_[incident_[v][cursor_[v]]] != kNone) {
            ++cursor_[v];
            ++ops_;
        }
        return incident_[v][cursor_[v]];
    }

    void peel(bool residual)
    {
        while (!ready_.empty()) {
            ++ops_;
            if (residual && ready_.size() > 1) ++concurrent_;
            const std::size_t v = *ready_.begin();
            take(next_open_edge(v), v);
        }
    }

    void take(std::size_t e, std::size_t v)
    {
        ++ops_;
        head_[e] = v;
        satisfied_[v] = true;
        ready_.erase(v);
        for (std::size_t x : ends_[e]) {
            --remaining_[x];
            if (satisfied_[x]) continue;
            if (remaining_[x] == 1)
                ready_.insert(x);
            else if (remaining_[x] == 0)
                ready_.erase(x);
        }
    }

    std::vector<NodeId> ids_;
    std::vector<Edge> edges_;
    std::vector<std::array<std::size_t, 2>> ends_;
    std::vector<std::vector<std::size_t>> incident_;
    std::vector<std::size_t> remaining_;
    std::vector<std::size_t> cursor_;
    std::vector<bool> satisfied_;
    std::vector<std::size_t> head_;
    std::set<std::size_t> ready_;
    std::uint64_t ops_ = 0;
    std::uint64_t concurrent_ = 0;
};

}  // namespace

SatisfactionResult max_satisfaction(const ConflictGraph& g) { return Peeler(g).run(); }

std::size_t brute_force_satisfaction(const ConflictGraph& g)
{
    const auto edges = g.edges();
    if (edges.size() > kBruteForceEdgeLimit)
        throw Error("brute_force_satisfaction: " + std::to_string(edges.size()) + " edges exceeds the limit of " +
                    std::to_string(kBruteForceEdgeLimit));

    // Only endpoints can be satisfied; at most 2 * 20 of them, so one 64-bit mask suffices.
    std::map<NodeId, unsigned> bit;
    for (const Edge& e : edges) {
        bit.try_emplace(e.u, static_cast<unsigned>(bit.size()));
        bit.try_emplace(e.v, static_cast<unsigned>(bit.size()));
    }
    std::vector<std::uint64_t> lower, upper;
    for (const Edge& e : edges) {
        lower.push_back(std::uint64_t{1} << bit[e.u]);
        upper.push_back(std::uint64_t{1} << bit[e.v]);
    }

    std::size_t best = 0;
    const std::uint64_t total = std::uint64_t{1} << edges.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::uint64_t heads = 0;
        for (std::size_t i = 0; i < edges.size(); ++i) heads |= (mask >> i) & 1U ? upper[i] : lower[i];
        best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(heads)));
    }
    return best;
}

bool alternating_satisfied(const ConflictGraph& g, NodeId v, std::uint64_t t)
{
    if (t == 0) throw Error("holidays are numbered from 1");
    const bool odd = (t & 1U) != 0;
    for (NodeId w : g.neighbors(v))
        if (odd ? v < w : v > w) return true;
    return false;
}

}  // namespace fairgather
