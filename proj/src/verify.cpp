#include "fairgather/verify.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace fairgather {

const NodeReport& ScheduleReport::node(NodeId v) const
{
    auto it = std::lower_bound(nodes.begin(), nodes.end(), v,
                               [](const NodeReport& r, NodeId id) { return r.node < id; });
    if (it == nodes.end() || it->node != v) throw VerifyError("node " + std::to_string(v) + " not in report");
    return *it;
}

namespace {

void check_window(const Schedule& s, Holiday first, Holiday last)
{
    if (first == 0) throw VerifyError("window must start at holiday 1 or later");
    if (last < first) throw VerifyError("window end precedes its start");
    if (auto h = s.horizon(); h && last > *h)
        throw VerifyError("window end " + std::to_string(last) + " is past the schedule horizon " +
                          std::to_string(*h));
}

std::uint64_t detect_period(const std::vector<bool>& happy, const std::vector<std::size_t>& hits)
{
    const std::size_t len = happy.size();
    // happy(t) == happy(t + p) everywhere iff every hit h has a hit at h + p
    // (when inside the window) and at h - p (likewise).
    for (std::size_t p = 1; p <= len / 2; ++p) {
        bool ok = true;
        for (std::size_t h : hits) {
            if ((h + p < len && !happy[h + p]) || (h >= p && !happy[h - p])) {
                ok = false;
                break;
            }
        }
        if (ok) return p;
    }
    return 0;
}

}  // namespace

ScheduleReport report(const ConflictGraph& g, const Schedule& s, Holiday first, Holiday last)
{
    check_window(s, first, last);
    const std::size_t len = static_cast<std::size_t>(last - first + 1);
    const auto ids = g.nodes();

    std::map<NodeId, std::vector<bool>> table;
    ScheduleReport r;
    r.first = first;
    r.last = last;
    for (NodeId v : ids) {
        auto& row = table[v];
        row.resize(len);
        NodeReport nr;
        nr.node = v;
        std::vector<std::size_t> hits;
        std::uint64_t run = 0;
        for (std::size_t k = 0; k < len; ++k) {
            const bool h = s.happy(v, first + k);
            row[k] = h;
            if (h) {
                hits.push_back(k);
                nr.happy.push_back(first + k);
                run = 0;
            } else {
                nr.mul = std::max(nr.mul, ++run);
            }
        }
        if (hits.empty()) {
            nr.max_gap = len + 1;
        } else {
            nr.first_happy = first + hits.front();
            for (std::size_t i = 1; i < hits.size(); ++i) nr.max_gap = std::max<std::uint64_t>(nr.max_gap, hits[i] - hits[i - 1]);
            nr.max_gap = std::max<std::uint64_t>(nr.max_gap, len - hits.back());
        }
        nr.detected_period = detect_period(row, hits);
        r.nodes.push_back(std::move(nr));
    }

    const auto edges = g.edges();
    for (std::size_t k = 0; k < len; ++k) {
        for (const Edge& e : edges) {
            if (table[e.u][k] && table[e.v][k]) {
                r.dependent_holidays.push_back(first + k);
                break;
            }
        }
    }
    return r;
}

std::vector<GapViolation> check_gap_bounds(const ConflictGraph& g, const ScheduleReport& r, const GapBound& bound)
{
    std::vector<GapViolation> out;
    for (NodeId v : g.nodes()) {
        const auto& nr = r.node(v);
        const std::uint64_t b = bound(v);
        if (nr.max_gap > b) out.push_back({v, nr.max_gap, b});
    }
    return out;
}

std::size_t brute_force_mis(const ConflictGraph& g)
{
    const auto ids = g.nodes();
    if (ids.size() > kBruteForceNodeLimit)
        throw VerifyError("brute_force_mis: " + std::to_string(ids.size()) + " nodes exceeds the limit of " +
                          std::to_string(kBruteForceNodeLimit));
    std::map<NodeId, unsigned> bit;
    for (NodeId v : ids) bit[v] = static_cast<unsigned>(bit.size());
    std::vector<std::uint32_t> adj(ids.size(), 0);
    for (const Edge& e : g.edges()) {
        adj[bit[e.u]] |= std::uint32_t{1} << bit[e.v];
        adj[bit[e.v]] |= std::uint32_t{1} << bit[e.u];
    }

    std::size_t best = 0;
    const std::uint32_t total = std::uint32_t{1} << ids.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size <= best) continue;
        bool independent = true;
        for (std::uint32_t rest = mask; rest && independent; rest &= rest - 1)
            independent = (adj[static_cast<std::size_t>(std::countr_zero(rest))] & mask) == 0;
        if (independent) best = size;
    }
    return best;
}

HappyVsMis happy_set_vs_mis(const ConflictGraph& g, const Schedule& s, Holiday first, Holiday last)
{
    check_window(s, first, last);
    HappyVsMis out;
    out.mis = brute_force_mis(g);
    for (Holiday t = first; t <= last; ++t) out.max_observed = std::max(out.max_observed, s.happy_set(t).size());
    if (out.max_observed > out.mis)
        throw VerifyError("happy set of size " + std::to_string(out.max_observed) +
                          " exceeds the maximum independent set size " + std::to_string(out.mis));
    return out;
}

}  // namespace fairgather
