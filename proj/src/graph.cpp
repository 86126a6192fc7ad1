#include "fairgather/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "fairgather/random.hpp"

namespace fairgather {

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line)
{
}

void ConflictGraph::add_node(NodeId v) { adjacency_.try_emplace(v); }

bool ConflictGraph::has_edge(NodeId u, NodeId v) const
{
    auto it = adjacency_.find(u);
    if (it == adjacency_.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), v);
}

void ConflictGraph::insert_edge(NodeId u, NodeId v)
{
    if (u == v) throw GraphError("self-loop on node " + std::to_string(u));
    if (has_edge(u, v))
        throw GraphError("edge " + std::to_string(u) + "-" + std::to_string(v) + " already present");
    for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
        auto& list = adjacency_[a];
        list.insert(std::lower_bound(list.begin(), list.end(), b), b);
    }
    ++edge_count_;
}

void ConflictGraph::remove_edge(NodeId u, NodeId v)
{
    if (!has_edge(u, v))
        throw GraphError("edge " + std::to_string(u) + "-" + std::to_string(v) + " not present");
    for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
        auto& list = adjacency_[a];
        list.erase(std::lower_bound(list.begin(), list.end(), b));
    }
    --edge_count_;
}

std::span<const NodeId> ConflictGraph::neighbors(NodeId v) const
{
    auto it = adjacency_.find(v);
    if (it == adjacency_.end()) throw GraphError("unknown node " + std::to_string(v));
    return it->second;
}

std::size_t ConflictGraph::max_degree() const
{
    std::size_t best = 0;
    for (const auto& [v, list] : adjacency_) best = std::max(best, list.size());
    return best;
}

std::vector<NodeId> ConflictGraph::nodes() const
{
    std::vector<NodeId> out;
    out.reserve(adjacency_.size());
    for (const auto& [v, list] : adjacency_) out.push_back(v);
    return out;
}

std::vector<Edge> ConflictGraph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (const auto& [u, list] : adjacency_)
        for (NodeId v : list)
            if (u < v) out.push_back({u, v});
    return out;
}

std::string ConflictGraph::to_edge_list() const
{
    std::ostringstream os;
    for (const auto& [v, list] : adjacency_)
        if (list.empty()) os << "node " << v << '\n';
    for (const Edge& e : edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

NodeId parse_id(std::string_view tok, std::size_t line)
{
    NodeId v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected a non-negative node id, got '" + std::string(tok) + "'");
    return v;
}

}  // namespace

ConflictGraph from_edge_list(std::string_view text)
{
    ConflictGraph g;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        auto toks = split_ws(line);
        if (toks.empty() || toks[0].starts_with('#')) continue;
        if (toks.size() == 2 && toks[0] == "node") {
            g.add_node(parse_id(toks[1], line_no));
            continue;
        }
        if (toks.size() != 2) throw ParseError(line_no, "expected 'u v' or 'node u'");
        NodeId u = parse_id(toks[0], line_no);
        NodeId v = parse_id(toks[1], line_no);
        try {
            g.insert_edge(u, v);
        } catch (const GraphError& e) {
            throw ParseError(line_no, e.what());
        }
    }
    return g;
}

ConflictGraph path_graph(std::size_t n)
{
    ConflictGraph g;
    for (std::size_t i = 0; i < n; ++i) g.add_node(static_cast<NodeId>(i));
    for (std::size_t i = 0; i + 1 < n; ++i) g.insert_edge(static_cast<NodeId>(i), static_cast<NodeId>(i + 1));
    return g;
}

ConflictGraph cycle_graph(std::size_t n)
{
    ConflictGraph g = path_graph(n);
    if (n >= 3) g.insert_edge(static_cast<NodeId>(n - 1), 0);
    return g;
}

ConflictGraph clique_graph(std::size_t n)
{
    ConflictGraph g = edgeless_graph(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.insert_edge(static_cast<NodeId>(i), static_cast<NodeId>(j));
    return g;
}

ConflictGraph star_graph(std::size_t leaves)
{
    ConflictGraph g;
    g.add_node(0);
    for (std::size_t i = 1; i <= leaves; ++i) g.insert_edge(0, static_cast<NodeId>(i));
    return g;
}

ConflictGraph edgeless_graph(std::size_t n)
{
    ConflictGraph g;
    for (std::size_t i = 0; i < n; ++i) g.add_node(static_cast<NodeId>(i));
    return g;
}

ConflictGraph erdos_renyi(std::size_t n, double p, std::uint64_t seed)
{
    ConflictGraph g = edgeless_graph(n);
    SplitMix64 rng(mix64(seed, 0x6572646f73ULL));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.unit() < p) g.insert_edge(static_cast<NodeId>(i), static_cast<NodeId>(j));
    return g;
}

}  // namespace fairgather
