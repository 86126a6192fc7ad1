#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fairgather {

using NodeId = std::uint32_t;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rejected structural update (self-loop, duplicate or missing edge, unknown node).
class GraphError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct Edge {
    NodeId u;
    NodeId v;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple conflict graph.
///
/// Nodes are kept in ascending id order and every neighbor list is sorted, so
/// all iteration is deterministic for a given construction sequence.
class ConflictGraph {
public:
    ConflictGraph() = default;

    /// Adds an isolated node; no-op if it already exists.
    void add_node(NodeId v);
    void insert_edge(NodeId u, NodeId v);
    void remove_edge(NodeId u, NodeId v);

    bool has_node(NodeId v) const { return adjacency_.contains(v); }
    bool has_edge(NodeId u, NodeId v) const;

    std::span<const NodeId> neighbors(NodeId v) const;
    std::size_t degree(NodeId v) const { return neighbors(v).size(); }
    std::size_t max_degree() const;

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::vector<NodeId> nodes() const;
    /// All edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    /// Edge-list text: "u v" per line, "node u" for isolated nodes.
    std::string to_edge_list() const;

private:
    std::map<NodeId, std::vector<NodeId>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Parses the canonical edge-list format. Lines are "u v" or "node u";
/// '#' comments and blank lines are skipped. Self-loops and repeated edges
/// are rejected with the offending line number.
ConflictGraph from_edge_list(std::string_view text);

// Small fixtures and a seeded G(n, p) generator.
ConflictGraph path_graph(std::size_t n);
ConflictGraph cycle_graph(std::size_t n);
ConflictGraph clique_graph(std::size_t n);
/// Star with center 0 and leaves 1..leaves.
ConflictGraph star_graph(std::size_t leaves);
ConflictGraph edgeless_graph(std::size_t n);
ConflictGraph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

}  // namespace fairgather
