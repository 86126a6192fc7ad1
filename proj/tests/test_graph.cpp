#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fairgather/graph.hpp"
#include "fairgather/random.hpp"

using namespace fairgather;

namespace {

std::vector<std::size_t> degrees(const ConflictGraph& g)
{
    std::vector<std::size_t> out;
    for (NodeId v : g.nodes()) out.push_back(g.degree(v));
    return out;
}

void check_invariants(const ConflictGraph& g)
{
    std::size_t total = 0;
    for (NodeId v : g.nodes()) {
        auto adj = g.neighbors(v);
        total += adj.size();
        CHECK(std::is_sorted(adj.begin(), adj.end()));
        CHECK(std::adjacent_find(adj.begin(), adj.end()) == adj.end());
        for (NodeId w : adj) {
            CHECK(w != v);
            CHECK(g.has_edge(w, v));
        }
    }
    CHECK(total == 2 * g.edge_count());
    CHECK(g.edges().size() == g.edge_count());
}

}  // namespace

TEST_CASE("edge list parsing")
{
    SUBCASE("path")
    {
        auto g = from_edge_list("0 1\n1 2");
        CHECK(g.node_count() == 3);
        CHECK(degrees(g) == std::vector<std::size_t>{1, 2, 1});
    }
    SUBCASE("triangle")
    {
        auto g = from_edge_list("0 1\n1 2\n0 2\n");
        CHECK(degrees(g) == std::vector<std::size_t>{2, 2, 2});
    }
    SUBCASE("comments, blanks, isolated nodes")
    {
        auto g = from_edge_list("# header\n\n  3 4 \nnode 7\r\n# trailing\n");
        CHECK(g.nodes() == std::vector<NodeId>{3, 4, 7});
        CHECK(g.degree(7) == 0);
    }
    SUBCASE("self-loop")
    {
        CHECK_THROWS_AS(from_edge_list("0 0"), ParseError);
    }
    SUBCASE("duplicate edge reports its line")
    {
        try {
            from_edge_list("0 1\n\n1 0\n");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
        }
    }
    SUBCASE("malformed lines")
    {
        CHECK_THROWS_AS(from_edge_list("0 1 2"), ParseError);
        CHECK_THROWS_AS(from_edge_list("0 x"), ParseError);
        CHECK_THROWS_AS(from_edge_list("-1 2"), ParseError);
        CHECK_THROWS_AS(from_edge_list("node"), ParseError);
    }
}

TEST_CASE("dynamic edge updates")
{
    auto g = path_graph(3);
    g.insert_edge(0, 2);
    CHECK(degrees(g) == std::vector<std::size_t>{2, 2, 2});
    CHECK_THROWS_AS(g.insert_edge(0, 1), GraphError);
    CHECK_THROWS_AS(g.insert_edge(1, 1), GraphError);

    g.insert_edge(3, 4);
    CHECK(g.nodes() == std::vector<NodeId>{0, 1, 2, 3, 4});
    CHECK(g.has_edge(4, 3));

    auto tri = clique_graph(3);
    tri.remove_edge(2, 0);
    CHECK(tri.edges() == path_graph(3).edges());
    CHECK_THROWS_AS(tri.remove_edge(0, 2), GraphError);

    auto k2 = path_graph(2);
    k2.remove_edge(0, 1);
    CHECK(k2.node_count() == 2);
    CHECK(degrees(k2) == std::vector<std::size_t>{0, 0});
    CHECK_THROWS_AS(k2.neighbors(9), GraphError);
}

TEST_CASE("random update sequences keep the handshake invariant")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        ConflictGraph g;
        SplitMix64 rng(seed);
        for (int step = 0; step < 300; ++step) {
            auto u = static_cast<NodeId>(rng.below(15));
            auto v = static_cast<NodeId>(rng.below(15));
            if (u == v) continue;
            if (g.has_edge(u, v))
                g.remove_edge(u, v);
            else
                g.insert_edge(u, v);
        }
        check_invariants(g);
    }
}

TEST_CASE("edge list round trip and determinism")
{
    auto g = erdos_renyi(40, 0.1, 7);
    check_invariants(g);
    auto again = from_edge_list(g.to_edge_list());
    CHECK(again.nodes() == g.nodes());
    CHECK(again.edges() == g.edges());
    CHECK(erdos_renyi(40, 0.1, 7).edges() == g.edges());
    CHECK(erdos_renyi(40, 0.1, 8).edges() != g.edges());
}

TEST_CASE("fixtures")
{
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(clique_graph(6).edge_count() == 15);
    CHECK(star_graph(4).degree(0) == 4);
    CHECK(edgeless_graph(3).edge_count() == 0);
    CHECK(erdos_renyi(30, 0.0, 1).edge_count() == 0);
    CHECK(erdos_renyi(30, 1.0, 1).edge_count() == 435);
}
