#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "skewtab/graphs.hpp"
#include "skewtab/harness.hpp"

using namespace skewtab;

namespace {

Graph complete_bipartite(int a, int b)
{
    BipartiteGraph g(a, b);
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j)
            g.add_edge(i, j);
    return g.to_graph();
}

oracle::SmallGraph small(const Graph& g)
{
    oracle::SmallGraph s(g.vertex_count());
    for (auto [u, v] : g.edges())
        s.add(u, v);
    return s;
}

} // namespace

TEST_CASE("from_shape examples")
{
    const auto g = from_shape(SkewShape({2, 1}));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}});
    CHECK(from_shape(SkewShape({2, 2})).edges().size() == 4);
    CHECK(from_shape(SkewShape({5, 4, 4}, {2, 1})).edges().size() == 10);
    CHECK(g.vertex_name(0) == "x1");
    CHECK(g.vertex_name(2) == "y1");
}

TEST_CASE("minimal vertex cover examples")
{
    const Graph k22 = complete_bipartite(2, 2);
    // x1,x2 are vertices 0,1; y1,y2 are 2,3.
    CHECK(minimal_vertex_covers(k22) == std::vector<VertexSet>{0b0011, 0b1100});

    BipartiteGraph star(1, 2);
    star.add_edge(1, 1);
    star.add_edge(1, 2);
    CHECK(minimal_vertex_covers(star) == std::vector<VertexSet>{0b001, 0b110});

    std::set<int> sizes;
    for (VertexSet c : minimal_vertex_covers(from_shape(SkewShape({3, 2}))))
        sizes.insert(std::popcount(c));
    CHECK(sizes == std::set<int>{2, 3});
}

TEST_CASE("unmixed graph examples")
{
    CHECK(is_unmixed_graph(complete_bipartite(2, 2)));
    CHECK_FALSE(is_unmixed_graph(from_shape(SkewShape({3, 2}))));
    CHECK(is_unmixed_graph(from_shape(SkewShape({6, 6, 6, 6, 2, 2}, {5, 4, 1, 1, 1, 0}))));
}

TEST_CASE("vertex decomposability examples")
{
    CHECK_FALSE(is_vertex_decomposable(complete_bipartite(2, 2)));
    CHECK(is_vertex_decomposable(Graph(5)));
    CHECK(is_vertex_decomposable(from_shape(SkewShape({3, 3, 2, 1}))));
    for (int a = 2; a <= 4; ++a)
        for (int b = 2; b <= 4; ++b)
            CHECK_FALSE(is_vertex_decomposable(complete_bipartite(a, b)));
    CHECK(is_vertex_decomposable(complete_bipartite(1, 4)));
}

TEST_CASE("union of complete graphs examples")
{
    Graph edge(2);
    edge.add_edge(0, 1);
    CHECK(is_union_complete_graphs(edge));
    CHECK_FALSE(is_union_complete_graphs(complete_bipartite(2, 2)));
    Graph tri_edge(5);
    tri_edge.add_edge(0, 1);
    tri_edge.add_edge(1, 2);
    tri_edge.add_edge(0, 2);
    tri_edge.add_edge(3, 4);
    CHECK(is_union_complete_graphs(tri_edge));
    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK_FALSE(is_union_complete_graphs(path));
}

TEST_CASE("graph oracles agree with subset brute force on skew Ferrers graphs")
{
    for_each_skew_shape(7, false, [&](const SkewShape& s) {
        const Graph g = from_shape(s).to_graph();
        const auto sg = small(g);
        const auto covers = minimal_vertex_covers(g);
        const auto brute = oracle::minimal_covers(sg);
        CHECK(covers == brute);
        CHECK(is_unmixed_graph(g) == oracle::unmixed(sg));
        CHECK(is_vertex_decomposable(g) == oracle::vertex_decomposable(sg, (oracle::Mask{1} << g.vertex_count()) - 1));
        // Swapping sides is conjugation.
        CHECK(is_vertex_decomposable(g) == is_vertex_decomposable(from_shape(conjugate(s))));
    });
}

TEST_CASE("graph oracles agree with brute force on random graphs")
{
    std::mt19937 rng(20261015);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 100 < 35)
                    g.add_edge(u, v);
        const auto sg = small(g);
        CHECK(minimal_vertex_covers(g) == oracle::minimal_covers(sg));
        CHECK(is_vertex_decomposable(g) == oracle::vertex_decomposable(sg, (oracle::Mask{1} << n) - 1));
        // Components are cliques exactly when no induced path on three vertices exists.
        bool p3 = false;
        for (int v = 0; v < n; ++v)
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (a != v && b != v && g.has_edge(v, a) && g.has_edge(v, b) && !g.has_edge(a, b))
                        p3 = true;
        CHECK(is_union_complete_graphs(g) == !p3);
    }
}

TEST_CASE("disjoint unions")
{
    // VD and unmixed are both decided componentwise.
    Graph g(8);
    g.add_edge(0, 1);
    g.add_edge(1, 2); // path x-y-x
    g.add_edge(3, 5);
    g.add_edge(3, 6);
    g.add_edge(4, 5);
    g.add_edge(4, 6); // K_{2,2}
    CHECK_FALSE(is_vertex_decomposable(g));
    CHECK_FALSE(is_unmixed_graph(g));
    Graph h(4);
    h.add_edge(0, 1);
    h.add_edge(2, 3);
    CHECK(is_vertex_decomposable(h));
    CHECK(is_unmixed_graph(h));
}

TEST_CASE("graph construction errors")
{
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
    CHECK_THROWS_AS(Graph(65), std::length_error);
    BipartiteGraph b(2, 2);
    CHECK_THROWS_AS(b.add_edge(0, 1), std::out_of_range);
    b.add_edge(1, 1);
    b.add_edge(1, 1);
    CHECK(b.edges().size() == 1);
}
