#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "skewtab/ideals.hpp"

using namespace skewtab;

namespace {

MonomialIdeal ideal(std::vector<std::string> vars, const std::string& text)
{
    return parse_debug_string(text, std::move(vars));
}

const std::vector<std::string> xy{"x", "y"};

std::vector<oracle::Mask> supports_of(const MonomialIdeal& i)
{
    std::vector<oracle::Mask> out;
    for (const auto& g : i.generators()) {
        oracle::Mask m = 0;
        for (std::size_t v = 0; v < g.size(); ++v)
            if (g[v] > 0)
                m |= oracle::Mask{1} << v;
        out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

WeightedGraph weighted(int n, const std::vector<oracle::WEdge>& edges)
{
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v)
        names.push_back("v" + std::to_string(v));
    WeightedGraph g(names);
    for (const auto& e : edges)
        g.add_edge(e.u, e.v, e.w);
    return g;
}

std::set<std::vector<oracle::Mask>> library_radicals(const WeightedGraph& g)
{
    std::set<std::vector<oracle::Mask>> out;
    for (const auto& r : associated_radicals_weighted(g))
        out.insert(supports_of(r));
    return out;
}

} // namespace

TEST_CASE("debug format round trip")
{
    const auto i = ideal({"x1", "y1", "y2"}, "x1^2 y1^2\nx1 y2^3\n");
    CHECK(i.generators() == std::vector<Exponents>{{1, 0, 3}, {2, 2, 0}});
    CHECK(to_debug_string(i) == "x1^1 y2^3\nx1^2 y1^2\n");
    CHECK(parse_debug_string(to_debug_string(i), i.variables()) == i);
    CHECK(to_debug_string(MonomialIdeal(xy, {{0, 0}})) == "1\n");
    CHECK_THROWS_AS(parse_debug_string("z^2", xy), std::invalid_argument);
    CHECK_THROWS_AS(parse_debug_string("x^-1", xy), std::invalid_argument);
}

TEST_CASE("generators are kept minimal")
{
    const MonomialIdeal i(xy, {{2, 0}, {2, 1}, {1, 1}, {3, 3}});
    CHECK(i.generators() == std::vector<Exponents>{{1, 1}, {2, 0}});
    CHECK(i.contains({2, 5}));
    CHECK_FALSE(i.contains({0, 7}));
    CHECK(MonomialIdeal(xy, {{0, 0}, {1, 1}}).is_unit());
}

TEST_CASE("weighted edge ideal examples")
{
    CHECK(weighted_edge_ideal(weighted(2, {{0, 1, 2}})).generators() == std::vector<Exponents>{{2, 2}});
    const auto k22 = weighted_edge_ideal(weighted(4, {{0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}}));
    CHECK(k22.generators().size() == 4);
    CHECK(k22.is_squarefree());
    WeightedGraph g({"a", "b"});
    CHECK_THROWS_AS(g.add_edge(0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 1, 0), std::invalid_argument);
    g.add_edge(0, 1, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0, 2), std::invalid_argument);
}

TEST_CASE("associated radical examples")
{
    const MonomialIdeal i({"x1", "y1"}, {{2, 2}});
    CHECK(associated_radical(i, {2, 0}) == MonomialIdeal({"x1", "y1"}, {{0, 1}}));
    CHECK(associated_radical(i, {0, 0}) == i.radical());
    CHECK(i.radical() == MonomialIdeal({"x1", "y1"}, {{1, 1}}));
    const auto j = ideal(xy, "x^2\nx y");
    CHECK(associated_radical(j, {1, 0}) == ideal(xy, "x\ny"));
    CHECK_THROWS_AS(associated_radical(j, {1, 1}), std::invalid_argument);
}

TEST_CASE("weighted associated radical examples")
{
    const auto edge = weighted(2, {{0, 1, 2}});
    CHECK(library_radicals(edge) == std::set<std::vector<oracle::Mask>>{{0b11}, {0b01}, {0b10}});

    // Unit weights: a = 0 gives the edge ideal itself.
    const auto path = weighted(3, {{0, 1, 1}, {1, 2, 1}});
    const auto rads = associated_radicals_weighted(path);
    CHECK(std::find(rads.begin(), rads.end(), weighted_edge_ideal(path)) != rads.end());

    const std::vector<oracle::WEdge> tri{{0, 1, 1}, {1, 2, 2}, {0, 2, 3}};
    CHECK(library_radicals(weighted(3, tri)) == oracle::radicals_by_exponents(tri, 3, 3));
}

TEST_CASE("irreducible decomposition examples")
{
    using Components = std::set<MonomialIdeal>;
    const auto as_set = [](const std::vector<MonomialIdeal>& v) { return Components(v.begin(), v.end()); };
    CHECK(as_set(irreducible_decomposition(ideal(xy, "x y"))) == Components{ideal(xy, "x"), ideal(xy, "y")});
    CHECK(as_set(irreducible_decomposition(ideal(xy, "x^2\nx y"))) == Components{ideal(xy, "x"), ideal(xy, "x^2\ny")});
    const std::vector<std::string> v3{"x1", "y1", "y2"};
    CHECK(as_set(irreducible_decomposition(ideal(v3, "x1^2 y1^2\nx1^2 y2^2"))) ==
          Components{ideal(v3, "x1^2"), ideal(v3, "y1^2\ny2^2")});
    const auto sorted = irreducible_decomposition(ideal(xy, "x^2\nx y"));
    CHECK(std::is_sorted(sorted.begin(), sorted.end()));
    CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal(xy)), std::invalid_argument);
    CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal(xy, {{0, 0}})), std::invalid_argument);
}

TEST_CASE("associated primes and unmixedness examples")
{
    CHECK(associated_primes(ideal(xy, "x y")) == std::vector<std::vector<int>>{{0}, {1}});
    CHECK(associated_primes(ideal(xy, "x^2\nx y")) == std::vector<std::vector<int>>{{0}, {0, 1}});
    CHECK_FALSE(is_unmixed_ideal(ideal(xy, "x^2\nx y")));
    CHECK(is_unmixed_ideal(ideal(xy, "x y")));

    // Squarefree edge ideals: primes are the minimal vertex covers.
    const auto g = weighted(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
    std::vector<std::vector<int>> covers;
    for (VertexSet c : minimal_vertex_covers(g.graph())) {
        std::vector<int> vs;
        for (int v = 0; v < 4; ++v)
            if (c & vertex_bit(v))
                vs.push_back(v);
        covers.push_back(vs);
    }
    std::sort(covers.begin(), covers.end());
    CHECK(associated_primes(weighted_edge_ideal(g)) == covers);
}

TEST_CASE("weighted SCM oracle examples")
{
    for (int w = 1; w <= 4; ++w)
        CHECK(is_scm_weighted_oracle(weighted(2, {{0, 1, w}})));
    CHECK_FALSE(is_scm_weighted_oracle(weighted(4, {{0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}})));
}

TEST_CASE("decomposition intersects back to the ideal on random ideals")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int nv = 1 + static_cast<int>(rng() % 4);
        std::vector<std::string> vars;
        for (int v = 0; v < nv; ++v)
            vars.push_back("z" + std::to_string(v));
        std::vector<Exponents> gens;
        const int ng = 1 + static_cast<int>(rng() % 4);
        for (int k = 0; k < ng; ++k) {
            Exponents e(static_cast<std::size_t>(nv));
            for (auto& x : e)
                x = static_cast<int>(rng() % 4);
            if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; }))
                e[0] = 1;
            gens.push_back(e);
        }
        const MonomialIdeal i(vars, gens);
        const auto comps = irreducible_decomposition(i);
        // Irredundant.
        for (std::size_t a = 0; a < comps.size(); ++a)
            for (std::size_t b = 0; b < comps.size(); ++b)
                if (a != b)
                    CHECK_FALSE(std::all_of(comps[b].generators().begin(), comps[b].generators().end(),
                                            [&](const Exponents& g) { return comps[a].contains(g); }));
        Exponents u(static_cast<std::size_t>(nv), 0);
        for (;;) {
            const bool in_all = std::all_of(comps.begin(), comps.end(), [&](const MonomialIdeal& c) { return c.contains(u); });
            CHECK(i.contains(u) == in_all);
            std::size_t k = 0;
            while (k < u.size() && u[k] == 4)
                u[k++] = 0;
            if (k == u.size())
                break;
            ++u[k];
        }
    }
}

TEST_CASE("threshold enumeration matches colon brute force, and unit weights need only 0/1 exponents")
{
    for (int e = 1; e <= 3; ++e) {
        for (const auto& [n, edges] : oracle::graphs_without_isolated_vertices(e)) {
            std::vector<oracle::WEdge> w;
            for (auto [u, v] : edges)
                w.push_back({u, v, 1});
            const auto g = weighted(n, w);
            const auto brute01 = oracle::radicals_by_exponents(w, n, 1);
            CHECK(library_radicals(g) == brute01);
            CHECK(library_radicals(g) == oracle::radicals_by_exponents(w, n, 2));
            // The engine's colon agrees with the bitmask brute force.
            std::set<std::vector<oracle::Mask>> via_engine;
            const auto I = weighted_edge_ideal(g);
            Exponents a(static_cast<std::size_t>(n), 0);
            for (;;) {
                if (!I.contains(a))
                    via_engine.insert(supports_of(associated_radical(I, a)));
                std::size_t k = 0;
                while (k < a.size() && a[k] == 1)
                    a[k++] = 0;
                if (k == a.size())
                    break;
                ++a[k];
            }
            CHECK(via_engine == brute01);
        }
    }
}

TEST_CASE("radical transfer and unmixedness descend on small weighted graphs")
{
    for (int e = 1; e <= 4; ++e) {
        for (const auto& [n, edges] : oracle::graphs_without_isolated_vertices(e)) {
            for (int mask = 0; mask < (1 << e); ++mask) {
                std::vector<oracle::WEdge> w;
                for (std::size_t k = 0; k < edges.size(); ++k)
                    w.push_back({edges[k].first, edges[k].second, 1 + ((mask >> k) & 1)});
                const auto g = weighted(n, w);
                const auto rads = associated_radicals_weighted(g);
                const std::set<MonomialIdeal> rad_set(rads.begin(), rads.end());
                // J : v stays among the associated radicals whenever it is proper.
                for (const auto& j : rads) {
                    for (int v = 0; v < (1 << n); ++v) {
                        Exponents u(static_cast<std::size_t>(n), 0);
                        for (int t = 0; t < n; ++t)
                            u[static_cast<std::size_t>(t)] = (v >> t) & 1;
                        if (j.contains(u))
                            continue;
                        CHECK(rad_set.contains(j.colon(u)));
                    }
                }
                const auto I = weighted_edge_ideal(g);
                if (!is_unmixed_ideal(I))
                    continue;
                for (const auto& j : rads)
                    CHECK(is_unmixed_ideal(j));
            }
        }
    }
}
