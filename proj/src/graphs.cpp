#include "skewtab/graphs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace skewtab {

namespace {

int lowest(VertexSet s) noexcept { return std::countr_zero(s); }

// Vertices with index greater than v.
VertexSet above(int v) noexcept { return v >= 63 ? 0 : ~(vertex_bit(v + 1) - 1); }

void collect_covers(const Graph& g, VertexSet cover, VertexSet excluded, std::set<VertexSet>& out)
{
    // Lowest vertex with an uncovered edge.
    VertexSet open = g.vertices() & ~cover;
    int pick = -1;
    for (VertexSet rest = open; rest; rest &= rest - 1) {
        const int v = lowest(rest);
        if (g.neighbors(v) & ~cover) {
            pick = v;
            break;
        }
    }
    if (pick < 0) {
        out.insert(cover);
        return;
    }
    if (!(excluded & vertex_bit(pick)))
        collect_covers(g, cover | vertex_bit(pick), excluded, out);
    // pick stays out, so all its neighbours go in.
    const VertexSet nb = g.neighbors(pick);
    if (!(nb & excluded))
        collect_covers(g, cover | nb, excluded | vertex_bit(pick), out);
}

bool is_minimal_cover(const Graph& g, VertexSet cover) noexcept
{
    for (VertexSet rest = cover; rest; rest &= rest - 1) {
        const int v = lowest(rest);
        if (!(g.neighbors(v) & ~cover))
            return false;
    }
    return true;
}

} // namespace

Graph::Graph(int vertex_count) : n_(vertex_count)
{
    if (vertex_count < 0 || vertex_count > max_graph_vertices)
        throw std::length_error("graphs are limited to 64 vertices");
    adj_.assign(static_cast<std::size_t>(vertex_count), 0);
}

void Graph::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("edge endpoint out of range");
    if (u == v)
        throw std::invalid_argument("loops are not allowed");
    adj_[static_cast<std::size_t>(u)] |= vertex_bit(v);
    adj_[static_cast<std::size_t>(v)] |= vertex_bit(u);
}

std::size_t Graph::edge_count() const noexcept
{
    std::size_t twice = 0;
    for (VertexSet a : adj_)
        twice += static_cast<std::size_t>(std::popcount(a));
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (VertexSet rest = adj_[static_cast<std::size_t>(u)] & above(u); rest; rest &= rest - 1)
            out.emplace_back(u, lowest(rest));
    return out;
}

BipartiteGraph::BipartiteGraph(int x_count, int y_count) : x_count_(x_count), y_count_(y_count)
{
    if (x_count < 0 || y_count < 0)
        throw std::invalid_argument("negative side size");
}

void BipartiteGraph::add_edge(int i, int j)
{
    if (i < 1 || i > x_count_ || j < 1 || j > y_count_)
        throw std::out_of_range("bipartite edge endpoint out of range");
    const std::pair<int, int> e{i, j};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
        edges_.insert(it, e);
}

std::string BipartiteGraph::vertex_name(int v) const
{
    return v < x_count_ ? "x" + std::to_string(v + 1) : "y" + std::to_string(v - x_count_ + 1);
}

Graph BipartiteGraph::to_graph() const
{
    Graph g(x_count_ + y_count_);
    for (auto [i, j] : edges_)
        g.add_edge(x_vertex(i), y_vertex(j));
    return g;
}

BipartiteGraph from_shape(const SkewShape& s)
{
    BipartiteGraph g(s.rows(), s.cols());
    for (Box b : s.boxes())
        g.add_edge(b.row, b.col);
    return g;
}

bool is_connected_graph(const Graph& g)
{
    VertexSet live = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.neighbors(v))
            live |= vertex_bit(v);
    if (!live)
        return true;
    VertexSet seen = vertex_bit(lowest(live));
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet rest = frontier; rest; rest &= rest - 1)
            next |= g.neighbors(lowest(rest));
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == live;
}

std::vector<VertexSet> minimal_vertex_covers(const Graph& g)
{
    std::set<VertexSet> candidates;
    collect_covers(g, 0, 0, candidates);
    std::vector<VertexSet> out;
    for (VertexSet c : candidates)
        if (is_minimal_cover(g, c))
            out.push_back(c);
    return out;
}

std::vector<VertexSet> minimal_vertex_covers(const BipartiteGraph& g)
{
    return minimal_vertex_covers(g.to_graph());
}

bool is_unmixed_graph(const Graph& g)
{
    const auto covers = minimal_vertex_covers(g);
    return std::all_of(covers.begin(), covers.end(),
                       [&](VertexSet c) { return std::popcount(c) == std::popcount(covers.front()); });
}

bool is_unmixed_graph(const BipartiteGraph& g)
{
    return is_unmixed_graph(g.to_graph());
}

VertexSet VertexDecomposability::non_isolated(VertexSet induced) const noexcept
{
    VertexSet live = 0;
    for (VertexSet rest = induced; rest; rest &= rest - 1) {
        const int v = lowest(rest);
        if (g_.neighbors(v) & induced)
            live |= vertex_bit(v);
    }
    return live;
}

bool VertexDecomposability::dominated_by_independent(VertexSet targets, VertexSet candidates) const
{
    if (!targets)
        return true;
    const int u = lowest(targets);
    for (VertexSet opts = g_.neighbors(u) & candidates; opts; opts &= opts - 1) {
        const int c = lowest(opts);
        const VertexSet nc = g_.neighbors(c);
        if (dominated_by_independent(targets & ~nc, candidates & ~nc & ~vertex_bit(c)))
            return true;
    }
    return false;
}

bool VertexDecomposability::is_shedding_vertex(VertexSet induced, int v) const
{
    const VertexSet nb = g_.neighbors(v) & induced;
    const VertexSet far = induced & ~nb & ~vertex_bit(v);
    // An independent set of G \ N[v] is maximal in G \ v exactly when it dominates N(v).
    return !dominated_by_independent(nb, far);
}

bool VertexDecomposability::decomposable(VertexSet induced)
{
    const VertexSet live = non_isolated(induced);
    if (!live)
        return true;
    if (auto it = memo_.find(live); it != memo_.end())
        return it->second;

    bool result = false;
    for (VertexSet rest = live; rest && !result; rest &= rest - 1) {
        const int v = lowest(rest);
        if (!is_shedding_vertex(live, v))
            continue;
        result = decomposable(live & ~vertex_bit(v)) && decomposable(live & ~g_.neighbors(v) & ~vertex_bit(v));
    }
    memo_.emplace(live, result);
    return result;
}

bool is_vertex_decomposable(const Graph& g)
{
    VertexDecomposability vd(g);
    return vd.decomposable();
}

bool is_vertex_decomposable(const BipartiteGraph& g)
{
    return is_vertex_decomposable(g.to_graph());
}

bool is_union_complete_graphs(const Graph& g)
{
    for (int v = 0; v < g.vertex_count(); ++v) {
        const VertexSet closed = g.neighbors(v) | vertex_bit(v);
        for (VertexSet rest = g.neighbors(v); rest; rest &= rest - 1) {
            const int u = lowest(rest);
            if ((g.neighbors(u) | vertex_bit(u)) != closed)
                return false;
        }
    }
    return true;
}

} // namespace skewtab
