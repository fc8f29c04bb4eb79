// Graphs on at most 64 vertices, the skew Ferrers graph of a shape, and the
// brute-force oracles: minimal vertex covers and vertex decomposability.

#ifndef SKEWTAB_GRAPHS_HPP
#define SKEWTAB_GRAPHS_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skewtab/shapes.hpp"

namespace skewtab {

/// Bit v is vertex v (0-based).
using VertexSet = std::uint64_t;

inline constexpr int max_graph_vertices = 64;

inline constexpr VertexSet vertex_bit(int v) noexcept { return VertexSet{1} << v; }

/// Simple undirected graph with vertices 0..n-1.
class Graph {
public:
    /// Throws std::length_error for more than 64 vertices.
    explicit Graph(int vertex_count = 0);

    int vertex_count() const noexcept { return n_; }
    VertexSet vertices() const noexcept { return n_ == 64 ? ~VertexSet{0} : vertex_bit(n_) - 1; }

    /// Throws std::out_of_range on bad endpoints and std::invalid_argument on loops.
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const noexcept { return (adj_[static_cast<std::size_t>(u)] >> v) & 1U; }
    VertexSet neighbors(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }

    std::size_t edge_count() const noexcept;
    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

/// Bipartite graph on X = {x_1..x_n} and Y = {y_1..y_m}; edges are (i, j) pairs, 1-based.
/// In `to_graph()`, x_i is vertex i - 1 and y_j is vertex n + j - 1.
class BipartiteGraph {
public:
    BipartiteGraph(int x_count, int y_count);

    int x_count() const noexcept { return x_count_; }
    int y_count() const noexcept { return y_count_; }
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

    /// Duplicate edges are ignored.
    void add_edge(int i, int j);

    int x_vertex(int i) const noexcept { return i - 1; }
    int y_vertex(int j) const noexcept { return x_count_ + j - 1; }
    std::string vertex_name(int v) const;

    Graph to_graph() const;

private:
    int x_count_;
    int y_count_;
    std::vector<std::pair<int, int>> edges_;
};

/// Edge x_i y_j for every box (i, j).
BipartiteGraph from_shape(const SkewShape& s);

/// Connectivity by graph search, ignoring isolated vertices.
bool is_connected_graph(const Graph& g);

/// All inclusion-minimal vertex covers, sorted.
std::vector<VertexSet> minimal_vertex_covers(const Graph& g);
std::vector<VertexSet> minimal_vertex_covers(const BipartiteGraph& g);

bool is_unmixed_graph(const Graph& g);
bool is_unmixed_graph(const BipartiteGraph& g);

/// Vertex decomposability of induced subgraphs of one graph, memoized on the
/// set of non-isolated vertices. Not thread-safe; use one instance per thread.
class VertexDecomposability {
public:
    explicit VertexDecomposability(const Graph& g) : g_(g) {}

    bool decomposable(VertexSet induced);
    bool decomposable() { return decomposable(g_.vertices()); }

    /// Whether no independent set of G[induced] \ N[v] is maximal in G[induced] \ v.
    bool is_shedding_vertex(VertexSet induced, int v) const;

    std::size_t memo_size() const noexcept { return memo_.size(); }

private:
    VertexSet non_isolated(VertexSet induced) const noexcept;
    bool dominated_by_independent(VertexSet targets, VertexSet candidates) const;

    const Graph& g_;
    std::unordered_map<VertexSet, bool> memo_;
};

bool is_vertex_decomposable(const Graph& g);
bool is_vertex_decomposable(const BipartiteGraph& g);

/// True iff every connected component is a clique (no induced path on three vertices).
bool is_union_complete_graphs(const Graph& g);

} // namespace skewtab

#endif
