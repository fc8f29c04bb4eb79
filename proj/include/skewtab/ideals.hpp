// Monomial ideals: colon, radical, irreducible decomposition and associated
// primes, plus edge ideals of edge-weighted graphs and their associated radicals.

#ifndef SKEWTAB_IDEALS_HPP
#define SKEWTAB_IDEALS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "skewtab/graphs.hpp"

namespace skewtab {

/// Exponent vector of a monomial, indexed like the ideal's variable list.
using Exponents = std::vector<int>;

/// An ideal of k[variables] given by its minimal monomial generators.
/// No generators means the zero ideal; the zero exponent vector is the unit ideal.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(std::vector<std::string> variables, std::vector<Exponents> generators = {});

    const std::vector<std::string>& variables() const noexcept { return variables_; }
    std::size_t variable_count() const noexcept { return variables_.size(); }
    /// Minimal and sorted.
    const std::vector<Exponents>& generators() const noexcept { return generators_; }

    bool is_zero() const noexcept { return generators_.empty(); }
    bool is_unit() const noexcept;
    bool is_squarefree() const noexcept;

    bool contains(const Exponents& u) const;
    /// I : u
    MonomialIdeal colon(const Exponents& u) const;
    MonomialIdeal radical() const;
    MonomialIdeal operator+(const MonomialIdeal& other) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
    friend auto operator<=>(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::vector<std::string> variables_;
    std::vector<Exponents> generators_;
};

/// Keeps the generators that no other generator divides; sorted and deduplicated.
std::vector<Exponents> minimalize(std::vector<Exponents> generators);

/// One generator per line as `var^exp` tokens; the unit ideal is the line `1`.
std::string to_debug_string(const MonomialIdeal& ideal);
/// Inverse of to_debug_string; `x` alone means `x^1`. Throws std::invalid_argument.
MonomialIdeal parse_debug_string(std::string_view text, std::vector<std::string> variables);

/// sqrt(I : u). Throws std::invalid_argument when u lies in I.
MonomialIdeal associated_radical(const MonomialIdeal& ideal, const Exponents& u);

/// Irredundant decomposition into ideals generated by pure powers of variables.
/// Sorted. Throws std::invalid_argument for the zero or unit ideal.
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal);

/// Variable index sets of the associated primes, sorted.
std::vector<std::vector<int>> associated_primes(const MonomialIdeal& ideal);

bool is_unmixed_ideal(const MonomialIdeal& ideal);

struct WeightedEdge {
    int u = 0;
    int v = 0;
    int weight = 1;
};

/// Simple graph with a positive integer weight per edge. Vertices are named.
class WeightedGraph {
public:
    explicit WeightedGraph(std::vector<std::string> names);

    int vertex_count() const noexcept { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<WeightedEdge>& edges() const noexcept { return edges_; }

    /// Throws std::invalid_argument on loops, repeated edges or weights below 1.
    void add_edge(int u, int v, int weight);

    Graph graph() const;

private:
    std::vector<std::string> names_;
    std::vector<WeightedEdge> edges_;
};

/// ((x_u x_v)^w : uv in E)
MonomialIdeal weighted_edge_ideal(const WeightedGraph& g);

/// The sets U with sqrt(I(G,w) : x^a) = I(G \ U) + (x_i : i in U) over all
/// x^a not in I(G,w), sorted. Every a_v only needs to range over 0 and the
/// weights of edges at v. Throws std::length_error if that grid exceeds 2^26 points.
std::vector<VertexSet> associated_radical_supports(const WeightedGraph& g);

/// I(G \ U) + (x_i : i in U)
MonomialIdeal radical_for_support(const WeightedGraph& g, VertexSet support);

/// All associated radicals of I(G,w), sorted.
std::vector<MonomialIdeal> associated_radicals_weighted(const WeightedGraph& g);

/// Every associated radical has a vertex decomposable graph part. For bipartite
/// graphs this decides sequential Cohen-Macaulayness of I(G,w).
bool is_scm_weighted_oracle(const WeightedGraph& g);

} // namespace skewtab

#endif
