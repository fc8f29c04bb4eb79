#include "skewtab/ideals.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace skewtab {

namespace {

bool divides(const Exponents& a, const Exponents& b) noexcept
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

int support_size(const Exponents& e) noexcept
{
    return static_cast<int>(std::count_if(e.begin(), e.end(), [](int v) { return v > 0; }));
}

// Irreducible components as exponent vectors: entry i > 0 means x_i^entry is a generator.
void split(std::vector<Exponents> gens, std::vector<Exponents>& leaves)
{
    gens = minimalize(std::move(gens));
    auto mixed = std::find_if(gens.begin(), gens.end(), [](const Exponents& g) { return support_size(g) > 1; });
    if (mixed == gens.end()) {
        Exponents leaf(gens.empty() ? 0 : gens.front().size(), 0);
        for (const auto& g : gens)
            for (std::size_t i = 0; i < g.size(); ++i)
                if (g[i] > 0)
                    leaf[i] = g[i];
        leaves.push_back(std::move(leaf));
        return;
    }
    const Exponents g = *mixed;
    const auto var = static_cast<std::size_t>(std::find_if(g.begin(), g.end(), [](int v) { return v > 0; }) - g.begin());

    // (J + x^a m) = (J + x^a) cap (J + m) when x^a and m are coprime.
    Exponents pure(g.size(), 0);
    pure[var] = g[var];
    Exponents rest = g;
    rest[var] = 0;

    const auto at = static_cast<std::size_t>(mixed - gens.begin());
    std::vector<Exponents> left = gens;
    left[at] = pure;
    std::vector<Exponents> right = std::move(gens);
    right[at] = rest;
    split(std::move(left), leaves);
    split(std::move(right), leaves);
}

// Component a contains component b (as ideals) when each pure power of b lies in a.
bool irreducible_contains(const Exponents& a, const Exponents& b) noexcept
{
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] > 0 && (a[i] == 0 || a[i] > b[i]))
            return false;
    return true;
}

} // namespace

std::vector<Exponents> minimalize(std::vector<Exponents> generators)
{
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    std::vector<Exponents> out;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < generators.size() && !redundant; ++j)
            redundant = j != i && divides(generators[j], generators[i]);
        if (!redundant)
            out.push_back(generators[i]);
    }
    return out;
}

MonomialIdeal::MonomialIdeal(std::vector<std::string> variables, std::vector<Exponents> generators)
    : variables_(std::move(variables))
{
    for (const auto& g : generators) {
        if (g.size() != variables_.size())
            throw std::invalid_argument("generator length does not match the variable count");
        if (std::any_of(g.begin(), g.end(), [](int v) { return v < 0; }))
            throw std::invalid_argument("negative exponent");
    }
    generators_ = minimalize(std::move(generators));
}

bool MonomialIdeal::is_unit() const noexcept
{
    return generators_.size() == 1 && support_size(generators_.front()) == 0;
}

bool MonomialIdeal::is_squarefree() const noexcept
{
    return std::all_of(generators_.begin(), generators_.end(), [](const Exponents& g) {
        return std::all_of(g.begin(), g.end(), [](int v) { return v <= 1; });
    });
}

bool MonomialIdeal::contains(const Exponents& u) const
{
    if (u.size() != variables_.size())
        throw std::invalid_argument("monomial length does not match the variable count");
    return std::any_of(generators_.begin(), generators_.end(), [&](const Exponents& g) { return divides(g, u); });
}

MonomialIdeal MonomialIdeal::colon(const Exponents& u) const
{
    if (u.size() != variables_.size())
        throw std::invalid_argument("monomial length does not match the variable count");
    std::vector<Exponents> gens;
    gens.reserve(generators_.size());
    for (const auto& g : generators_) {
        Exponents q(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            q[i] = std::max(g[i] - u[i], 0);
        gens.push_back(std::move(q));
    }
    return MonomialIdeal(variables_, std::move(gens));
}

MonomialIdeal MonomialIdeal::radical() const
{
    std::vector<Exponents> gens;
    gens.reserve(generators_.size());
    for (const auto& g : generators_) {
        Exponents s(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            s[i] = g[i] > 0 ? 1 : 0;
        gens.push_back(std::move(s));
    }
    return MonomialIdeal(variables_, std::move(gens));
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& other) const
{
    if (other.variables_ != variables_)
        throw std::invalid_argument("ideals live in different rings");
    std::vector<Exponents> gens = generators_;
    gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
    return MonomialIdeal(variables_, std::move(gens));
}

std::string to_debug_string(const MonomialIdeal& ideal)
{
    std::ostringstream os;
    for (const auto& g : ideal.generators()) {
        bool first = true;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i] == 0)
                continue;
            os << (first ? "" : " ") << ideal.variables()[i] << '^' << g[i];
            first = false;
        }
        if (first)
            os << '1';
        os << '\n';
    }
    return os.str();
}

MonomialIdeal parse_debug_string(std::string_view text, std::vector<std::string> variables)
{
    std::vector<Exponents> gens;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream tokens(line);
        std::string tok;
        Exponents e(variables.size(), 0);
        bool any = false;
        while (tokens >> tok) {
            any = true;
            if (tok == "1")
                continue;
            const auto caret = tok.find('^');
            const std::string name = tok.substr(0, caret);
            int exp = 1;
            if (caret != std::string::npos) {
                try {
                    exp = std::stoi(tok.substr(caret + 1));
                } catch (const std::exception&) {
                    throw std::invalid_argument("bad exponent in token '" + tok + "'");
                }
            }
            auto it = std::find(variables.begin(), variables.end(), name);
            if (it == variables.end())
                throw std::invalid_argument("unknown variable '" + name + "'");
            if (exp < 0)
                throw std::invalid_argument("negative exponent in token '" + tok + "'");
            e[static_cast<std::size_t>(it - variables.begin())] += exp;
        }
        if (any)
            gens.push_back(std::move(e));
    }
    return MonomialIdeal(std::move(variables), std::move(gens));
}

MonomialIdeal associated_radical(const MonomialIdeal& ideal, const Exponents& u)
{
    if (ideal.contains(u))
        throw std::invalid_argument("monomial lies in the ideal");
    return ideal.colon(u).radical();
}

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal)
{
    if (ideal.is_zero() || ideal.is_unit())
        throw std::invalid_argument("irreducible decomposition needs a proper nonzero ideal");

    std::vector<Exponents> leaves;
    split(ideal.generators(), leaves);
    std::sort(leaves.begin(), leaves.end());
    leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());

    std::vector<MonomialIdeal> out;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < leaves.size() && !redundant; ++j)
            redundant = j != i && irreducible_contains(leaves[i], leaves[j]);
        if (redundant)
            continue;
        std::vector<Exponents> gens;
        for (std::size_t v = 0; v < leaves[i].size(); ++v) {
            if (leaves[i][v] == 0)
                continue;
            Exponents e(leaves[i].size(), 0);
            e[v] = leaves[i][v];
            gens.push_back(std::move(e));
        }
        out.emplace_back(ideal.variables(), std::move(gens));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> associated_primes(const MonomialIdeal& ideal)
{
    std::vector<std::vector<int>> primes;
    for (const auto& comp : irreducible_decomposition(ideal)) {
        std::vector<int> vars;
        for (const auto& g : comp.generators())
            for (std::size_t i = 0; i < g.size(); ++i)
                if (g[i] > 0)
                    vars.push_back(static_cast<int>(i));
        std::sort(vars.begin(), vars.end());
        primes.push_back(std::move(vars));
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

bool is_unmixed_ideal(const MonomialIdeal& ideal)
{
    const auto primes = associated_primes(ideal);
    return std::all_of(primes.begin(), primes.end(),
                       [&](const std::vector<int>& p) { return p.size() == primes.front().size(); });
}

WeightedGraph::WeightedGraph(std::vector<std::string> names) : names_(std::move(names))
{
    if (names_.size() > static_cast<std::size_t>(max_graph_vertices))
        throw std::length_error("graphs are limited to 64 vertices");
}

void WeightedGraph::add_edge(int u, int v, int weight)
{
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v)
        throw std::invalid_argument("loops are not allowed");
    if (weight < 1)
        throw std::invalid_argument("edge weights must be positive");
    for (const auto& e : edges_)
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u))
            throw std::invalid_argument("repeated edge");
    edges_.push_back({u, v, weight});
}

Graph WeightedGraph::graph() const
{
    Graph g(vertex_count());
    for (const auto& e : edges_)
        g.add_edge(e.u, e.v);
    return g;
}

MonomialIdeal weighted_edge_ideal(const WeightedGraph& g)
{
    std::vector<Exponents> gens;
    for (const auto& e : g.edges()) {
        Exponents x(static_cast<std::size_t>(g.vertex_count()), 0);
        x[static_cast<std::size_t>(e.u)] = e.weight;
        x[static_cast<std::size_t>(e.v)] = e.weight;
        gens.push_back(std::move(x));
    }
    return MonomialIdeal(g.names(), std::move(gens));
}

std::vector<VertexSet> associated_radical_supports(const WeightedGraph& g)
{
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::vector<int>> levels(n, std::vector<int>{0});
    for (const auto& e : g.edges()) {
        levels[static_cast<std::size_t>(e.u)].push_back(e.weight);
        levels[static_cast<std::size_t>(e.v)].push_back(e.weight);
    }
    double grid = 1;
    for (auto& l : levels) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        grid *= static_cast<double>(l.size());
    }
    if (grid > static_cast<double>(std::uint64_t{1} << 26))
        throw std::length_error("exponent grid too large for associated radical enumeration");

    std::vector<VertexSet> supports;
    std::vector<std::size_t> digit(n, 0);
    std::vector<int> a(n, 0);
    while (true) {
        bool in_ideal = false;
        VertexSet support = 0;
        for (const auto& e : g.edges()) {
            const int au = a[static_cast<std::size_t>(e.u)];
            const int av = a[static_cast<std::size_t>(e.v)];
            if (au >= e.weight && av >= e.weight) {
                in_ideal = true;
                break;
            }
            if (au < e.weight && e.weight <= av)
                support |= vertex_bit(e.u);
            if (av < e.weight && e.weight <= au)
                support |= vertex_bit(e.v);
        }
        if (!in_ideal)
            supports.push_back(support);

        std::size_t k = 0;
        while (k < n && ++digit[k] == levels[k].size()) {
            digit[k] = 0;
            a[k] = 0;
            ++k;
        }
        if (k == n)
            break;
        a[k] = levels[k][digit[k]];
    }
    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    return supports;
}

MonomialIdeal radical_for_support(const WeightedGraph& g, VertexSet support)
{
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<Exponents> gens;
    for (std::size_t i = 0; i < n; ++i) {
        if (support & vertex_bit(static_cast<int>(i))) {
            Exponents e(n, 0);
            e[i] = 1;
            gens.push_back(std::move(e));
        }
    }
    for (const auto& e : g.edges()) {
        if ((support & vertex_bit(e.u)) || (support & vertex_bit(e.v)))
            continue;
        Exponents x(n, 0);
        x[static_cast<std::size_t>(e.u)] = 1;
        x[static_cast<std::size_t>(e.v)] = 1;
        gens.push_back(std::move(x));
    }
    return MonomialIdeal(g.names(), std::move(gens));
}

std::vector<MonomialIdeal> associated_radicals_weighted(const WeightedGraph& g)
{
    std::vector<MonomialIdeal> out;
    for (VertexSet u : associated_radical_supports(g))
        out.push_back(radical_for_support(g, u));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_scm_weighted_oracle(const WeightedGraph& g)
{
    const Graph plain = g.graph();
    VertexDecomposability vd(plain);
    for (VertexSet u : associated_radical_supports(g))
        if (!vd.decomposable(plain.vertices() & ~u))
            return false;
    return true;
}

} // namespace skewtab
