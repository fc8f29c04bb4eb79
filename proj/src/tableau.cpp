#include "skewtab/tableau.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace skewtab {

namespace {

std::vector<SkewTableau> carry_weights(const SkewTableau& t, const ShapeComponents& comps)
{
    std::vector<SkewTableau> out;
    out.reserve(comps.size());
    for (const auto& c : comps) {
        std::vector<std::vector<int>> rows;
        for (int r = 1; r <= c.shape.rows(); ++r) {
            std::vector<int> row;
            for (int col = c.shape.row_first(r); col <= c.shape.row_last(r); ++col)
                row.push_back(t.weight(c.row_map[static_cast<std::size_t>(r - 1)],
                                       c.col_map[static_cast<std::size_t>(col - 1)]));
            rows.push_back(std::move(row));
        }
        out.emplace_back(c.shape, std::move(rows));
    }
    return out;
}

std::vector<int> memo_key(const SkewTableau& t, const TableauScmOptions& opt)
{
    const auto& s = t.shape();
    std::vector<int> key{static_cast<int>(opt.rule2_rows), opt.interior_leaves ? 1 : 0,
                         opt.intermediate_levels ? 1 : 0, s.rows()};
    key.insert(key.end(), s.lambda().begin(), s.lambda().end());
    key.insert(key.end(), s.mu().begin(), s.mu().end());
    for (const auto& row : t.rows())
        key.insert(key.end(), row.begin(), row.end());
    return key;
}

using Memo = std::map<std::vector<int>, bool>;

Memo& scm_memo()
{
    thread_local Memo memo;
    if (memo.size() > 2'000'000)
        memo.clear();
    return memo;
}

bool scm_connected(const SkewTableau& t, const TableauScmOptions& opt, Memo& memo);

bool scm_all(const std::vector<SkewTableau>& parts, const TableauScmOptions& opt, Memo& memo)
{
    return std::all_of(parts.begin(), parts.end(), [&](const SkewTableau& p) { return scm_connected(p, opt, memo); });
}

bool rule_succeeds(const SkewTableau& t, int rule, const TableauScmOptions& opt, Memo& memo)
{
    const auto d = weighted_rule_deletions(t, rule, opt.rule2_rows);
    const auto holds = [&](const RuleDeletion& del) {
        return scm_all(delete_rows_cols(t, del.rows, del.cols), opt, memo);
    };
    if (!holds(d.first) || !holds(d.second))
        return false;
    return !opt.intermediate_levels || std::all_of(d.intermediate.begin(), d.intermediate.end(), holds);
}

bool scm_connected(const SkewTableau& t, const TableauScmOptions& opt, Memo& memo)
{
    auto key = memo_key(t, opt);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    bool result = false;
    for (int rule : applicable_rules(t.shape(), opt.interior_leaves)) {
        if (rule_succeeds(t, rule, opt, memo)) {
            result = true;
            break;
        }
    }
    memo.emplace(std::move(key), result);
    return result;
}

TableauTrace trace_node(const SkewTableau& t, int& budget);

TableauTrace trace_parts(const SkewTableau& whole, const std::vector<SkewTableau>& parts, int& budget)
{
    if (parts.size() == 1)
        return trace_node(parts.front(), budget);
    TableauTrace node;
    node.tableau = whole;
    node.scm = true;
    if (parts.empty()) {
        node.kind = TableauTrace::Kind::empty;
        return node;
    }
    node.kind = TableauTrace::Kind::components;
    for (const auto& p : parts) {
        node.children.push_back(trace_node(p, budget));
        node.scm = node.scm && node.children.back().scm;
    }
    return node;
}

TableauTrace trace_node(const SkewTableau& t, int& budget)
{
    TableauTrace node;
    node.tableau = t;
    node.scm = is_scm_tableau(t);
    const auto rules = applicable_rules(t.shape());
    if (rules.empty()) {
        node.kind = TableauTrace::Kind::stuck;
        return node;
    }
    node.kind = TableauTrace::Kind::rule;
    node.rule = rules.front();
    if (node.scm) {
        for (int rule : rules) {
            if (rule_succeeds(t, rule, {}, scm_memo())) {
                node.rule = rule;
                break;
            }
        }
    }
    const auto d = weighted_rule_deletions(t, node.rule);
    node.threshold = d.threshold;
    if (--budget <= 0) {
        node.truncated = true;
        return node;
    }
    std::vector<RuleDeletion> branches{d.first, d.second};
    branches.insert(branches.end(), d.intermediate.begin(), d.intermediate.end());
    for (const auto& del : branches) {
        const auto parts = delete_rows_cols(t, del.rows, del.cols);
        // A multi-component child has no single tableau; it is left empty.
        node.children.push_back(trace_parts(SkewTableau{}, parts, budget));
    }
    return node;
}

// Adjacent boxes of a piece must be ordered: right and down neighbours are >= (upper) or <= (lower).
bool piece_monotone(const SkewTableau& t, const PrimePiece& piece)
{
    const std::set<Box> inside(piece.boxes.begin(), piece.boxes.end());
    for (Box b : piece.boxes) {
        for (Box next : {Box{b.row, b.col + 1}, Box{b.row + 1, b.col}}) {
            if (!inside.contains(next))
                continue;
            const int here = t.weight(b);
            const int there = t.weight(next);
            if (piece.orientation == Orientation::upper ? there < here : there > here)
                return false;
        }
    }
    return true;
}

bool constant_on(const SkewTableau& t, const Rect& r)
{
    const int w = t.weight(r.row_first, r.col_first);
    for (int i = r.row_first; i <= r.row_last; ++i)
        for (int j = r.col_first; j <= r.col_last; ++j)
            if (t.weight(i, j) != w)
                return false;
    return true;
}

bool unmixed_connected(const SkewTableau& t)
{
    const auto cert = unmixed_decomposition(t.shape());
    if (!cert.unmixed)
        return false;
    for (const auto& b : blocks(t.shape()))
        if (!constant_on(t, b.rect))
            return false;
    return std::all_of(cert.pieces.begin(), cert.pieces.end(),
                       [&](const PrimePiece& p) { return piece_monotone(t, p); });
}

} // namespace

SkewTableau::SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows))
{
    if (static_cast<int>(rows_.size()) != shape_.rows())
        throw std::invalid_argument("filling has " + std::to_string(rows_.size()) + " rows but the shape has " +
                                    std::to_string(shape_.rows()));
    for (int i = 1; i <= shape_.rows(); ++i) {
        const auto& row = rows_[static_cast<std::size_t>(i - 1)];
        const int expected = shape_.lambda_at(i) - shape_.mu_at(i);
        if (static_cast<int>(row.size()) != expected)
            throw std::invalid_argument("row " + std::to_string(i) + " needs " + std::to_string(expected) +
                                        " weights, got " + std::to_string(row.size()));
        for (int w : row)
            if (w < 1)
                throw std::invalid_argument("weights must be positive integers");
    }
}

SkewTableau SkewTableau::constant(const SkewShape& shape, int weight)
{
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= shape.rows(); ++i)
        rows.emplace_back(static_cast<std::size_t>(shape.lambda_at(i) - shape.mu_at(i)), weight);
    return SkewTableau(shape, std::move(rows));
}

int SkewTableau::weight(int i, int j) const
{
    if (!shape_.contains(i, j))
        throw std::out_of_range("(" + std::to_string(i) + "," + std::to_string(j) + ") is not a box");
    return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - shape_.mu_at(i) - 1)];
}

bool SkewTableau::is_constant() const noexcept
{
    const int first = rows_.empty() ? 0 : rows_.front().front();
    return std::ranges::all_of(rows_, [&](const auto& row) {
        return std::ranges::all_of(row, [&](int w) { return w == first; });
    });
}

int SkewTableau::max_weight() const noexcept
{
    int best = 0;
    for (const auto& row : rows_)
        for (int w : row)
            best = std::max(best, w);
    return best;
}

SkewTableau conjugate(const SkewTableau& t)
{
    const SkewShape c = conjugate(t.shape());
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= c.rows(); ++i) {
        std::vector<int> row;
        for (int j = c.row_first(i); j <= c.row_last(i); ++j)
            row.push_back(t.weight(j, i));
        rows.push_back(std::move(row));
    }
    return SkewTableau(c, std::move(rows));
}

std::vector<SkewTableau> components(const SkewTableau& t)
{
    return carry_weights(t, components(t.shape()));
}

std::vector<SkewTableau> delete_rows_cols(const SkewTableau& t, std::span<const int> rows, std::span<const int> cols)
{
    return carry_weights(t, delete_rows_cols(t.shape(), rows, cols));
}

WeightedGraph to_weighted_graph(const SkewTableau& t)
{
    const auto& s = t.shape();
    std::vector<std::string> names;
    for (int i = 1; i <= s.rows(); ++i)
        names.push_back("x" + std::to_string(i));
    for (int j = 1; j <= s.cols(); ++j)
        names.push_back("y" + std::to_string(j));
    WeightedGraph g(std::move(names));
    for (Box b : s.boxes())
        g.add_edge(b.row - 1, s.rows() + b.col - 1, t.weight(b));
    return g;
}

MonomialIdeal tableau_ideal(const SkewTableau& t)
{
    return weighted_edge_ideal(to_weighted_graph(t));
}

bool is_unmixed_tableau(const SkewTableau& t)
{
    const auto parts = components(t);
    return std::all_of(parts.begin(), parts.end(), unmixed_connected);
}

WeightedRuleDeletion weighted_rule_deletions(const SkewTableau& t, int rule, ColumnRuleRows variant)
{
    const SkewShape& s = t.shape();
    const int n = s.rows();
    const int m = s.cols();
    WeightedRuleDeletion d;
    int& thr = d.threshold;
    switch (rule) {
    case 1:
        for (int j = std::max(s.lambda_at(2), s.mu_at(1)) + 1; j <= s.lambda_at(1); ++j)
            thr = std::max(thr, t.weight(1, j));
        d.first.rows = {1};
        for (int j = s.row_first(1); j <= s.row_last(1); ++j)
            if (t.weight(1, j) <= thr)
                d.second.cols.push_back(j);
        break;
    case 2: {
        int p = 1;
        while (p < n && s.mu_at(p + 1) == s.mu_at(1))
            ++p;
        const int lo = variant == ColumnRuleRows::through_p ? 1 : p;
        const int hi = variant == ColumnRuleRows::through_p ? p : n;
        for (int i = lo; i <= hi; ++i)
            if (s.contains(i, m))
                thr = std::max(thr, t.weight(i, m));
        d.first.cols = {m};
        for (int i = s.col_first(m); i <= s.col_last(m); ++i)
            if (t.weight(i, m) <= thr)
                d.second.rows.push_back(i);
        break;
    }
    case 3:
        for (int i = std::max(s.lambda_conj_at(2), s.mu_conj_at(1)) + 1; i <= s.lambda_conj_at(1); ++i)
            thr = std::max(thr, t.weight(i, 1));
        d.first.cols = {1};
        for (int i = s.col_first(1); i <= s.col_last(1); ++i)
            if (t.weight(i, 1) <= thr)
                d.second.rows.push_back(i);
        break;
    case 4: {
        int q = 1;
        while (q < m && s.mu_conj_at(q + 1) == s.mu_conj_at(1))
            ++q;
        for (int j = 1; j <= q; ++j)
            if (s.contains(n, j))
                thr = std::max(thr, t.weight(n, j));
        d.first.rows = {n};
        for (int j = s.row_first(n); j <= s.row_last(n); ++j)
            if (t.weight(n, j) <= thr)
                d.second.cols.push_back(j);
        break;
    }
    case 5: {
        // Leaf columns of the pivot row play the part of the columns j > lambda_2 in rule 1.
        const int i = leaf_column_pivot(s);
        if (!i)
            throw std::invalid_argument("rule 5 needs a column with a single box");
        for (int j = s.row_first(i); j <= s.row_last(i); ++j)
            if (s.col_first(j) == s.col_last(j))
                thr = std::max(thr, t.weight(i, j));
        d.first.rows = {i};
        for (int j = s.row_first(i); j <= s.row_last(i); ++j)
            if (t.weight(i, j) <= thr)
                d.second.cols.push_back(j);
        break;
    }
    case 6: {
        const int j = leaf_row_pivot(s);
        if (!j)
            throw std::invalid_argument("rule 6 needs a row with a single box");
        for (int i = s.col_first(j); i <= s.col_last(j); ++i)
            if (s.row_first(i) == s.row_last(i))
                thr = std::max(thr, t.weight(i, j));
        d.first.cols = {j};
        for (int i = s.col_first(j); i <= s.col_last(j); ++i)
            if (t.weight(i, j) <= thr)
                d.second.rows.push_back(i);
        break;
    }
    default:
        throw std::invalid_argument("rule must lie in 1..6");
    }
    // Pivot and its neighbour weights, read off the branch that keeps the pivot.
    const bool row_pivot = !d.first.rows.empty();
    const int pivot = row_pivot ? d.first.rows.front() : d.first.cols.front();
    std::set<int> levels;
    const int lo = row_pivot ? s.row_first(pivot) : s.col_first(pivot);
    const int hi = row_pivot ? s.row_last(pivot) : s.col_last(pivot);
    const auto weight_at = [&](int k) { return row_pivot ? t.weight(pivot, k) : t.weight(k, pivot); };
    for (int k = lo; k <= hi; ++k)
        if (weight_at(k) < thr)
            levels.insert(weight_at(k));
    for (int c : levels) {
        RuleDeletion del = d.first;
        auto& killed = row_pivot ? del.cols : del.rows;
        for (int k = lo; k <= hi; ++k)
            if (weight_at(k) <= c)
                killed.push_back(k);
        d.intermediate.push_back(std::move(del));
    }
    return d;
}

bool is_scm_tableau(const SkewTableau& t, const TableauScmOptions& options)
{
    return scm_all(components(t), options, scm_memo());
}

TableauTrace explain_scm_tableau(const SkewTableau& t, int node_budget)
{
    int budget = node_budget;
    TableauTrace root = trace_parts(t, components(t), budget);
    root.tableau = t;
    return root;
}

bool is_cm_tableau_direct(const SkewTableau& t)
{
    return is_unmixed_tableau(t) && classify_shape(t.shape()).cm;
}

PropertyFlags classify_tableau(const SkewTableau& t)
{
    PropertyFlags flags;
    const auto parts = components(t);
    if (parts.empty()) {
        flags.vacuous = true;
        return flags;
    }
    flags.unmixed = std::all_of(parts.begin(), parts.end(), unmixed_connected);
    flags.scm = is_scm_tableau(t);
    flags.cm = flags.unmixed && flags.scm;
    const bool constant_square = parts.size() == 1 && t.shape().is_square() && t.is_constant();
    flags.gcm = flags.cm || constant_square;
    flags.buchsbaum = flags.gcm;
    return flags;
}

} // namespace skewtab
