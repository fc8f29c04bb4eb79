#include "skewtab/classify_shape.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace skewtab {

namespace {

std::vector<int> memo_key(const SkewShape& s)
{
    std::vector<int> key;
    key.reserve(2 * static_cast<std::size_t>(s.rows()) + 1);
    key.push_back(s.rows());
    key.insert(key.end(), s.lambda().begin(), s.lambda().end());
    key.insert(key.end(), s.mu().begin(), s.mu().end());
    return key;
}

std::vector<int> range(int first, int last)
{
    std::vector<int> out;
    for (int k = first; k <= last; ++k)
        out.push_back(k);
    return out;
}

using Memo = std::map<std::vector<int>, bool>;

bool scm_connected(const SkewShape& s, Memo& memo, const ScmOptions& opt);

bool scm_all(const ShapeComponents& comps, Memo& memo, const ScmOptions& opt)
{
    return std::all_of(comps.begin(), comps.end(),
                       [&](const ShapeComponent& c) { return scm_connected(c.shape, memo, opt); });
}

bool scm_connected(const SkewShape& s, Memo& memo, const ScmOptions& opt)
{
    auto key = memo_key(s);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    std::vector<int> conj_key;
    if (opt.share_conjugates) {
        conj_key = memo_key(conjugate(s));
        if (auto it = memo.find(conj_key); it != memo.end())
            return it->second;
    }

    bool result = false;
    for (int rule : applicable_rules(s, opt.interior_leaves)) {
        const auto [without_v, without_closed] = rule_deletions(s, rule);
        if (scm_all(delete_rows_cols(s, without_v.rows, without_v.cols), memo, opt) &&
            scm_all(delete_rows_cols(s, without_closed.rows, without_closed.cols), memo, opt)) {
            result = true;
            break;
        }
    }
    memo.emplace(std::move(key), result);
    if (opt.share_conjugates)
        memo.emplace(std::move(conj_key), result);
    return result;
}

// One table per option combination so results never leak between modes.
Memo& scm_memo(const ScmOptions& opt)
{
    thread_local Memo tables[4];
    Memo& memo = tables[(opt.share_conjugates ? 1 : 0) + (opt.interior_leaves ? 2 : 0)];
    if (memo.size() > 4'000'000)
        memo.clear();
    return memo;
}

ScmTrace trace_node(const SkewShape& s, int& budget);

ScmTrace trace_components(const SkewShape& s, const ShapeComponents& comps, int& budget)
{
    ScmTrace node;
    node.shape = s;
    if (comps.empty()) {
        node.scm = true;
        node.kind = ScmTrace::Kind::empty;
        return node;
    }
    if (comps.size() == 1)
        return trace_node(comps.front().shape, budget);
    node.kind = ScmTrace::Kind::components;
    node.scm = true;
    for (const auto& c : comps) {
        node.children.push_back(trace_node(c.shape, budget));
        node.scm = node.scm && node.children.back().scm;
    }
    return node;
}

// `s` is connected and nonempty.
ScmTrace trace_node(const SkewShape& s, int& budget)
{
    ScmTrace node;
    node.shape = s;
    node.scm = is_scm_skew(s);
    const auto rules = applicable_rules(s);
    if (rules.empty()) {
        node.kind = ScmTrace::Kind::stuck;
        return node;
    }
    node.kind = ScmTrace::Kind::rule;
    node.rule = rules.front();
    if (node.scm) {
        // Report the first rule that works.
        for (int rule : rules) {
            const auto [a, b] = rule_deletions(s, rule);
            if (std::ranges::all_of(delete_rows_cols(s, a.rows, a.cols), [](const auto& c) { return is_scm_skew(c.shape); }) &&
                std::ranges::all_of(delete_rows_cols(s, b.rows, b.cols), [](const auto& c) { return is_scm_skew(c.shape); })) {
                node.rule = rule;
                break;
            }
        }
    }
    if (--budget <= 0) {
        node.truncated = true;
        return node;
    }
    const auto [a, b] = rule_deletions(s, node.rule);
    for (const auto& del : {a, b}) {
        const auto comps = delete_rows_cols(s, del.rows, del.cols);
        // Rebuild the surviving shape as a single (possibly disconnected) value for display.
        node.children.push_back(trace_components(SkewShape{}, comps, budget));
    }
    return node;
}

// ---- prime pieces ----------------------------------------------------------

bool is_unmixed_partition(const Partition& p)
{
    const auto bl = blocks(SkewShape(p));
    return std::all_of(bl.begin(), bl.end(), [](const Block& b) { return !b.corner || b.rect.is_square(); });
}

std::optional<Partition> as_translated_partition(const std::vector<Box>& sorted)
{
    if (sorted.empty())
        return std::nullopt;
    int c0 = sorted.front().col;
    for (Box b : sorted)
        c0 = std::min(c0, b.col);
    std::vector<int> parts;
    int row = sorted.front().row;
    std::size_t k = 0;
    while (k < sorted.size()) {
        if (sorted[k].row != row || sorted[k].col != c0)
            return std::nullopt;
        int len = 0;
        while (k < sorted.size() && sorted[k].row == row) {
            if (sorted[k].col != c0 + len)
                return std::nullopt;
            ++len;
            ++k;
        }
        if (!parts.empty() && len > parts.back())
            return std::nullopt;
        parts.push_back(len);
        ++row;
    }
    return Partition(std::move(parts));
}

Rect bounding_rect(const std::vector<Box>& boxes)
{
    Rect r{boxes.front().row, boxes.front().row, boxes.front().col, boxes.front().col};
    for (Box b : boxes) {
        r.row_first = std::min(r.row_first, b.row);
        r.row_last = std::max(r.row_last, b.row);
        r.col_first = std::min(r.col_first, b.col);
        r.col_last = std::max(r.col_last, b.col);
    }
    return r;
}

Rect find_block(const std::vector<Block>& bl, Box b)
{
    for (const auto& x : bl)
        if (x.rect.contains(b))
            return x.rect;
    throw std::logic_error("box outside the block grid");
}

// Membership grid over a bounding rectangle.
class BoxGrid {
public:
    explicit BoxGrid(const std::vector<Box>& boxes) : bounds_(bounding_rect(boxes))
    {
        cells_.assign(static_cast<std::size_t>(bounds_.height() * bounds_.width()), 0);
        for (Box b : boxes)
            cells_[index(b)] = 1;
    }
    bool contains(Box b) const noexcept { return bounds_.contains(b) && cells_[index(b)]; }
    bool full(const Rect& r) const noexcept
    {
        for (int i = r.row_first; i <= r.row_last; ++i)
            for (int j = r.col_first; j <= r.col_last; ++j)
                if (!contains({i, j}))
                    return false;
        return true;
    }

private:
    std::size_t index(Box b) const noexcept
    {
        return static_cast<std::size_t>((b.row - bounds_.row_first) * bounds_.width() + (b.col - bounds_.col_first));
    }
    Rect bounds_;
    std::vector<char> cells_;
};

Orientation opposite(Orientation o) noexcept
{
    return o == Orientation::upper ? Orientation::lower : Orientation::upper;
}

// Decomposes `region` into a chain of alternating prime pieces running from the
// top-right to the bottom-left. `top_right` and `first` constrain the first piece.
std::optional<std::vector<PrimePiece>> chain(const std::vector<Box>& region, const std::optional<Rect>& top_right,
                                             std::optional<Orientation> first)
{
    for (Orientation o : {Orientation::upper, Orientation::lower}) {
        if (first && o != *first)
            continue;
        auto piece = fit_prime_piece(region, o);
        if (piece && (!top_right || piece->top_right == *top_right))
            return std::vector<PrimePiece>{std::move(*piece)};
    }

    const BoxGrid grid(region);
    for (Box corner : region) {
        for (int k = 1;; ++k) {
            const Rect junction{corner.row, corner.row + k - 1, corner.col, corner.col + k - 1};
            if (!grid.full(junction))
                break;
            std::vector<Box> upper_right;
            std::vector<Box> lower_left;
            for (Box b : region) {
                const bool ur = b.row <= junction.row_last && b.col >= junction.col_first;
                const bool ll = b.row >= junction.row_first && b.col <= junction.col_last;
                if (!ur && !ll)
                    goto next_size;
                if (ur)
                    upper_right.push_back(b);
                if (ll)
                    lower_left.push_back(b);
            }
            if (upper_right.size() == static_cast<std::size_t>(k * k) ||
                lower_left.size() == static_cast<std::size_t>(k * k))
                continue;
            for (Orientation o : {Orientation::upper, Orientation::lower}) {
                if (first && o != *first)
                    continue;
                auto piece = fit_prime_piece(upper_right, o);
                if (!piece || piece->bottom_left != junction || (top_right && piece->top_right != *top_right))
                    continue;
                if (auto rest = chain(lower_left, junction, opposite(o))) {
                    rest->insert(rest->begin(), std::move(*piece));
                    return rest;
                }
            }
        next_size:;
        }
    }
    return std::nullopt;
}

} // namespace

bool is_saturated(const Partition& p)
{
    const int n = p.length();
    int repeat = 0;
    for (int i = 1; i < n; ++i) {
        if (p.part(i) == p.part(i + 1)) {
            repeat = i;
            break;
        }
    }
    if (repeat == 0)
        return true;
    const std::set<int> values(p.parts().begin(), p.parts().end());
    for (int v = p.part(repeat); v >= 1; --v)
        if (!values.contains(v))
            return false;
    return true;
}

bool is_scm_ferrers(const Partition& p)
{
    return is_saturated(p);
}

int leaf_column_pivot(const SkewShape& s) noexcept
{
    for (int j = 1; j <= s.cols(); ++j)
        if (s.col_first(j) == s.col_last(j))
            return s.col_first(j);
    return 0;
}

int leaf_row_pivot(const SkewShape& s) noexcept
{
    for (int i = 1; i <= s.rows(); ++i)
        if (s.row_first(i) == s.row_last(i))
            return s.row_first(i);
    return 0;
}

std::vector<int> applicable_rules(const SkewShape& s, bool interior_leaves)
{
    std::vector<int> rules;
    if (s.empty())
        return rules;
    if (s.lambda_at(1) > s.lambda_at(2))
        rules.push_back(1);
    if (s.mu_at(1) + 1 == s.lambda_at(1))
        rules.push_back(2);
    if (s.lambda_conj_at(1) > s.lambda_conj_at(2))
        rules.push_back(3);
    if (s.mu_conj_at(1) + 1 == s.lambda_conj_at(1))
        rules.push_back(4);
    if (rules.empty() && interior_leaves) {
        if (leaf_column_pivot(s))
            rules.push_back(5);
        if (leaf_row_pivot(s))
            rules.push_back(6);
    }
    return rules;
}

std::pair<RuleDeletion, RuleDeletion> rule_deletions(const SkewShape& s, int rule)
{
    const int n = s.rows();
    const int m = s.cols();
    RuleDeletion v;
    RuleDeletion closed;
    switch (rule) {
    case 1:
        v.rows = {1};
        closed.rows = {1};
        closed.cols = range(s.row_first(1), s.row_last(1));
        break;
    case 2:
        v.cols = {m};
        closed.cols = {m};
        closed.rows = range(s.col_first(m), s.col_last(m));
        break;
    case 3:
        v.cols = {1};
        closed.cols = {1};
        closed.rows = range(s.col_first(1), s.col_last(1));
        break;
    case 4:
        v.rows = {n};
        closed.rows = {n};
        closed.cols = range(s.row_first(n), s.row_last(n));
        break;
    case 5: {
        const int i = leaf_column_pivot(s);
        if (!i)
            throw std::invalid_argument("rule 5 needs a column with a single box");
        v.rows = {i};
        closed.rows = {i};
        closed.cols = range(s.row_first(i), s.row_last(i));
        break;
    }
    case 6: {
        const int j = leaf_row_pivot(s);
        if (!j)
            throw std::invalid_argument("rule 6 needs a row with a single box");
        v.cols = {j};
        closed.cols = {j};
        closed.rows = range(s.col_first(j), s.col_last(j));
        break;
    }
    default:
        throw std::invalid_argument("rule must lie in 1..6");
    }
    return {v, closed};
}

bool is_scm_skew(const SkewShape& s, const ScmOptions& options)
{
    return scm_all(components(s), scm_memo(options), options);
}

ScmTrace explain_scm_skew(const SkewShape& s, int node_budget)
{
    int budget = node_budget;
    ScmTrace root = trace_components(s, components(s), budget);
    root.shape = s;
    return root;
}

const char* to_string(Orientation o) noexcept
{
    return o == Orientation::upper ? "upper" : "lower";
}

std::optional<PrimePiece> fit_prime_piece(std::vector<Box> boxes, Orientation o)
{
    if (boxes.empty())
        return std::nullopt;
    std::sort(boxes.begin(), boxes.end());
    const Rect bounds = bounding_rect(boxes);

    // Piece coordinates (1-based) -> ambient coordinates.
    auto to_ambient = [&](Rect r) {
        if (o == Orientation::upper)
            return Rect{bounds.row_first + r.row_first - 1, bounds.row_first + r.row_last - 1,
                        bounds.col_first + r.col_first - 1, bounds.col_first + r.col_last - 1};
        return Rect{bounds.row_last - r.row_last + 1, bounds.row_last - r.row_first + 1,
                    bounds.col_last - r.col_last + 1, bounds.col_last - r.col_first + 1};
    };

    std::vector<Box> local;
    local.reserve(boxes.size());
    for (Box b : boxes) {
        if (o == Orientation::upper)
            local.push_back({b.row - bounds.row_first + 1, b.col - bounds.col_first + 1});
        else
            local.push_back({bounds.row_last - b.row + 1, bounds.col_last - b.col + 1});
    }
    std::sort(local.begin(), local.end());
    auto partition = as_translated_partition(local);
    if (!partition || !is_unmixed_partition(*partition))
        return std::nullopt;

    const auto grid = blocks(SkewShape(*partition));
    const Rect tr = find_block(grid, {1, partition->part(1)});
    const Rect bl = find_block(grid, {partition->length(), 1});

    PrimePiece piece;
    piece.orientation = o;
    piece.partition = *partition;
    piece.bounds = bounds;
    piece.boxes = std::move(boxes);
    for (const auto& b : grid)
        piece.blocks.push_back(to_ambient(b.rect));
    std::sort(piece.blocks.begin(), piece.blocks.end());
    piece.top_right = to_ambient(o == Orientation::upper ? tr : bl);
    piece.bottom_left = to_ambient(o == Orientation::upper ? bl : tr);
    return piece;
}

UnmixedCertificate unmixed_decomposition(const SkewShape& s)
{
    if (s.empty() || !is_connected(s))
        throw std::invalid_argument("unmixed decomposition needs a nonempty connected shape");

    UnmixedCertificate cert;
    std::optional<std::vector<PrimePiece>> pieces;
    if (s.rows() == s.cols())
        pieces = chain(s.boxes(), std::nullopt, std::nullopt);

    if (pieces) {
        cert.unmixed = true;
        cert.pieces = std::move(*pieces);
        for (std::size_t k = 0; k + 1 < cert.pieces.size(); ++k)
            cert.glued_along.push_back(cert.pieces[k].bottom_left);
        return cert;
    }

    for (const auto& b : blocks(s)) {
        if (b.corner && !b.rect.is_square()) {
            cert.witness_kind = "non_square_corner_block";
            cert.witness = "corner block of size " + std::to_string(b.rect.height()) + "x" +
                           std::to_string(b.rect.width()) + " is not square";
            cert.witness_block = b.rect;
            return cert;
        }
    }
    if (s.rows() != s.cols()) {
        cert.witness_kind = "row_column_mismatch";
        cert.witness = std::to_string(s.rows()) + " rows but " + std::to_string(s.cols()) + " columns";
        return cert;
    }
    cert.witness_kind = "no_alternating_gluing";
    cert.witness = "no chain of alternating prime unmixed shapes glued along extremal blocks covers the shape";
    return cert;
}

bool validate_certificate(const SkewShape& s, const UnmixedCertificate& cert, std::string* why)
{
    auto fail = [&](std::string msg) {
        if (why)
            *why = std::move(msg);
        return false;
    };
    if (!cert.unmixed)
        return fail("certificate reports failure");
    if (cert.pieces.empty())
        return fail("no pieces");
    if (cert.glued_along.size() + 1 != cert.pieces.size())
        return fail("glue count does not match piece count");

    std::set<Box> covered;
    for (std::size_t k = 0; k < cert.pieces.size(); ++k) {
        const auto& p = cert.pieces[k];
        auto refit = fit_prime_piece(p.boxes, p.orientation);
        if (!refit)
            return fail("piece " + std::to_string(k + 1) + " is not a prime unmixed shape");
        if (refit->top_right != p.top_right || refit->bottom_left != p.bottom_left)
            return fail("piece " + std::to_string(k + 1) + " reports wrong extremal blocks");
        covered.insert(p.boxes.begin(), p.boxes.end());
    }
    for (std::size_t k = 0; k + 1 < cert.pieces.size(); ++k) {
        const auto& a = cert.pieces[k];
        const auto& b = cert.pieces[k + 1];
        if (a.orientation == b.orientation)
            return fail("pieces " + std::to_string(k + 1) + " and " + std::to_string(k + 2) + " do not alternate");
        const Rect glue = cert.glued_along[k];
        if (a.bottom_left != glue || b.top_right != glue)
            return fail("glue block is not extremal in both pieces");
        std::set<Box> common;
        std::set<Box> bset(b.boxes.begin(), b.boxes.end());
        for (Box x : a.boxes)
            if (bset.contains(x))
                common.insert(x);
        std::set<Box> glue_boxes;
        for (int i = glue.row_first; i <= glue.row_last; ++i)
            for (int j = glue.col_first; j <= glue.col_last; ++j)
                glue_boxes.insert({i, j});
        if (common != glue_boxes)
            return fail("pieces " + std::to_string(k + 1) + " and " + std::to_string(k + 2) +
                        " do not meet exactly in the glue block");
    }
    for (std::size_t a = 0; a < cert.pieces.size(); ++a) {
        for (std::size_t b = a + 2; b < cert.pieces.size(); ++b) {
            std::set<Box> bset(cert.pieces[b].boxes.begin(), cert.pieces[b].boxes.end());
            for (Box x : cert.pieces[a].boxes)
                if (bset.contains(x))
                    return fail("non-consecutive pieces overlap");
        }
    }
    const auto all = s.boxes();
    if (covered != std::set<Box>(all.begin(), all.end()))
        return fail("pieces do not cover the shape exactly");
    return true;
}

bool is_unmixed_skew(const SkewShape& s)
{
    const auto comps = components(s);
    return std::all_of(comps.begin(), comps.end(),
                       [](const ShapeComponent& c) { return unmixed_decomposition(c.shape).unmixed; });
}

PropertyFlags classify_shape(const SkewShape& s)
{
    PropertyFlags flags;
    const auto comps = components(s);
    if (comps.empty()) {
        flags.vacuous = true;
        return flags;
    }
    for (const auto& c : comps) {
        flags.unmixed = flags.unmixed && unmixed_decomposition(c.shape).unmixed;
        flags.scm = flags.scm && is_scm_skew(c.shape);
    }
    flags.cm = flags.unmixed && flags.scm;
    // A mixed sum of two positive-dimensional rings is generalized CM only when both are CM.
    const bool square = comps.size() == 1 && comps.front().shape.is_square();
    flags.gcm = flags.cm || square;
    flags.buchsbaum = flags.gcm;
    return flags;
}

} // namespace skewtab
