#include "skewtab/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace skewtab {

namespace {

std::vector<int> conjugate_parts(const std::vector<int>& parts, int width)
{
    std::vector<int> conj(static_cast<std::size_t>(width), 0);
    for (int p : parts)
        for (int j = 0; j < p && j < width; ++j)
            ++conj[static_cast<std::size_t>(j)];
    return conj;
}

// Intervals in compressed column coordinates plus the map back to ambient columns.
ShapeComponents split_rows(const std::vector<int>& row_ids, const std::vector<RowInterval>& rows,
                           const std::vector<int>& col_ids)
{
    ShapeComponents out;
    if (rows.empty())
        return out;

    for (std::size_t k = 1; k < rows.size(); ++k) {
        if (rows[k].first > rows[k - 1].first || rows[k].last > rows[k - 1].last)
            throw std::invalid_argument("row intervals are not weakly decreasing");
    }

    std::size_t begin = 0;
    while (begin < rows.size()) {
        std::size_t end = begin + 1;
        while (end < rows.size() && rows[end - 1].first <= rows[end].last)
            ++end;

        const int c0 = rows[end - 1].first;
        const int c1 = rows[begin].last;
        std::vector<int> lambda;
        std::vector<int> mu;
        ShapeComponent comp;
        for (std::size_t k = begin; k < end; ++k) {
            lambda.push_back(rows[k].last - c0 + 1);
            mu.push_back(rows[k].first - c0);
            comp.row_map.push_back(row_ids[k]);
        }
        for (int c = c0; c <= c1; ++c)
            comp.col_map.push_back(col_ids[static_cast<std::size_t>(c - 1)]);
        comp.shape = SkewShape(std::move(lambda), std::move(mu));
        out.push_back(std::move(comp));
        begin = end;
    }
    return out;
}

// Drops empty rows and columns; `rows` are in ambient coordinates 1..width.
ShapeComponents normalize_impl(std::span<const RowInterval> rows, const std::vector<int>& ambient_cols)
{
    int width = 0;
    for (const auto& r : rows) {
        if (r.empty())
            continue;
        if (r.first < 1)
            throw std::invalid_argument("column indices are 1-based");
        width = std::max(width, r.last);
    }
    if (width > static_cast<int>(ambient_cols.size()))
        throw std::invalid_argument("row interval exceeds ambient width");

    std::vector<char> used(static_cast<std::size_t>(width) + 1, 0);
    for (const auto& r : rows)
        for (int c = r.first; c <= r.last; ++c)
            used[static_cast<std::size_t>(c)] = 1;

    std::vector<int> compressed(static_cast<std::size_t>(width) + 1, 0);
    std::vector<int> col_ids;
    for (int c = 1; c <= width; ++c) {
        if (used[static_cast<std::size_t>(c)]) {
            col_ids.push_back(ambient_cols[static_cast<std::size_t>(c - 1)]);
            compressed[static_cast<std::size_t>(c)] = static_cast<int>(col_ids.size());
        }
    }

    std::vector<int> row_ids;
    std::vector<RowInterval> kept;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty())
            continue;
        row_ids.push_back(static_cast<int>(i) + 1);
        kept.push_back({compressed[static_cast<std::size_t>(rows[i].first)],
                        compressed[static_cast<std::size_t>(rows[i].last)]});
    }
    return split_rows(row_ids, kept, col_ids);
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const
{
    return Partition(conjugate_parts(parts_, part(1)));
}

SkewShape::SkewShape(std::vector<int> lambda, std::vector<int> mu) : lambda_(std::move(lambda))
{
    const std::size_t n = lambda_.size();
    while (mu.size() > n && mu.back() == 0)
        mu.pop_back();
    if (mu.size() > n)
        throw std::invalid_argument("mu is longer than lambda");
    mu.resize(n, 0);
    mu_ = std::move(mu);

    for (std::size_t i = 0; i < n; ++i) {
        if (lambda_[i] < 1)
            throw std::invalid_argument("lambda parts must be positive");
        if (mu_[i] < 0)
            throw std::invalid_argument("mu parts must be non-negative");
        if (i > 0 && (lambda_[i] > lambda_[i - 1] || mu_[i] > mu_[i - 1]))
            throw std::invalid_argument("lambda and mu must be weakly decreasing");
        if (mu_[i] >= lambda_[i])
            throw std::invalid_argument("row " + std::to_string(i + 1) + " is empty (mu_i >= lambda_i)");
        if (i > 0 && mu_[i - 1] > lambda_[i])
            throw std::invalid_argument("column " + std::to_string(lambda_[i] + 1) + " is empty");
    }
    if (n > 0 && mu_.back() != 0)
        throw std::invalid_argument("mu_n must be zero");

    lambda_conj_ = conjugate_parts(lambda_, cols());
    mu_conj_ = conjugate_parts(mu_, cols());
}

SkewShape::SkewShape(const Partition& lambda) : SkewShape(lambda.parts()) {}

std::size_t SkewShape::box_count() const noexcept
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < lambda_.size(); ++i)
        total += static_cast<std::size_t>(lambda_[i] - mu_[i]);
    return total;
}

bool SkewShape::is_partition() const noexcept
{
    return std::all_of(mu_.begin(), mu_.end(), [](int v) { return v == 0; });
}

bool SkewShape::is_square() const noexcept
{
    return is_partition() && std::all_of(lambda_.begin(), lambda_.end(), [&](int v) { return v == rows(); });
}

std::vector<Box> SkewShape::boxes() const
{
    std::vector<Box> out;
    out.reserve(box_count());
    for (int i = 1; i <= rows(); ++i)
        for (int j = row_first(i); j <= row_last(i); ++j)
            out.push_back({i, j});
    return out;
}

SkewShape conjugate(const SkewShape& s)
{
    if (s.empty())
        return {};
    std::vector<int> lambda;
    std::vector<int> mu;
    for (int j = 1; j <= s.cols(); ++j) {
        lambda.push_back(s.lambda_conj_at(j));
        mu.push_back(s.mu_conj_at(j));
    }
    return SkewShape(std::move(lambda), std::move(mu));
}

SkewShape anti_transpose(const SkewShape& s)
{
    if (s.empty())
        return {};
    const int n = s.rows();
    const int m = s.cols();
    std::vector<int> lambda;
    std::vector<int> mu;
    for (int r = 1; r <= m; ++r) {
        lambda.push_back(n - s.mu_conj_at(m + 1 - r));
        mu.push_back(n - s.lambda_conj_at(m + 1 - r));
    }
    return SkewShape(std::move(lambda), std::move(mu));
}

ShapeComponents normalize(std::span<const RowInterval> rows)
{
    int width = 0;
    for (const auto& r : rows)
        if (!r.empty())
            width = std::max(width, r.last);
    std::vector<int> identity(static_cast<std::size_t>(width));
    std::iota(identity.begin(), identity.end(), 1);
    return normalize_impl(rows, identity);
}

ShapeComponents normalize(const std::vector<std::vector<int>>& rows)
{
    std::vector<RowInterval> intervals;
    intervals.reserve(rows.size());
    for (auto cells : rows) {
        std::sort(cells.begin(), cells.end());
        if (cells.empty()) {
            intervals.push_back({});
            continue;
        }
        for (std::size_t k = 1; k < cells.size(); ++k)
            if (cells[k] != cells[k - 1] + 1)
                throw std::invalid_argument("row cells are not a contiguous run of columns");
        intervals.push_back({cells.front(), cells.back()});
    }
    return normalize(intervals);
}

bool is_connected(const SkewShape& s)
{
    for (int i = 2; i <= s.rows(); ++i)
        if (s.mu_at(i - 1) > s.lambda_at(i) - 1)
            return false;
    return true;
}

ShapeComponents components(const SkewShape& s)
{
    return delete_rows_cols(s, {}, {});
}

ShapeComponents delete_rows_cols(const SkewShape& s, std::span<const int> rows, std::span<const int> cols)
{
    const int n = s.rows();
    const int m = s.cols();
    std::vector<char> row_gone(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> col_gone(static_cast<std::size_t>(m) + 1, 0);
    for (int i : rows)
        if (i >= 1 && i <= n)
            row_gone[static_cast<std::size_t>(i)] = 1;
    for (int j : cols)
        if (j >= 1 && j <= m)
            col_gone[static_cast<std::size_t>(j)] = 1;

    // Surviving columns renumbered 1..k; `prefix[j]` counts survivors in 1..j.
    std::vector<int> survivors;
    std::vector<int> prefix(static_cast<std::size_t>(m) + 1, 0);
    for (int j = 1; j <= m; ++j) {
        prefix[static_cast<std::size_t>(j)] = prefix[static_cast<std::size_t>(j - 1)];
        if (!col_gone[static_cast<std::size_t>(j)]) {
            survivors.push_back(j);
            ++prefix[static_cast<std::size_t>(j)];
        }
    }

    std::vector<RowInterval> intervals;
    std::vector<int> row_ids;
    for (int i = 1; i <= n; ++i) {
        if (row_gone[static_cast<std::size_t>(i)])
            continue;
        const int first = prefix[static_cast<std::size_t>(s.mu_at(i))] + 1;
        const int last = prefix[static_cast<std::size_t>(s.lambda_at(i))];
        if (first > last)
            continue;
        intervals.push_back({first, last});
        row_ids.push_back(i);
    }

    ShapeComponents comps = normalize_impl(intervals, survivors);
    for (auto& c : comps)
        for (int& r : c.row_map)
            r = row_ids[static_cast<std::size_t>(r - 1)];
    return comps;
}

std::vector<Block> blocks(const SkewShape& s)
{
    const int n = s.rows();
    const int m = s.cols();

    std::vector<std::pair<int, int>> row_bands;
    for (int i = 1; i <= n; ++i) {
        if (i > 1 && s.lambda_at(i) == s.lambda_at(i - 1) && s.mu_at(i) == s.mu_at(i - 1))
            row_bands.back().second = i;
        else
            row_bands.emplace_back(i, i);
    }
    std::vector<std::pair<int, int>> col_bands;
    for (int j = 1; j <= m; ++j) {
        if (j > 1 && s.lambda_conj_at(j) == s.lambda_conj_at(j - 1) && s.mu_conj_at(j) == s.mu_conj_at(j - 1))
            col_bands.back().second = j;
        else
            col_bands.emplace_back(j, j);
    }

    const std::size_t rb = row_bands.size();
    const std::size_t cb = col_bands.size();
    // A band product is either entirely inside the shape or entirely outside.
    std::vector<char> inside(rb * cb, 0);
    for (std::size_t r = 0; r < rb; ++r)
        for (std::size_t c = 0; c < cb; ++c)
            inside[r * cb + c] = s.contains(row_bands[r].first, col_bands[c].first) ? 1 : 0;

    std::vector<Block> out;
    for (std::size_t r = 0; r < rb; ++r) {
        for (std::size_t c = 0; c < cb; ++c) {
            if (!inside[r * cb + c])
                continue;
            const bool right = c + 1 < cb && inside[r * cb + c + 1];
            const bool below = r + 1 < rb && inside[(r + 1) * cb + c];
            out.push_back({{row_bands[r].first, row_bands[r].second, col_bands[c].first, col_bands[c].second},
                           !right && !below});
        }
    }
    return out;
}

} // namespace skewtab
