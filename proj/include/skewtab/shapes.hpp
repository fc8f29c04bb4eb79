// Partitions, skew shapes and their geometry.
//
// All row and column indices are 1-based: row i of a skew shape lambda/mu
// holds the boxes in columns mu_i + 1 ... lambda_i.

#ifndef SKEWTAB_SHAPES_HPP
#define SKEWTAB_SHAPES_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace skewtab {

struct Box {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Box&, const Box&) = default;
};

/// Inclusive rectangle of rows and columns.
struct Rect {
    int row_first = 0;
    int row_last = -1;
    int col_first = 0;
    int col_last = -1;

    int height() const noexcept { return row_last - row_first + 1; }
    int width() const noexcept { return col_last - col_first + 1; }
    int size() const noexcept { return height() < width() ? height() : width(); }
    bool is_square() const noexcept { return height() == width(); }
    bool contains(Box b) const noexcept
    {
        return b.row >= row_first && b.row <= row_last && b.col >= col_first && b.col <= col_last;
    }

    friend auto operator<=>(const Rect&, const Rect&) = default;
};

class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept;

    /// 1-based; zero past the last part.
    int part(int i) const noexcept
    {
        return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    /// Column lengths of the diagram.
    Partition conjugate() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// A skew shape lambda/mu in normal form: mu_n = 0, lambda_i > mu_i and every
/// column 1..lambda_1 holds at least one box. The default value is the empty shape.
class SkewShape {
public:
    SkewShape() = default;
    /// `mu` may be shorter than `lambda`; missing parts are zero.
    /// Throws std::invalid_argument if the pair is not a normal-form skew shape.
    explicit SkewShape(std::vector<int> lambda, std::vector<int> mu = {});
    explicit SkewShape(const Partition& lambda);

    int rows() const noexcept { return static_cast<int>(lambda_.size()); }
    int cols() const noexcept { return lambda_.empty() ? 0 : lambda_.front(); }
    bool empty() const noexcept { return lambda_.empty(); }
    std::size_t box_count() const noexcept;

    const std::vector<int>& lambda() const noexcept { return lambda_; }
    const std::vector<int>& mu() const noexcept { return mu_; }

    // 1-based accessors; zero out of range.
    int lambda_at(int i) const noexcept { return at(lambda_, i); }
    int mu_at(int i) const noexcept { return at(mu_, i); }
    int lambda_conj_at(int j) const noexcept { return at(lambda_conj_, j); }
    int mu_conj_at(int j) const noexcept { return at(mu_conj_, j); }

    int row_first(int i) const noexcept { return mu_at(i) + 1; }
    int row_last(int i) const noexcept { return lambda_at(i); }
    int col_first(int j) const noexcept { return mu_conj_at(j) + 1; }
    int col_last(int j) const noexcept { return lambda_conj_at(j); }

    bool contains(int i, int j) const noexcept
    {
        return i >= 1 && i <= rows() && j > mu_at(i) && j <= lambda_at(i);
    }
    bool contains(Box b) const noexcept { return contains(b.row, b.col); }

    bool is_partition() const noexcept;
    /// lambda = (m, ..., m) with m = number of rows and mu = 0.
    bool is_square() const noexcept;

    /// Boxes in row-major order.
    std::vector<Box> boxes() const;

    friend bool operator==(const SkewShape& a, const SkewShape& b) noexcept
    {
        return a.lambda_ == b.lambda_ && a.mu_ == b.mu_;
    }
    friend auto operator<=>(const SkewShape& a, const SkewShape& b) noexcept
    {
        if (auto c = a.lambda_ <=> b.lambda_; c != 0)
            return c;
        return a.mu_ <=> b.mu_;
    }

private:
    static int at(const std::vector<int>& v, int i) noexcept
    {
        return i >= 1 && i <= static_cast<int>(v.size()) ? v[static_cast<std::size_t>(i - 1)] : 0;
    }

    std::vector<int> lambda_;
    std::vector<int> mu_;
    std::vector<int> lambda_conj_;
    std::vector<int> mu_conj_;
};

/// Inclusive column interval of one row; empty when first > last.
struct RowInterval {
    int first = 1;
    int last = 0;

    bool empty() const noexcept { return first > last; }
};

/// One connected piece of a normalized box collection. `row_map[k]` is the
/// ambient row of local row k + 1, likewise `col_map` for columns.
struct ShapeComponent {
    SkewShape shape;
    std::vector<int> row_map;
    std::vector<int> col_map;
};

using ShapeComponents = std::vector<ShapeComponent>;

struct Block {
    Rect rect;
    bool corner = false;
};

SkewShape conjugate(const SkewShape& s);

/// Reflection across the anti-diagonal: (i, j) -> (m + 1 - j, n + 1 - i).
SkewShape anti_transpose(const SkewShape& s);

/// Rows are listed top to bottom in ambient coordinates. Empty rows and empty
/// columns are dropped and the rest is split into connected skew shapes.
/// Throws std::invalid_argument if the rows do not come from a skew shape.
ShapeComponents normalize(std::span<const RowInterval> rows);

/// Same as above for rows given as explicit column lists; each list must be a
/// contiguous run of columns.
ShapeComponents normalize(const std::vector<std::vector<int>>& rows);

bool is_connected(const SkewShape& s);

/// Connected components (a single component for connected shapes, none for the empty shape).
ShapeComponents components(const SkewShape& s);

ShapeComponents delete_rows_cols(const SkewShape& s, std::span<const int> rows, std::span<const int> cols);

/// Block grid: rows are cut wherever (lambda_i, mu_i) changes and columns
/// wherever (lambda'_j, mu'_j) changes. Sorted by (row_first, col_first).
std::vector<Block> blocks(const SkewShape& s);

} // namespace skewtab

#endif
