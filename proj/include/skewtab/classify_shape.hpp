// Classification of skew Ferrers ideals (all weights one): saturation,
// the recursive sequentially Cohen-Macaulay test, the prime-shape gluing
// decomposition for unmixedness, and the derived CM / Buchsbaum / gCM flags.

#ifndef SKEWTAB_CLASSIFY_SHAPE_HPP
#define SKEWTAB_CLASSIFY_SHAPE_HPP

#include <optional>
#include <string>
#include <vector>

#include "skewtab/shapes.hpp"

namespace skewtab {

bool is_saturated(const Partition& p);

/// For partitions: sequentially Cohen-Macaulay iff saturated.
bool is_scm_ferrers(const Partition& p);

/// Structural rules that may peel a connected shape. Each pivots on the
/// neighbour of a leaf of the graph (a box alone in its column or row):
///   1: lambda_1 > lambda_2       (vertex x_1)
///   2: mu_1 + 1 = lambda_1       (vertex y_m)
///   3: lambda'_1 > lambda'_2     (vertex y_1)
///   4: mu'_1 + 1 = lambda'_1     (vertex x_n)
/// Rules 1-4 only see leaves on the boundary. When none of them applies and
/// `interior_leaves` is set, two more are offered:
///   5: some column holds a single box, in row i   (vertex x_i)
///   6: some row holds a single box, in column j   (vertex y_j)
/// Without them a shape such as (5,5,2)/(3) is wrongly rejected.
std::vector<int> applicable_rules(const SkewShape& s, bool interior_leaves = true);

/// Row of the box in the first single-box column, or 0.
int leaf_column_pivot(const SkewShape& s) noexcept;
/// Column of the box in the first single-box row, or 0.
int leaf_row_pivot(const SkewShape& s) noexcept;

/// Rows and columns removed by a rule: {G \ v, G \ N[v]}.
struct RuleDeletion {
    std::vector<int> rows;
    std::vector<int> cols;
};
std::pair<RuleDeletion, RuleDeletion> rule_deletions(const SkewShape& s, int rule);

struct ScmOptions {
    /// Store each result under the conjugate shape as well.
    bool share_conjugates = true;
    /// Offer rules 5 and 6.
    bool interior_leaves = true;
};

/// Memoized per thread, one table per option combination.
bool is_scm_skew(const SkewShape& s, const ScmOptions& options = {});

/// Derivation tree of the sequentially Cohen-Macaulay test.
struct ScmTrace {
    enum class Kind { empty, components, rule, stuck };

    SkewShape shape;
    bool scm = false;
    Kind kind = Kind::empty;
    int rule = 0;
    /// components: one child per component. rule: {after deleting v, after deleting N[v]}.
    std::vector<ScmTrace> children;
    /// Set when the node budget ran out; children are then omitted.
    bool truncated = false;
};

ScmTrace explain_scm_skew(const SkewShape& s, int node_budget = 2000);

enum class Orientation { upper, lower };

const char* to_string(Orientation o) noexcept;

/// A prime unmixed shape inside an ambient skew shape. Upper pieces are
/// translated Ferrers diagrams; lower pieces are their 180 degree rotations.
struct PrimePiece {
    Orientation orientation = Orientation::upper;
    /// The piece read in its own orientation.
    Partition partition;
    Rect bounds;
    std::vector<Box> boxes;
    std::vector<Rect> blocks;
    Rect top_right;
    Rect bottom_left;
};

struct UnmixedCertificate {
    bool unmixed = false;
    /// Ordered from the top-right piece to the bottom-left piece.
    std::vector<PrimePiece> pieces;
    /// glued_along[k] = pieces[k] cap pieces[k + 1].
    std::vector<Rect> glued_along;

    /// Failure witness: "non_square_corner_block", "row_column_mismatch" or "no_alternating_gluing".
    std::string witness_kind;
    std::string witness;
    std::optional<Rect> witness_block;
};

/// Fits `boxes` (ambient coordinates) as a prime unmixed shape of the given orientation.
std::optional<PrimePiece> fit_prime_piece(std::vector<Box> boxes, Orientation o);

/// Throws std::invalid_argument unless `s` is nonempty and connected.
UnmixedCertificate unmixed_decomposition(const SkewShape& s);

/// Checks alternation, shared extremal blocks, primality of every piece and exact box coverage.
bool validate_certificate(const SkewShape& s, const UnmixedCertificate& cert, std::string* why = nullptr);

bool is_unmixed_skew(const SkewShape& s);

struct PropertyFlags {
    bool unmixed = true;
    bool scm = true;
    bool cm = true;
    bool buchsbaum = true;
    bool gcm = true;
    /// The empty shape: every property holds vacuously.
    bool vacuous = false;

    friend bool operator==(const PropertyFlags&, const PropertyFlags&) = default;
};

PropertyFlags classify_shape(const SkewShape& s);

} // namespace skewtab

#endif
