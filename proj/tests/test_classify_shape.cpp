#include <doctest.h>

#include "oracles.hpp"
#include "skewtab/classify_shape.hpp"
#include "skewtab/graphs.hpp"
#include "skewtab/harness.hpp"

using namespace skewtab;

namespace {

bool saturated_by_definition(const std::vector<int>& p)
{
    std::size_t first_repeat = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (p[i] == p[i + 1]) {
            first_repeat = i + 1;
            break;
        }
    }
    if (first_repeat == 0)
        return true;
    const std::set<int> parts(p.begin(), p.end());
    for (int v = 1; v <= p[first_repeat - 1]; ++v)
        if (!parts.contains(v))
            return false;
    return true;
}

void for_each_partition(int max_size, const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (!parts.empty())
            fn(parts);
        for (int p = std::min(left, cap); p >= 1; --p) {
            parts.push_back(p);
            rec(left - p, p);
            parts.pop_back();
        }
    };
    rec(max_size, max_size);
}

} // namespace

TEST_CASE("saturation examples and definition")
{
    CHECK(is_saturated(Partition({3, 3, 2, 1})));
    CHECK_FALSE(is_saturated(Partition({4, 3, 3, 1})));
    CHECK(is_saturated(Partition({5, 4, 2, 1})));
    CHECK(is_scm_ferrers(Partition({3, 3, 2, 1})));
    CHECK_FALSE(is_scm_ferrers(Partition({4, 3, 3, 1})));
    CHECK_FALSE(is_scm_ferrers(Partition({2, 2})));
    for_each_partition(12, [](const std::vector<int>& p) {
        CHECK(is_saturated(Partition(p)) == saturated_by_definition(p));
        CHECK(is_saturated(Partition(p)) == is_saturated(Partition(p).conjugate()));
    });
}

TEST_CASE("Ferrers shapes: SCM exactly when saturated")
{
    for_each_partition(10, [](const std::vector<int>& p) {
        const SkewShape s{Partition(p)};
        CHECK(is_scm_skew(s) == is_saturated(Partition(p)));
        CHECK(is_scm_skew(s) == is_vertex_decomposable(from_shape(s)));
    });
}

TEST_CASE("skew SCM examples")
{
    CHECK_FALSE(is_scm_skew(SkewShape({5, 4, 4}, {2, 0, 0})));
    CHECK(is_scm_skew(SkewShape({5, 5, 4}, {2, 1, 0})));
    CHECK(is_scm_skew(SkewShape({1})));
    CHECK(is_scm_skew(SkewShape()));
    // Disconnected: (2,2) block next to a single box.
    CHECK_FALSE(is_scm_skew(SkewShape({3, 2, 2}, {2, 0, 0})));
}

TEST_CASE("rules and deletions")
{
    const SkewShape s({5, 5, 4}, {2, 1, 0});
    // mu'_1 + 1 = lambda'_1 = 3, so only the x_n rule fires.
    CHECK(applicable_rules(s) == std::vector<int>{4});
    const auto [v, closed] = rule_deletions(s, 4);
    CHECK(v.rows == std::vector<int>{3});
    CHECK(v.cols.empty());
    CHECK(closed.rows == std::vector<int>{3});
    CHECK(closed.cols == std::vector<int>{1, 2, 3, 4});
    CHECK(applicable_rules(SkewShape({3, 1})) == std::vector<int>{1, 3});
    CHECK_THROWS_AS(rule_deletions(s, 7), std::invalid_argument);
}

TEST_CASE("the four boundary rules miss SCM shapes whose only leaf is interior")
{
    const SkewShape s({5, 5, 2}, {3, 0, 0});
    const SkewShape c = conjugate(s);
    CHECK(c == SkewShape({3, 3, 2, 2, 2}, {1, 1, 1, 0, 0}));
    for (const auto& shape : {s, c}) {
        CHECK(is_connected(shape));
        CHECK(is_vertex_decomposable(from_shape(shape)));
        CHECK(applicable_rules(shape, false).empty());
        CHECK_FALSE(is_scm_skew(shape, {.share_conjugates = true, .interior_leaves = false}));
        CHECK(is_scm_skew(shape));
    }
    CHECK(applicable_rules(s) == std::vector<int>{5});
    CHECK(leaf_column_pivot(s) == 2);
    CHECK(applicable_rules(c) == std::vector<int>{6});

    // These two are the only such shapes up to 9 boxes.
    std::vector<SkewShape> misses;
    for_each_skew_shape(9, true, [&](const SkewShape& x) {
        if (is_vertex_decomposable(from_shape(x)) && applicable_rules(x, false).empty())
            misses.push_back(x);
    });
    CHECK(misses.size() == 2);
}

TEST_CASE("SCM shapes always admit a rule, and the recursion agrees with the oracle")
{
    for_each_skew_shape(9, false, [](const SkewShape& s) {
        const bool vd = is_vertex_decomposable(from_shape(s));
        CHECK(is_scm_skew(s) == vd);
        CHECK(is_scm_skew(s, {.share_conjugates = false}) == is_scm_skew(conjugate(s), {.share_conjugates = false}));
        if (vd && is_connected(s))
            CHECK_FALSE(applicable_rules(s).empty());
    });
}

TEST_CASE("SCM trace")
{
    const auto t = explain_scm_skew(SkewShape({5, 5, 4}, {2, 1, 0}));
    CHECK(t.scm);
    CHECK(t.kind == ScmTrace::Kind::rule);
    CHECK(t.rule == 4);
    REQUIRE(t.children.size() == 2);
    CHECK(t.children[0].scm);
    CHECK(t.children[1].scm);

    const auto f = explain_scm_skew(SkewShape({5, 4, 4}, {2, 0, 0}));
    CHECK_FALSE(f.scm);

    const auto stuck = explain_scm_skew(SkewShape({2, 2}));
    CHECK(stuck.kind == ScmTrace::Kind::stuck);
    CHECK_FALSE(stuck.scm);

    const auto tiny = explain_scm_skew(SkewShape({5, 5, 4}, {2, 1, 0}), 1);
    CHECK(tiny.truncated);
    CHECK(tiny.children.empty());
}

TEST_CASE("unmixed decomposition of the ten-block shape")
{
    const SkewShape s({6, 6, 6, 6, 2, 2}, {5, 4, 1, 1, 1, 0});
    const auto cert = unmixed_decomposition(s);
    REQUIRE(cert.unmixed);
    REQUIRE(cert.pieces.size() == 3);
    CHECK(cert.pieces[0].orientation == Orientation::lower);
    CHECK(cert.pieces[1].orientation == Orientation::upper);
    CHECK(cert.pieces[2].orientation == Orientation::lower);
    CHECK(cert.glued_along[0] == Rect{3, 4, 3, 4}); // block f
    CHECK(cert.glued_along[1] == Rect{5, 5, 2, 2}); // block h
    CHECK(cert.pieces[1].partition == Partition({3, 3, 1}));
    std::string why;
    CHECK(validate_certificate(s, cert, &why));
    CHECK(why.empty());
}

TEST_CASE("unmixed decomposition examples")
{
    const auto one = unmixed_decomposition(SkewShape({3, 3, 1}));
    REQUIRE(one.unmixed);
    REQUIRE(one.pieces.size() == 1);
    CHECK(one.pieces[0].orientation == Orientation::upper);
    CHECK(one.pieces[0].top_right == Rect{1, 2, 2, 3});
    CHECK(one.pieces[0].bottom_left == Rect{3, 3, 1, 1});

    const auto bad = unmixed_decomposition(SkewShape({3, 2}));
    CHECK_FALSE(bad.unmixed);
    CHECK(bad.witness_kind == "non_square_corner_block");
    REQUIRE(bad.witness_block);
    CHECK(*bad.witness_block == Rect{2, 2, 1, 2});

    const auto row = unmixed_decomposition(SkewShape({2}));
    CHECK_FALSE(row.unmixed);
    CHECK_FALSE(is_unmixed_skew(SkewShape({2})));

    const auto five = unmixed_decomposition(SkewShape({5, 5, 3, 3, 3}, {4, 2, 2, 0, 0}));
    REQUIRE(five.unmixed);
    REQUIRE(five.pieces.size() == 3);
    CHECK(five.pieces[0].orientation == Orientation::lower);
    CHECK(five.pieces[1].orientation == Orientation::upper);
    CHECK(five.pieces[2].orientation == Orientation::lower);

    CHECK_THROWS_AS(unmixed_decomposition(SkewShape()), std::invalid_argument);
    CHECK_THROWS_AS(unmixed_decomposition(SkewShape({4, 2}, {2, 0})), std::invalid_argument);
}

TEST_CASE("certificate checker rejects tampered certificates")
{
    const SkewShape s({6, 6, 6, 6, 2, 2}, {5, 4, 1, 1, 1, 0});
    const auto cert = unmixed_decomposition(s);
    REQUIRE(cert.unmixed);

    auto flipped = cert;
    flipped.pieces[1].orientation = Orientation::lower;
    CHECK_FALSE(validate_certificate(s, flipped));

    auto short_cover = cert;
    short_cover.pieces.pop_back();
    short_cover.glued_along.pop_back();
    CHECK_FALSE(validate_certificate(s, short_cover));

    auto wrong_glue = cert;
    wrong_glue.glued_along[0] = Rect{3, 3, 3, 3};
    CHECK_FALSE(validate_certificate(s, wrong_glue));

    std::string why;
    CHECK_FALSE(validate_certificate(s, UnmixedCertificate{}, &why));
    CHECK_FALSE(why.empty());
}

TEST_CASE("unmixed classifier agrees with the cover oracle and certificates validate")
{
    for_each_skew_shape(9, false, [](const SkewShape& s) {
        CHECK(is_unmixed_skew(s) == is_unmixed_graph(from_shape(s)));
        CHECK(is_unmixed_skew(s) == is_unmixed_skew(conjugate(s)));
        if (!is_connected(s))
            return;
        const auto cert = unmixed_decomposition(s);
        if (cert.unmixed) {
            std::string why;
            CHECK_MESSAGE(validate_certificate(s, cert, &why), why);
        } else {
            CHECK_FALSE(cert.witness_kind.empty());
        }
    });
}

TEST_CASE("classify_shape examples")
{
    const auto staircase = classify_shape(SkewShape({2, 1}));
    CHECK(staircase.cm);
    CHECK(staircase.gcm);

    const auto square = classify_shape(SkewShape({2, 2}));
    CHECK(square.unmixed);
    CHECK_FALSE(square.scm);
    CHECK_FALSE(square.cm);
    CHECK(square.buchsbaum);
    CHECK(square.gcm);

    const auto mixed = classify_shape(SkewShape({3, 2}));
    CHECK(mixed.scm);
    CHECK_FALSE(mixed.unmixed);
    CHECK_FALSE(mixed.cm);
    CHECK_FALSE(mixed.buchsbaum);
    CHECK_FALSE(mixed.gcm);

    const auto empty = classify_shape(SkewShape());
    CHECK(empty.vacuous);
    CHECK(empty.cm);

    // Two squares side by side: each is gCM but the union is not.
    const auto two_squares = classify_shape(SkewShape({4, 4, 2, 2}, {2, 2, 0, 0}));
    CHECK(two_squares.unmixed);
    CHECK_FALSE(two_squares.gcm);
}

TEST_CASE("CM shapes have all blocks of size one")
{
    for_each_skew_shape(9, true, [](const SkewShape& s) {
        const auto f = classify_shape(s);
        CHECK(f.cm == (f.unmixed && f.scm));
        if (!f.cm)
            return;
        for (const auto& b : blocks(s))
            if (b.corner)
                CHECK(b.rect.size() == 1);
    });
}
