// Exhaustive instance enumeration and classifier-versus-oracle cross-checks.

#ifndef SKEWTAB_HARNESS_HPP
#define SKEWTAB_HARNESS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skewtab/shapes.hpp"
#include "skewtab/tableau.hpp"

namespace skewtab {

/// Every normal-form skew shape with 1..max_boxes boxes, each exactly once.
/// Order: by row count, then lexicographically top row first.
void for_each_skew_shape(int max_boxes, bool connected_only, const std::function<void(const SkewShape&)>& fn);
std::vector<SkewShape> enumerate_skew_shapes(int max_boxes, bool connected_only);

/// Every filling of `s` with weights in 1..max_weight, in odometer order (last box fastest).
void for_each_filling(const SkewShape& s, int max_weight, const std::function<void(const SkewTableau&)>& fn);
std::vector<SkewTableau> enumerate_fillings(const SkewShape& s, int max_weight);

enum class Property { scm, unmixed, cm };

const char* to_string(Property p) noexcept;
/// Throws std::invalid_argument for anything but "scm", "unmixed" or "cm".
Property parse_property(const std::string& name);

struct CrossCheckBounds {
    int max_boxes = 6;
    /// Only read for weighted runs.
    int max_weight = 2;
    bool connected_only = false;
    /// 0 picks the hardware concurrency.
    int jobs = 1;
};

/// Largest bounds accepted by crosscheck.
inline constexpr int max_unweighted_boxes = 12;
inline constexpr int max_weighted_boxes = 8;
inline constexpr int max_weight_limit = 4;
inline constexpr long long max_weighted_instances = 5'000'000;

struct Disagreement {
    SkewShape shape;
    std::optional<SkewTableau> filling;
    bool classifier = false;
    bool oracle = false;
};

struct CrossCheckReport {
    Property property = Property::scm;
    bool weighted = false;
    CrossCheckBounds bounds;
    long long instances = 0;
    long long agreements = 0;
    std::vector<Disagreement> disagreements;
    double seconds = 0.0;

    bool ok() const noexcept { return disagreements.empty(); }
};

/// Throws std::invalid_argument if the bounds exceed the desk-scale limits above.
void check_bounds(bool weighted, const CrossCheckBounds& bounds);

/// Classifier verdicts (shape rules, weighted rules) and brute-force
/// oracle verdicts (vertex covers, vertex decomposability, associated radicals,
/// irreducible decomposition) for one instance.
bool classifier_verdict(Property p, const SkewShape& s);
bool oracle_verdict(Property p, const SkewShape& s);
bool classifier_verdict(Property p, const SkewTableau& t);
bool oracle_verdict(Property p, const SkewTableau& t);

/// Runs classifier and oracle on every instance within bounds. Instances are
/// split across worker threads; the report does not depend on the job count.
CrossCheckReport crosscheck(Property p, bool weighted, const CrossCheckBounds& bounds);

} // namespace skewtab

#endif
