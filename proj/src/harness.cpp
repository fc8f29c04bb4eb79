#include "skewtab/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "skewtab/graphs.hpp"
#include "skewtab/ideals.hpp"

namespace skewtab {

namespace {

struct ShapeWalk {
    int max_boxes;
    bool connected_only;
    const std::function<void(const SkewShape&)>& fn;
    std::vector<int> lambda;
    std::vector<int> mu;

    // Appends rows below the current last row.
    void extend(int boxes)
    {
        const int prev_lambda = lambda.back();
        const int prev_mu = mu.back();
        if (prev_mu == 0)
            fn(SkewShape(lambda, mu));
        for (int l = prev_mu + (connected_only ? 1 : 0); l <= prev_lambda; ++l) {
            if (l < 1)
                continue;
            for (int m = std::min(prev_mu, l - 1); m >= 0; --m) {
                const int size = l - m;
                if (boxes + size > max_boxes)
                    break;
                lambda.push_back(l);
                mu.push_back(m);
                extend(boxes + size);
                lambda.pop_back();
                mu.pop_back();
            }
        }
    }
};

unsigned resolve_jobs(int jobs)
{
    if (jobs > 0)
        return static_cast<unsigned>(jobs);
    return std::max(1u, std::thread::hardware_concurrency());
}

// Runs work(k) for k in [0, count) on `jobs` threads, handing out indices one at a time.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& work)
{
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        try {
            for (std::size_t k; !failed && (k = next.fetch_add(1)) < count;)
                work(k);
        } catch (...) {
            if (!failed.exchange(true))
                failure = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace

void for_each_skew_shape(int max_boxes, bool connected_only, const std::function<void(const SkewShape&)>& fn)
{
    if (max_boxes < 1)
        throw std::invalid_argument("max_boxes must be at least 1");
    ShapeWalk walk{max_boxes, connected_only, fn, {}, {}};
    for (int l = 1; l <= max_boxes; ++l) {
        for (int m = 0; m < l; ++m) {
            if (l - m > max_boxes)
                continue;
            walk.lambda = {l};
            walk.mu = {m};
            walk.extend(l - m);
        }
    }
}

std::vector<SkewShape> enumerate_skew_shapes(int max_boxes, bool connected_only)
{
    std::vector<SkewShape> out;
    for_each_skew_shape(max_boxes, connected_only, [&](const SkewShape& s) { out.push_back(s); });
    return out;
}

void for_each_filling(const SkewShape& s, int max_weight, const std::function<void(const SkewTableau&)>& fn)
{
    if (max_weight < 1)
        throw std::invalid_argument("max_weight must be at least 1");
    if (s.empty())
        return;
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= s.rows(); ++i)
        rows.emplace_back(static_cast<std::size_t>(s.lambda_at(i) - s.mu_at(i)), 1);
    for (;;) {
        fn(SkewTableau(s, rows));
        // Odometer step, last box fastest.
        std::size_t r = rows.size();
        bool carried = true;
        while (carried && r-- > 0) {
            for (std::size_t c = rows[r].size(); c-- > 0;) {
                if (rows[r][c] < max_weight) {
                    ++rows[r][c];
                    carried = false;
                    break;
                }
                rows[r][c] = 1;
            }
        }
        if (carried)
            return;
    }
}

std::vector<SkewTableau> enumerate_fillings(const SkewShape& s, int max_weight)
{
    std::vector<SkewTableau> out;
    for_each_filling(s, max_weight, [&](const SkewTableau& t) { out.push_back(t); });
    return out;
}

const char* to_string(Property p) noexcept
{
    switch (p) {
    case Property::scm:
        return "scm";
    case Property::unmixed:
        return "unmixed";
    case Property::cm:
        return "cm";
    }
    return "?";
}

Property parse_property(const std::string& name)
{
    if (name == "scm")
        return Property::scm;
    if (name == "unmixed")
        return Property::unmixed;
    if (name == "cm")
        return Property::cm;
    throw std::invalid_argument("unknown property '" + name + "' (expected scm, unmixed or cm)");
}

void check_bounds(bool weighted, const CrossCheckBounds& b)
{
    if (b.max_boxes < 1)
        throw std::invalid_argument("max boxes must be at least 1");
    if (b.jobs < 0)
        throw std::invalid_argument("jobs must be non-negative");
    if (!weighted) {
        if (b.max_boxes > max_unweighted_boxes)
            throw std::invalid_argument("unweighted cross-checks are limited to " +
                                        std::to_string(max_unweighted_boxes) + " boxes");
        return;
    }
    if (b.max_boxes > max_weighted_boxes)
        throw std::invalid_argument("weighted cross-checks are limited to " + std::to_string(max_weighted_boxes) +
                                    " boxes");
    if (b.max_weight < 1 || b.max_weight > max_weight_limit)
        throw std::invalid_argument("max weight must lie in 1.." + std::to_string(max_weight_limit));
    long long total = 0;
    for_each_skew_shape(b.max_boxes, b.connected_only, [&](const SkewShape& s) {
        total += static_cast<long long>(std::llround(std::pow(b.max_weight, static_cast<double>(s.box_count()))));
    });
    if (total > max_weighted_instances)
        throw std::invalid_argument("bounds give " + std::to_string(total) + " fillings; the limit is " +
                                    std::to_string(max_weighted_instances));
}

bool classifier_verdict(Property p, const SkewShape& s)
{
    switch (p) {
    case Property::scm:
        return is_scm_skew(s);
    case Property::unmixed:
        return is_unmixed_skew(s);
    case Property::cm:
        return classify_shape(s).cm;
    }
    return false;
}

bool oracle_verdict(Property p, const SkewShape& s)
{
    const Graph g = from_shape(s).to_graph();
    switch (p) {
    case Property::scm:
        return is_vertex_decomposable(g);
    case Property::unmixed:
        return is_unmixed_graph(g);
    case Property::cm:
        return is_unmixed_graph(g) && is_vertex_decomposable(g);
    }
    return false;
}

bool classifier_verdict(Property p, const SkewTableau& t)
{
    switch (p) {
    case Property::scm:
        return is_scm_tableau(t);
    case Property::unmixed:
        return is_unmixed_tableau(t);
    case Property::cm:
        return classify_tableau(t).cm;
    }
    return false;
}

bool oracle_verdict(Property p, const SkewTableau& t)
{
    switch (p) {
    case Property::scm:
        return is_scm_weighted_oracle(to_weighted_graph(t));
    case Property::unmixed:
        return is_unmixed_ideal(tableau_ideal(t));
    case Property::cm:
        return is_unmixed_ideal(tableau_ideal(t)) && is_scm_weighted_oracle(to_weighted_graph(t));
    }
    return false;
}

CrossCheckReport crosscheck(Property p, bool weighted, const CrossCheckBounds& bounds)
{
    check_bounds(weighted, bounds);
    const auto start = std::chrono::steady_clock::now();
    CrossCheckReport report;
    report.property = p;
    report.weighted = weighted;
    report.bounds = bounds;

    const auto shapes = enumerate_skew_shapes(bounds.max_boxes, bounds.connected_only);
    const unsigned jobs = resolve_jobs(bounds.jobs);

    // One slot per shape keeps the report independent of scheduling.
    std::vector<std::vector<Disagreement>> found(shapes.size());
    std::vector<long long> counts(shapes.size(), 0);
    parallel_for(shapes.size(), jobs, [&](std::size_t k) {
        const SkewShape& s = shapes[k];
        if (!weighted) {
            counts[k] = 1;
            const bool c = classifier_verdict(p, s);
            const bool o = oracle_verdict(p, s);
            if (c != o)
                found[k].push_back({s, std::nullopt, c, o});
            return;
        }
        for_each_filling(s, bounds.max_weight, [&](const SkewTableau& t) {
            ++counts[k];
            const bool c = classifier_verdict(p, t);
            const bool o = oracle_verdict(p, t);
            if (c != o)
                found[k].push_back({s, t, c, o});
        });
    });

    for (std::size_t k = 0; k < shapes.size(); ++k) {
        report.instances += counts[k];
        for (auto& d : found[k])
            report.disagreements.push_back(std::move(d));
    }
    report.agreements = report.instances - static_cast<long long>(report.disagreements.size());
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace skewtab
