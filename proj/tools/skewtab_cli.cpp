// skewtab: classify skew shapes and skew tableaux, print gluing certificates,
// run exhaustive cross-checks and render diagrams.
//
// Exit codes: 0 success, 1 classifier and oracle disagree, 2 invalid input.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "skewtab/classify_shape.hpp"
#include "skewtab/harness.hpp"
#include "skewtab/io.hpp"
#include "skewtab/tableau.hpp"

using namespace skewtab;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_disagree = 1;
constexpr int exit_invalid = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path)
{
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in)
            throw InputError("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

struct Instance {
    SkewShape shape;
    std::optional<SkewTableau> filling;
};

Instance load(const std::string& shape_path, const std::string& filling_path)
{
    Instance inst;
    try {
        if (!filling_path.empty()) {
            inst.filling = tableau_from_json(read_json(filling_path));
            inst.shape = inst.filling->shape();
            if (!shape_path.empty() && shape_from_json(read_json(shape_path)) != inst.shape)
                throw InputError("the filling does not match --shape");
        } else if (!shape_path.empty()) {
            inst.shape = shape_from_json(read_json(shape_path));
        } else {
            throw InputError("give --shape or --filling");
        }
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return inst;
}

Json input_json(const Instance& inst)
{
    return inst.filling ? to_json(*inst.filling) : to_json(inst.shape);
}

Json certificates(const SkewShape& s)
{
    Json out = Json::array();
    for (const auto& c : components(s)) {
        out.push_back({{"shape", to_json(c.shape)},
                       {"row_map", c.row_map},
                       {"col_map", c.col_map},
                       {"certificate", to_json(unmixed_decomposition(c.shape))}});
    }
    return out;
}

bool flag(const PropertyFlags& f, const std::string& p)
{
    if (p == "scm")
        return f.scm;
    if (p == "unmixed")
        return f.unmixed;
    if (p == "cm")
        return f.cm;
    if (p == "buchsbaum")
        return f.buchsbaum;
    return f.gcm;
}

Json explanation(const Instance& inst, const std::string& property, const PropertyFlags& flags)
{
    Json j = Json::object();
    const bool all = property.empty();
    const bool want_scm = all || property != "unmixed";
    const bool want_unmixed = all || property != "scm";
    if (want_scm)
        j["scm"] = inst.filling ? to_json(explain_scm_tableau(*inst.filling)) : to_json(explain_scm_skew(inst.shape));
    if (want_unmixed)
        j["unmixed"] = certificates(inst.shape);
    if (all || property == "buchsbaum" || property == "gcm") {
        const bool square = inst.shape.is_square();
        Json g{{"cm", flags.cm}, {"square", square}};
        if (inst.filling)
            g["constant_filling"] = inst.filling->is_constant();
        j["gcm"] = std::move(g);
    }
    return j;
}

int run_classify(const Instance& inst, const std::string& property, bool explain, bool oracle)
{
    Json out{{"input", input_json(inst)}, {"weighted", inst.filling.has_value()}};
    if (oracle) {
        if (property == "buchsbaum" || property == "gcm")
            throw InputError("no brute-force oracle exists for " + property);
        bool agree = true;
        Json verdicts = Json::object();
        for (const char* name : {"scm", "unmixed", "cm"}) {
            if (!property.empty() && property != name)
                continue;
            const Property p = parse_property(name);
            const bool o = inst.filling ? oracle_verdict(p, *inst.filling) : oracle_verdict(p, inst.shape);
            const bool c = inst.filling ? classifier_verdict(p, *inst.filling) : classifier_verdict(p, inst.shape);
            verdicts[name] = {{"oracle", o}, {"classifier", c}};
            agree = agree && o == c;
        }
        out["oracle"] = std::move(verdicts);
        out["agree"] = agree;
        std::cout << out.dump(2) << '\n';
        return agree ? exit_ok : exit_disagree;
    }

    const PropertyFlags flags = inst.filling ? classify_tableau(*inst.filling) : classify_shape(inst.shape);
    if (property.empty()) {
        out["flags"] = to_json(flags);
    } else {
        out["property"] = property;
        out["verdict"] = flag(flags, property);
        out["vacuous"] = flags.vacuous;
    }
    if (explain && !inst.shape.empty())
        out["explain"] = explanation(inst, property, flags);
    std::cout << out.dump(2) << '\n';
    return exit_ok;
}

int run_decompose(const Instance& inst)
{
    Json out{{"shape", to_json(inst.shape)}, {"unmixed", is_unmixed_skew(inst.shape)}};
    out["components"] = certificates(inst.shape);
    std::cout << out.dump(2) << '\n';
    return exit_ok;
}

int run_crosscheck(const std::string& property, bool weighted, const CrossCheckBounds& bounds)
{
    Property p;
    try {
        p = parse_property(property);
        check_bounds(weighted, bounds);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    const auto report = crosscheck(p, weighted, bounds);
    std::cout << to_json(report).dump(2) << '\n';
    return report.ok() ? exit_ok : exit_disagree;
}

int run_render(const Instance& inst)
{
    std::cout << (inst.filling ? render(*inst.filling) : render(inst.shape));
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Classify skew Ferrers and skew tableau ideals"};
    app.require_subcommand(1);

    std::string shape_path;
    std::string filling_path;
    std::string property;
    bool explain = false;
    bool oracle = false;

    auto* classify = app.add_subcommand("classify", "Print property verdicts as JSON");
    classify->add_option("--shape", shape_path, "Shape JSON file ('-' for stdin)");
    classify->add_option("--filling", filling_path, "Filling JSON file ('-' for stdin)");
    classify->add_option("--property", property, "One property instead of all flags")
        ->check(CLI::IsMember({"scm", "unmixed", "cm", "buchsbaum", "gcm"}));
    classify->add_flag("--explain", explain, "Attach the derivation tree and gluing certificates");
    classify->add_flag("--oracle", oracle, "Run the brute-force oracles and compare");

    auto* decompose = app.add_subcommand("decompose", "Print the prime-shape gluing certificate");
    decompose->add_option("--shape", shape_path, "Shape JSON file ('-' for stdin)")->required();

    std::string cc_property;
    bool weighted = false;
    CrossCheckBounds bounds;
    auto* cross = app.add_subcommand("crosscheck", "Compare classifiers with oracles on every small instance");
    cross->add_option("--property", cc_property, "scm, unmixed or cm")->required();
    cross->add_flag("--weighted", weighted, "Check fillings instead of plain shapes");
    cross->add_option("--max-boxes", bounds.max_boxes, "Largest shape size")->required();
    cross->add_option("--max-weight", bounds.max_weight, "Largest weight in fillings");
    cross->add_flag("--connected-only", bounds.connected_only, "Skip disconnected shapes");
    cross->add_option("--jobs", bounds.jobs, "Worker threads (0 = all cores)");

    auto* render_cmd = app.add_subcommand("render", "Draw a shape or filling as ASCII");
    render_cmd->add_option("--shape", shape_path, "Shape JSON file ('-' for stdin)");
    render_cmd->add_option("--filling", filling_path, "Filling JSON file ('-' for stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid;
    }

    try {
        if (*classify)
            return run_classify(load(shape_path, filling_path), property, explain, oracle);
        if (*decompose)
            return run_decompose(load(shape_path, ""));
        if (*cross)
            return run_crosscheck(cc_property, weighted, bounds);
        return run_render(load(shape_path, filling_path));
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    } catch (const std::length_error& e) {
        std::cerr << "error: instance too large: " << e.what() << '\n';
        return exit_invalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    }
}
