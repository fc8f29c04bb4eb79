#include "skewtab/io.hpp"

#include <functional>
#include <stdexcept>

namespace skewtab {

namespace {

std::vector<int> int_list(const Json& j, const char* key)
{
    const auto& v = j.at(key);
    if (!v.is_array())
        throw std::invalid_argument(std::string("\"") + key + "\" must be an array of integers");
    std::vector<int> out;
    for (const auto& x : v) {
        if (!x.is_number_integer())
            throw std::invalid_argument(std::string("\"") + key + "\" must be an array of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

Json trace_shape_json(const SkewShape& s)
{
    return s.empty() ? Json(nullptr) : to_json(s);
}

const char* kind_name(int k)
{
    static const char* const names[] = {"empty", "components", "rule", "stuck"};
    return names[k];
}

std::string render_cells(int rows, int cols, const std::function<std::string(int, int)>& cell, int width)
{
    std::string out;
    for (int i = 1; i <= rows; ++i) {
        for (int j = 1; j <= cols; ++j) {
            std::string c = cell(i, j);
            if (width > 1) {
                if (j > 1)
                    out += ' ';
                out.append(static_cast<std::size_t>(width) - c.size(), ' ');
            }
            out += c;
        }
        out += '\n';
    }
    return out;
}

} // namespace

SkewShape shape_from_json(const Json& j)
{
    try {
        if (!j.is_object() || !j.contains("lambda"))
            throw std::invalid_argument("a shape needs a \"lambda\" array");
        std::vector<int> lambda = int_list(j, "lambda");
        std::vector<int> mu = j.contains("mu") ? int_list(j, "mu") : std::vector<int>{};
        if (mu.size() > lambda.size())
            throw std::invalid_argument("mu has more parts than lambda");
        return SkewShape(std::move(lambda), std::move(mu));
    } catch (const Json::exception& e) {
        throw std::invalid_argument(e.what());
    }
}

SkewTableau tableau_from_json(const Json& j)
{
    SkewShape s = shape_from_json(j);
    if (!j.contains("rows") || !j.at("rows").is_array())
        throw std::invalid_argument("a filling needs a \"rows\" array");
    std::vector<std::vector<int>> rows;
    for (const auto& row : j.at("rows")) {
        if (!row.is_array())
            throw std::invalid_argument("each entry of \"rows\" must be an array of integers");
        std::vector<int> r;
        for (const auto& x : row) {
            if (!x.is_number_integer())
                throw std::invalid_argument("weights must be integers");
            r.push_back(x.get<int>());
        }
        rows.push_back(std::move(r));
    }
    return SkewTableau(std::move(s), std::move(rows));
}

Json to_json(const SkewShape& s)
{
    return Json{{"lambda", s.lambda()}, {"mu", s.mu()}};
}

Json to_json(const SkewTableau& t)
{
    Json j = to_json(t.shape());
    j["rows"] = t.rows();
    return j;
}

Json to_json(const Rect& r)
{
    return Json{{"rows", {r.row_first, r.row_last}}, {"cols", {r.col_first, r.col_last}}};
}

Json to_json(const PropertyFlags& f)
{
    return Json{{"unmixed", f.unmixed}, {"scm", f.scm},     {"cm", f.cm},
                {"buchsbaum", f.buchsbaum}, {"gcm", f.gcm}, {"vacuous", f.vacuous}};
}

Json to_json(const UnmixedCertificate& c)
{
    Json j{{"unmixed", c.unmixed}};
    if (!c.unmixed) {
        Json w{{"kind", c.witness_kind}, {"detail", c.witness}};
        if (c.witness_block)
            w["block"] = to_json(*c.witness_block);
        j["witness"] = std::move(w);
        return j;
    }
    Json pieces = Json::array();
    for (const auto& p : c.pieces) {
        Json blocks = Json::array();
        for (const auto& b : p.blocks)
            blocks.push_back(to_json(b));
        pieces.push_back({{"orientation", to_string(p.orientation)},
                          {"partition", p.partition.parts()},
                          {"bounds", to_json(p.bounds)},
                          {"blocks", std::move(blocks)},
                          {"top_right", to_json(p.top_right)},
                          {"bottom_left", to_json(p.bottom_left)}});
    }
    Json glue = Json::array();
    for (const auto& g : c.glued_along)
        glue.push_back(to_json(g));
    j["pieces"] = std::move(pieces);
    j["glued_along"] = std::move(glue);
    return j;
}

Json to_json(const ScmTrace& t)
{
    Json j{{"shape", trace_shape_json(t.shape)}, {"scm", t.scm}, {"kind", kind_name(static_cast<int>(t.kind))}};
    if (t.kind == ScmTrace::Kind::rule)
        j["rule"] = t.rule;
    if (t.truncated)
        j["truncated"] = true;
    if (!t.children.empty()) {
        Json kids = Json::array();
        for (const auto& c : t.children)
            kids.push_back(to_json(c));
        j["children"] = std::move(kids);
    }
    return j;
}

Json to_json(const TableauTrace& t)
{
    Json j{{"filling", t.tableau.shape().empty() ? Json(nullptr) : to_json(t.tableau)},
           {"scm", t.scm},
           {"kind", kind_name(static_cast<int>(t.kind))}};
    if (t.kind == TableauTrace::Kind::rule) {
        j["rule"] = t.rule;
        j["threshold"] = t.threshold;
    }
    if (t.truncated)
        j["truncated"] = true;
    if (!t.children.empty()) {
        Json kids = Json::array();
        for (const auto& c : t.children)
            kids.push_back(to_json(c));
        j["children"] = std::move(kids);
    }
    return j;
}

Json to_json(const CrossCheckReport& r)
{
    Json bounds{{"max_boxes", r.bounds.max_boxes}, {"connected_only", r.bounds.connected_only}};
    if (r.weighted)
        bounds["max_weight"] = r.bounds.max_weight;
    Json dis = Json::array();
    for (const auto& d : r.disagreements) {
        Json x{{"shape", to_json(d.shape)}, {"classifier", d.classifier}, {"oracle", d.oracle}};
        if (d.filling)
            x["filling"] = to_json(*d.filling);
        dis.push_back(std::move(x));
    }
    return Json{{"property", to_string(r.property)},
                {"weighted", r.weighted},
                {"bounds", std::move(bounds)},
                {"instances", r.instances},
                {"agreements", r.agreements},
                {"disagreements", std::move(dis)},
                {"seconds", r.seconds}};
}

std::string render(const SkewShape& s)
{
    return render_cells(
        s.rows(), s.cols(), [&](int i, int j) { return std::string(s.contains(i, j) ? "#" : "."); }, 1);
}

std::string render(const SkewTableau& t)
{
    const auto& s = t.shape();
    const int width = static_cast<int>(std::to_string(t.max_weight()).size());
    return render_cells(
        s.rows(), s.cols(),
        [&](int i, int j) { return s.contains(i, j) ? std::to_string(t.weight(i, j)) : std::string("."); }, width);
}

} // namespace skewtab
