// JSON encodings and ASCII rendering.
//
//   shape:   {"lambda":[...], "mu":[...]}                 mu optional, zeros by default
//   filling: {"lambda":[...], "mu":[...], "rows":[[...]]} rows[i] covers columns mu_i+1..lambda_i

#ifndef SKEWTAB_IO_HPP
#define SKEWTAB_IO_HPP

#include <string>

#include <json.hpp>

#include "skewtab/classify_shape.hpp"
#include "skewtab/harness.hpp"
#include "skewtab/tableau.hpp"

namespace skewtab {

using Json = nlohmann::json;

/// Throw std::invalid_argument on malformed or invalid input.
SkewShape shape_from_json(const Json& j);
SkewTableau tableau_from_json(const Json& j);

Json to_json(const SkewShape& s);
Json to_json(const SkewTableau& t);
Json to_json(const Rect& r);
Json to_json(const PropertyFlags& f);
Json to_json(const UnmixedCertificate& c);
Json to_json(const ScmTrace& t);
Json to_json(const TableauTrace& t);
Json to_json(const CrossCheckReport& r);

/// One line per row: '.' outside the shape, '#' for a box.
std::string render(const SkewShape& s);
/// Boxes show their weight; cells are right-aligned and space-separated once a weight needs two digits.
std::string render(const SkewTableau& t);

} // namespace skewtab

#endif
