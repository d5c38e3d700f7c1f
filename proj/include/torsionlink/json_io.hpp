#pragma once

#include <json.hpp>

#include "torsionlink/isometry.hpp"
#include "torsionlink/linking.hpp"
#include "torsionlink/matrix.hpp"

// Shared interchange formats.  All big integers and fractions travel as
// decimal strings; key order is fixed, so serialization is byte-stable.
namespace torsionlink::json_io {

using json = nlohmann::ordered_json;

// {"rows": n, "cols": m, "entries": [["-12","3",...], ...]}
json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j); // throws ParseError

// {"invariant_factors": ["7"], "gram": [["6/7"]]}
json form_to_json(const LinkingForm& f);
LinkingForm form_from_json(const json& j); // throws ParseError

// bare nested string array, or null when absent
json witness_to_json(const IsometryWitness& w);

json parse(const std::string& text); // throws ParseError

} // namespace torsionlink::json_io
