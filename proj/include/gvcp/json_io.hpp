#pragma once

#include "gvcp/classifier.hpp"
#include "gvcp/exterior.hpp"
#include "gvcp/spectral.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace gvcp {

using json = nlohmann::json;

/// {"dim": n, "degree": k, "terms": [{"indices": [i1, ..., ik], "coeff": c}, ...]}
/// with 1-based, strictly increasing indices; terms are emitted in lexicographic order.
json form_to_json(const ExteriorForm& form);

/// Validates the encoding; errors name the offending term.
ExteriorForm form_from_json(const json& j);

/// Parses text and then the form. Syntax errors report line and column.
ExteriorForm parse_form(const std::string& text);

/// Pretty-printed form JSON followed by a newline.
std::string dump_form(const ExteriorForm& form);

/// [[value, multiplicity], ...] ascending by value.
json signature_to_json(const OrbitSignature& sig);
OrbitSignature signature_from_json(const json& j);

/// {"verdict", "scale", "signature"?, "witness"?, "diagnostics"}.
json report_to_json(const ClassificationReport& report);

}  // namespace gvcp
