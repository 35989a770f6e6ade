#include "gvcp/json_io.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace gvcp {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw FormError(where + ": " + what);
}

int read_int(const json& j, const char* key) {
  if (!j.contains(key)) fail("form", std::string("missing key \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number_integer()) fail(key, "expected an integer");
  return v.get<int>();
}

json vector_to_json(const Vector& v) {
  json arr = json::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

}  // namespace

json form_to_json(const ExteriorForm& form) {
  json terms = json::array();
  for (const auto& [blade, coeff] : form.terms()) {
    terms.push_back({{"indices", blade.indices()}, {"coeff", coeff}});
  }
  return {{"dim", form.dim()}, {"degree", form.degree()}, {"terms", terms}};
}

ExteriorForm form_from_json(const json& j) {
  if (!j.is_object()) fail("form", "expected a JSON object");
  const int dim = read_int(j, "dim");
  const int degree = read_int(j, "degree");
  if (dim < 1 || dim > kMaxDim) fail("dim", "must lie in [1, " + std::to_string(kMaxDim) + "]");
  if (degree < 0 || degree > dim) fail("degree", "must lie in [0, dim]");
  if (!j.contains("terms") || !j.at("terms").is_array()) fail("form", "missing array \"terms\"");

  ExteriorForm form(dim, degree);
  std::set<std::uint16_t> seen;
  const json& terms = j.at("terms");
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string where = "terms[" + std::to_string(t) + "]";
    const json& term = terms[t];
    if (!term.is_object() || !term.contains("indices") || !term.contains("coeff")) {
      fail(where, "expected {\"indices\": [...], \"coeff\": c}");
    }
    const json& indices = term.at("indices");
    if (!indices.is_array()) fail(where, "\"indices\" must be an array");
    if (static_cast<int>(indices.size()) != degree) fail(where, "expected " + std::to_string(degree) + " indices");
    std::vector<int> idx;
    for (const json& i : indices) {
      if (!i.is_number_integer()) fail(where, "indices must be integers");
      const int value = i.get<int>();
      if (value < 1 || value > dim) fail(where, "index " + std::to_string(value) + " outside 1.." + std::to_string(dim));
      if (!idx.empty() && value <= idx.back()) fail(where, "indices must be strictly increasing");
      idx.push_back(value);
    }
    const json& coeff = term.at("coeff");
    if (!coeff.is_number()) fail(where, "\"coeff\" must be a number");
    const double c = coeff.get<double>();
    if (!std::isfinite(c)) fail(where, "coefficient must be finite");
    const Blade blade = Blade::of(idx);
    if (!seen.insert(blade.mask()).second) fail(where, "duplicate index set");
    form.add_term(blade, c);
  }
  return form;
}

ExteriorForm parse_form(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormError(std::string("malformed JSON: ") + e.what());
  }
  return form_from_json(j);
}

std::string dump_form(const ExteriorForm& form) { return form_to_json(form).dump(2) + "\n"; }

json signature_to_json(const OrbitSignature& sig) {
  json arr = json::array();
  for (const auto& c : sig.clusters) arr.push_back({c.value, c.multiplicity});
  return arr;
}

OrbitSignature signature_from_json(const json& j) {
  if (!j.is_array()) throw FormError("signature: expected an array");
  OrbitSignature sig;
  for (const json& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number_integer()) {
      throw FormError("signature: expected [value, multiplicity] pairs");
    }
    sig.clusters.push_back({pair[0].get<double>(), pair[1].get<int>()});
  }
  return sig;
}

json report_to_json(const ClassificationReport& report) {
  json out;
  out["verdict"] = to_string(report.verdict);
  out["scale"] = report.scale;
  if (report.signature) out["signature"] = signature_to_json(*report.signature);
  if (report.witness) {
    out["witness"] = {
        {"vectors", {vector_to_json(report.witness->first), vector_to_json(report.witness->second)}},
        {"signatures",
         {signature_to_json(report.witness->first_signature), signature_to_json(report.witness->second_signature)}},
    };
  }
  out["diagnostics"] = report.diagnostics;
  return out;
}

}  // namespace gvcp
