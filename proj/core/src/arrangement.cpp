#include "jumpcalc/arrangement.hpp"

#include "jumpcalc/matrix.hpp"

#include <json.hpp>

#include <algorithm>

namespace jumpcalc {

using nlohmann::json;

int ArrangementInput::degree() const {
  int d = 0;
  for (const auto& h : hyperplanes) d += h.mult;
  return d;
}

void validate(const ArrangementInput& a) {
  if (a.affine_dim < 2) {
    throw InputError("affine_dim must be >= 2 (got " + std::to_string(a.affine_dim) + ")");
  }
  if (a.hyperplanes.empty()) throw InputError("arrangement has no hyperplanes");
  const auto dim = static_cast<std::size_t>(a.affine_dim);
  for (std::size_t i = 0; i < a.hyperplanes.size(); ++i) {
    const auto& h = a.hyperplanes[i];
    if (h.form.size() != dim) {
      throw InputError("hyperplane " + std::to_string(i) + ": expected " + std::to_string(dim) +
                       " coefficients, got " + std::to_string(h.form.size()));
    }
    if (std::all_of(h.form.begin(), h.form.end(), [](const Rational& x) { return x == 0; })) {
      throw InputError("hyperplane " + std::to_string(i) + ": zero form");
    }
    if (h.mult < 1) {
      throw InputError("hyperplane " + std::to_string(i) + ": multiplicity < 1 (got " +
                       std::to_string(h.mult) + ")");
    }
  }
  for (std::size_t i = 0; i < a.hyperplanes.size(); ++i) {
    for (std::size_t j = i + 1; j < a.hyperplanes.size(); ++j) {
      Matrix pair(0, dim);
      pair.append_row(a.hyperplanes[i].form);
      pair.append_row(a.hyperplanes[j].form);
      if (rank(pair) < 2) {
        throw InputError("proportional forms: hyperplane pair (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
    }
  }
}

namespace {

Rational parse_coefficient(const json& v, std::size_t h, std::size_t k) {
  const std::string where =
      "hyperplane " + std::to_string(h) + ", coefficient " + std::to_string(k);
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Rational(Integer(std::to_string(v.get<std::uint64_t>())))
                                   : Rational(Integer(std::to_string(v.get<std::int64_t>())));
  }
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (v.is_number_float()) throw InputError(where + ": floats are not accepted, use \"p/q\"");
  throw InputError(where + ": expected an integer or a \"p/q\" string");
}

}  // namespace

ArrangementInput parse_arrangement(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("top-level JSON value must be an object");
  if (!doc.contains("affine_dim") || !doc["affine_dim"].is_number_integer()) {
    throw InputError("missing or non-integer \"affine_dim\"");
  }
  if (!doc.contains("hyperplanes") || !doc["hyperplanes"].is_array()) {
    throw InputError("missing or non-array \"hyperplanes\"");
  }
  ArrangementInput a;
  a.affine_dim = doc["affine_dim"].get<int>();
  const auto& hs = doc["hyperplanes"];
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const auto& h = hs[i];
    if (!h.is_object() || !h.contains("coeffs") || !h["coeffs"].is_array()) {
      throw InputError("hyperplane " + std::to_string(i) + ": expected {\"coeffs\": [...], \"mult\": int}");
    }
    Hyperplane out;
    for (std::size_t k = 0; k < h["coeffs"].size(); ++k) {
      out.form.push_back(parse_coefficient(h["coeffs"][k], i, k));
    }
    if (!h.contains("mult") || !h["mult"].is_number_integer()) {
      throw InputError("hyperplane " + std::to_string(i) + ": missing or non-integer \"mult\"");
    }
    out.mult = h["mult"].get<int>();
    a.hyperplanes.push_back(std::move(out));
  }
  validate(a);
  return a;
}

std::string to_json(const ArrangementInput& a) {
  json doc;
  doc["affine_dim"] = a.affine_dim;
  doc["hyperplanes"] = json::array();
  for (const auto& h : a.hyperplanes) {
    json coeffs = json::array();
    for (const auto& x : h.form) {
      if (is_integer(x) && x.get_num().fits_slong_p()) {
        coeffs.push_back(x.get_num().get_si());
      } else {
        coeffs.push_back(to_string(x));
      }
    }
    doc["hyperplanes"].push_back({{"coeffs", coeffs}, {"mult", h.mult}});
  }
  return doc.dump();
}

}  // namespace jumpcalc
