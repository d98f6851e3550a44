#include "quartic/certificate.hpp"

#include <algorithm>

#include "quartic/errors.hpp"

namespace quartic {

namespace {

nlohmann::json digit_list(std::span<const RingElt> xs, int n) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : xs) out.push_back(digit_string(x, n));
  return out;
}

// enough digits to pin each coefficient down modulo pi^m, and never zero
nlohmann::json coefficient_list(const AdditiveForm& form, int m) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& a : form.coeffs()) {
    const int n = std::min(a.precision(), std::max(m, valuation(a).value + 1));
    out.push_back(digit_string(a, n));
  }
  return out;
}

}  // namespace

nlohmann::json witness_to_json(const AdditiveForm& form, const Witness& w) {
  return {
      {"field", form.field().name},
      {"check_modulus", w.check_modulus},
      {"coefficients", coefficient_list(form, w.check_modulus)},
      {"assignment", digit_list(w.assignment, w.check_modulus)},
      {"lifted_index", w.lifted_index},
      {"residual", digit_string(w.residual, w.check_modulus)},
  };
}

Certificate certificate_from_json(const nlohmann::json& j) {
  try {
    const FieldParams& f = field_by_name(j.at("field").get<std::string>());
    const int m = j.at("check_modulus").get<int>();
    std::vector<RingElt> coeffs;
    for (const auto& s : j.at("coefficients")) {
      const auto text = s.get<std::string>();
      coeffs.push_back(from_digit_string(f, text, static_cast<int>(text.size())));
    }
    std::vector<RingElt> xs;
    for (const auto& s : j.at("assignment")) xs.push_back(from_digit_string(f, s.get<std::string>(), m));
    const auto residual = from_digit_string(f, j.at("residual").get<std::string>(), m);
    return {AdditiveForm(f, std::move(coeffs)),
            Witness{std::move(xs), j.at("lifted_index").get<std::size_t>(), m, residual}};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad certificate: ") + e.what(), 0);
  }
}

nlohmann::json zero_search_to_json(const AdditiveForm& form, int modulus, const ZeroSearch& z) {
  nlohmann::json j = {
      {"field", form.field().name},
      {"modulus", modulus},
      {"coefficients", digit_list(form.coeffs(), std::min(form.precision(), modulus))},
      {"has_primitive_zero", z.has_zero},
  };
  if (z.has_zero) j["witness"] = digit_list(z.witness, modulus);
  return j;
}

}  // namespace quartic
