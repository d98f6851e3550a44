#pragma once

#include <string>

#include <json.hpp>

#include "quartic/aniso.hpp"
#include "quartic/forms.hpp"
#include "quartic/solver.hpp"

namespace quartic {

// Digit strings are least significant first; coefficients at the form's
// precision, assignment entries and residual at the check modulus.
nlohmann::json witness_to_json(const AdditiveForm& form, const Witness& w);

struct Certificate {
  AdditiveForm form;
  Witness witness;
};

// Throws ParseError / Error subclasses on malformed input.
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json zero_search_to_json(const AdditiveForm& form, int modulus, const ZeroSearch& z);

}  // namespace quartic
