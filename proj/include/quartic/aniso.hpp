#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quartic/forms.hpp"
#include "quartic/kernels.hpp"
#include "quartic/qring.hpp"

namespace quartic {

struct ZeroSearch {
  bool has_zero = false;
  std::vector<RingElt> witness;  // assignment mod pi^k with a unit entry, when has_zero
};

// Exhaustive decision: is there x mod pi^k with some unit x_i and F(x) ≡ 0 (mod pi^k)?
// k <= 12.
ZeroSearch has_primitive_zero_mod(const AdditiveForm& form, int k,
                                  Backend backend = Backend::parallel);

// pi-adic valuations (< k) of the values F(x) mod pi^k. With `primitive_only`
// x ranges over assignments with a unit entry, otherwise over all x.
std::set<int> representable_valuations(const AdditiveForm& form, int k, bool primitive_only = true,
                                       Backend backend = Backend::parallel);

// Known anisotropic forms: G + pi H over sqrt2/sqrt10, G + (pi + pi^2) H over
// sqrt-2/sqrt-10 (checked mod pi^8), and the sqrt-1 / sqrt-5 lower-bound forms
// (checked mod pi^7).
struct AnisoFixture {
  FieldTag field;
  std::string form_text;
  int modulus;
  int variables;
};

AnisoFixture aniso_fixture(FieldTag tag);

struct FixtureReport {
  AnisoFixture fixture;
  bool has_zero = false;
  bool pass = false;  // no primitive zero found
  std::optional<int> certifying_modulus;  // least k <= 12 with no primitive zero mod pi^k
  double seconds = 0.0;
};

FixtureReport verify_paper_forms(const FieldParams& f, Backend backend = Backend::parallel);

}  // namespace quartic
