#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quartic/qring.hpp"

namespace quartic {

// Diagonal quartic form a_1 x_1^4 + ... + a_s x_s^4 with coefficients in O.
// Coefficients are kept exactly as given; no level reduction happens
// implicitly.
class AdditiveForm {
 public:
  // Throws ZeroCoefficient if some coefficient vanishes at its precision.
  AdditiveForm(const FieldParams& f, std::vector<RingElt> coeffs);

  const FieldParams& field() const noexcept { return *field_; }
  const std::vector<RingElt>& coeffs() const noexcept { return coeffs_; }
  const RingElt& operator[](std::size_t i) const { return coeffs_.at(i); }
  std::size_t size() const noexcept { return coeffs_.size(); }

  // Smallest coefficient precision.
  int precision() const noexcept;

 private:
  const FieldParams* field_;
  std::vector<RingElt> coeffs_;
};

// Grammar (whitespace ignored, 'p' is the uniformizer):
//   form  := coeff (',' coeff)*
//   coeff := term ('+' term)*
//   term  := int | int '*' pexp | pexp
//   pexp  := 'p' ['^' uint]
//   int   := ['-'] uint
AdditiveForm parse_form(std::string_view text, const FieldParams& f,
                        int prec = kDefaultFormPrecision);
RingElt parse_coefficient(std::string_view text, const FieldParams& f,
                          int prec = kDefaultFormPrecision);

extern const char* const kFormGrammar;

// Counts of variables per level modulo 4.
struct FormType {
  std::array<int, 4> counts{};

  bool operator==(const FormType&) const = default;
  int total() const noexcept { return counts[0] + counts[1] + counts[2] + counts[3]; }
  // Componentwise >=: this form has at least `pattern.counts[i]` variables at level i.
  bool covers(const FormType& pattern) const noexcept;
  // Type after multiplying the form by pi^shift.
  FormType rotated(int shift) const noexcept;
  std::string str() const;
};

std::vector<int> levels(const AdditiveForm& form);
FormType type_of(const AdditiveForm& form);

// True when s_0 >= s/4, s_0+s_1 >= 2s/4 and s_0+s_1+s_2 >= 3s/4.
bool is_normalized(const FormType& t) noexcept;

// The form pi^shift * F with each variable's level moved into 0..3:
// coefficient i becomes a_i * pi^(shift - 4 q_i), i.e. x_i = pi^(-q_i) y_i.
struct LevelScaling {
  AdditiveForm form;
  int shift;
  std::vector<int> quotients;
};

LevelScaling rescale(const AdditiveForm& form, int shift);

// Smallest shift in 0..3 whose rescaled form is normalized.
LevelScaling normalize(const AdditiveForm& form);

// Zero of the rescaled form -> zero of the original. Returns the primitive
// assignment x_i = pi^(Q - q_i - t) y_i (Q = max q_i, t chosen so some entry
// is a unit) and the modulus to which the original form vanishes.
struct MappedZero {
  std::vector<RingElt> assignment;
  int modulus;
};

MappedZero map_back(const LevelScaling& scaling, std::span<const RingElt> zero_of_scaled,
                    int modulus);

// sum a_i x_i^4 reduced modulo pi^k.
RingElt evaluate(const AdditiveForm& form, std::span<const RingElt> assignment, int k);

}  // namespace quartic
