#include "quartic/forms.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "quartic/errors.hpp"

namespace quartic {

const char* const kFormGrammar =
    "form  := coeff (',' coeff)*\n"
    "coeff := term ('+' term)*\n"
    "term  := int | int '*' pexp | pexp\n"
    "pexp  := 'p' ['^' uint]\n"
    "int   := ['-'] uint\n"
    "(whitespace ignored; 'p' is the uniformizer of the chosen field)\n";

AdditiveForm::AdditiveForm(const FieldParams& f, std::vector<RingElt> coeffs)
    : field_(&f), coeffs_(std::move(coeffs)) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].field().same_field(f)) {
      throw FieldMismatch("coefficient " + std::to_string(i) + " belongs to another field");
    }
    if (!valuation(coeffs_[i]).exact) {
      throw ZeroCoefficient("coefficient " + std::to_string(i) + " is zero modulo pi^" +
                            std::to_string(coeffs_[i].precision()));
    }
  }
}

int AdditiveForm::precision() const noexcept {
  int p = field_->max_precision();
  for (const auto& c : coeffs_) p = std::min(p, c.precision());
  return p;
}

namespace {

// Recursive-descent parser over the input with whitespace skipped in place,
// so reported positions index the original text.
class FormParser {
 public:
  FormParser(std::string_view text, const FieldParams& f, int prec)
      : text_(text), field_(f), prec_(prec) {}

  std::vector<RingElt> parse_form() {
    std::vector<RingElt> coeffs;
    coeffs.push_back(coefficient(coeffs.size()));
    while (accept(',')) coeffs.push_back(coefficient(coeffs.size()));
    expect_end();
    return coeffs;
  }

  RingElt parse_single() {
    RingElt c = coefficient(0);
    expect_end();
    return c;
  }

 private:
  RingElt coefficient(std::size_t index) {
    const std::size_t start = position();
    std::vector<PiTerm> terms;
    terms.push_back(term());
    while (accept('+')) terms.push_back(term());
    RingElt value = from_pi_poly(field_, terms, prec_);
    if (!valuation(value).exact) {
      throw ZeroCoefficient("coefficient " + std::to_string(index) + " (at position " +
                            std::to_string(start) + ") is zero modulo pi^" +
                            std::to_string(prec_));
    }
    return value;
  }

  PiTerm term() {
    if (peek() == 'p') return {pexp(), 1};
    const std::int64_t c = integer();
    if (accept('*')) return {pexp(), c};
    return {0, c};
  }

  int pexp() {
    if (!accept('p')) fail("expected 'p'");
    if (!accept('^')) return 1;
    const std::int64_t e = unsigned_integer();
    if (e > 4096) fail("exponent too large");
    return static_cast<int>(e);
  }

  std::int64_t integer() {
    const bool negative = accept('-');
    const std::int64_t v = unsigned_integer();
    return negative ? -v : v;
  }

  std::int64_t unsigned_integer() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected an integer");
    }
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int digit = text_[pos_] - '0';
      if (v > (std::numeric_limits<std::int64_t>::max() - digit) / 10) fail("integer overflow");
      v = v * 10 + digit;
      ++pos_;
    }
    return v;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char ch) {
    if (peek() != ch || ch == '\0') return false;
    ++pos_;
    return true;
  }

  void expect_end() {
    if (peek() != '\0') fail(std::string("unexpected '") + text_[pos_] + "'");
  }

  std::size_t position() {
    skip_space();
    return pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

  std::string_view text_;
  const FieldParams& field_;
  int prec_;
  std::size_t pos_ = 0;
};

}  // namespace

AdditiveForm parse_form(std::string_view text, const FieldParams& f, int prec) {
  return AdditiveForm(f, FormParser(text, f, prec).parse_form());
}

RingElt parse_coefficient(std::string_view text, const FieldParams& f, int prec) {
  return FormParser(text, f, prec).parse_single();
}

bool FormType::covers(const FormType& pattern) const noexcept {
  for (std::size_t i = 0; i < 4; ++i) {
    if (counts[i] < pattern.counts[i]) return false;
  }
  return true;
}

FormType FormType::rotated(int shift) const noexcept {
  FormType t;
  for (int i = 0; i < 4; ++i) t.counts[static_cast<std::size_t>((i + shift) % 4)] = counts[static_cast<std::size_t>(i)];
  return t;
}

std::string FormType::str() const {
  std::ostringstream os;
  os << '(' << counts[0] << ',' << counts[1] << ',' << counts[2] << ',' << counts[3] << ')';
  return os.str();
}

std::vector<int> levels(const AdditiveForm& form) {
  std::vector<int> out;
  out.reserve(form.size());
  for (const auto& c : form.coeffs()) out.push_back(valuation(c).value);
  return out;
}

FormType type_of(const AdditiveForm& form) {
  FormType t;
  for (int level : levels(form)) ++t.counts[static_cast<std::size_t>(level % 4)];
  return t;
}

bool is_normalized(const FormType& t) noexcept {
  const int s = t.total();
  const int p0 = t.counts[0];
  const int p1 = p0 + t.counts[1];
  const int p2 = p1 + t.counts[2];
  return 4 * p0 >= s && 4 * p1 >= 2 * s && 4 * p2 >= 3 * s;
}

LevelScaling rescale(const AdditiveForm& form, int shift) {
  if (shift < 0 || shift > 3) throw std::invalid_argument("shift must be in 0..3");
  std::vector<RingElt> coeffs;
  std::vector<int> quotients;
  const auto lv = levels(form);
  for (std::size_t i = 0; i < form.size(); ++i) {
    const int q = (lv[i] + shift) / 4;
    coeffs.push_back(divide_by_pi_power(mul_pi_power(form[i], shift), 4 * q));
    quotients.push_back(q);
  }
  return {AdditiveForm(form.field(), std::move(coeffs)), shift, std::move(quotients)};
}

LevelScaling normalize(const AdditiveForm& form) {
  const FormType t = type_of(form);
  for (int shift = 0; shift < 4; ++shift) {
    if (is_normalized(t.rotated(shift))) return rescale(form, shift);
  }
  // Unreachable: some cyclic shift always satisfies the inequalities.
  throw std::logic_error("no normalizing shift for type " + t.str());
}

MappedZero map_back(const LevelScaling& scaling, std::span<const RingElt> y, int modulus) {
  const std::size_t n = scaling.quotients.size();
  if (y.size() != n) throw LengthMismatch("assignment length does not match the form");
  const int q_max = *std::max_element(scaling.quotients.begin(), scaling.quotients.end());

  // Valuation of pi^(Q - q_i) y_i for every nonzero entry.
  std::vector<int> shifted(n, -1);
  int t = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < n; ++i) {
    const Valuation v = valuation(y[i]);
    if (!v.exact) continue;
    shifted[i] = q_max - scaling.quotients[i] + v.value;
    t = std::min(t, shifted[i]);
  }
  if (t == std::numeric_limits<int>::max()) throw std::invalid_argument("assignment is trivial");

  // F(x) = pi^(4Q - 4t - shift) G(y) holds exactly on representatives, so the
  // entries are labelled with the new modulus.
  const FieldParams& f = scaling.form.field();
  const int out_modulus = std::min(modulus + 4 * q_max - scaling.shift - 4 * t, f.max_precision());
  const int label = std::max(1, out_modulus);
  std::vector<RingElt> x;
  x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (shifted[i] < 0) {
      x.push_back(RingElt::zero(f, label));
      continue;
    }
    const int e = q_max - scaling.quotients[i] - t;
    const RingElt xi = e >= 0 ? mul_pi_power(y[i], e) : divide_by_pi_power(y[i], -e);
    x.push_back(RingElt::from_coords(f, xi.a(), xi.b(), label));
  }
  return {std::move(x), out_modulus};
}

RingElt evaluate(const AdditiveForm& form, std::span<const RingElt> assignment, int k) {
  if (assignment.size() != form.size()) {
    throw LengthMismatch("assignment has " + std::to_string(assignment.size()) +
                         " entries for a form in " + std::to_string(form.size()) + " variables");
  }
  RingElt sum = RingElt::zero(form.field(), k);
  for (std::size_t i = 0; i < form.size(); ++i) {
    if (form[i].precision() < k || assignment[i].precision() < k) {
      throw PrecisionError("evaluation modulo pi^" + std::to_string(k) +
                           " needs every coefficient and value to that precision (entry " +
                           std::to_string(i) + ")");
    }
    sum = sum + form[i] * pow4(assignment[i]);
  }
  return sum.with_precision(k);
}

}  // namespace quartic
