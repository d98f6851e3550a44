#include "quartic/qring.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "quartic/errors.hpp"

namespace quartic {

namespace {

// Uniformizers and radicands, in the order the fields are usually tabulated.
constexpr std::array<FieldParams, 6> kFields{{
    {FieldTag::sqrt2, "sqrt2", 2, 0, 1, -2},
    {FieldTag::sqrt_m2, "sqrt-2", -2, 0, 1, 2},
    {FieldTag::sqrt10, "sqrt10", 10, 0, 1, -10},
    {FieldTag::sqrt_m10, "sqrt-10", -10, 0, 1, 10},
    {FieldTag::sqrt_m1, "sqrt-1", -1, 1, 1, 2},
    {FieldTag::sqrt_m5, "sqrt-5", -5, 1, 1, 6},
}};

constexpr std::uint64_t as_word(std::int64_t v) noexcept { return static_cast<std::uint64_t>(v); }

// Inverse of an odd integer modulo 2^64 (Newton iteration, 6 doublings of
// the number of correct bits starting from 3).
std::uint64_t inverse_odd(std::uint64_t n) noexcept {
  std::uint64_t x = n;
  for (int i = 0; i < 6; ++i) x *= 2 - n * x;
  return x;
}

int ctz_or_64(std::uint64_t v) noexcept { return v == 0 ? 64 : std::countr_zero(v); }

// Valuation of the element with the given (1, pi)-coordinates, ignoring precision.
int raw_valuation(std::uint64_t c, std::uint64_t d) noexcept {
  return std::min(2 * ctz_or_64(c), 2 * ctz_or_64(d) + 1);
}

void check_precision(const FieldParams& f, int prec) {
  if (prec < 1 || prec > f.max_precision()) {
    throw PrecisionError("precision " + std::to_string(prec) + " outside [1, " +
                         std::to_string(f.max_precision()) + "] for field " + std::string(f.name));
  }
}

void check_same_field(const RingElt& x, const RingElt& y) {
  if (!x.field().same_field(y.field())) {
    throw FieldMismatch("operands belong to " + std::string(x.field().name) + " and " +
                        std::string(y.field().name));
  }
}

}  // namespace

bool FieldParams::theorem_field() const noexcept {
  return tag == FieldTag::sqrt2 || tag == FieldTag::sqrt_m2 || tag == FieldTag::sqrt10 ||
         tag == FieldTag::sqrt_m10;
}

FieldParams FieldParams::with_bits(int b) const {
  if (b < 1 || b > 32) throw std::invalid_argument("coordinate width must be in [1, 32]");
  FieldParams copy = *this;
  copy.bits = b;
  return copy;
}

const FieldParams& field(FieldTag tag) {
  for (const auto& f : kFields) {
    if (f.tag == tag) return f;
  }
  throw std::invalid_argument("unknown field tag");
}

const FieldParams& field_by_name(std::string_view name) {
  for (const auto& f : kFields) {
    if (f.name == name) return f;
  }
  throw std::invalid_argument("unknown field '" + std::string(name) +
                              "' (expected sqrt2, sqrt-2, sqrt10, sqrt-10, sqrt-1 or sqrt-5)");
}

std::span<const FieldParams> all_fields() { return kFields; }

std::vector<FieldTag> theorem_field_tags() {
  return {FieldTag::sqrt2, FieldTag::sqrt10, FieldTag::sqrt_m2, FieldTag::sqrt_m10};
}

std::string Valuation::str() const {
  return exact ? std::to_string(value) : ">=" + std::to_string(value);
}

RingElt::RingElt(const FieldParams& f, std::int64_t a, std::int64_t b, int prec)
    : field_(&f), a_(as_word(a)), b_(as_word(b)), prec_(prec) {
  check_precision(f, prec);
}

RingElt RingElt::from_coords(const FieldParams& f, std::uint64_t a, std::uint64_t b, int prec) {
  check_precision(f, prec);
  return RingElt(&f, a, b, prec);
}

std::uint64_t RingElt::c() const noexcept { return a_ - b_ * as_word(field_->pi_a); }

RingElt RingElt::with_precision(int k) const {
  check_precision(*field_, k);
  return RingElt(field_, a_, b_, std::min(prec_, k));
}

RingElt RingElt::operator-() const { return RingElt(field_, 0 - a_, 0 - b_, prec_); }

RingElt operator+(const RingElt& x, const RingElt& y) {
  check_same_field(x, y);
  return RingElt(x.field_, x.a_ + y.a_, x.b_ + y.b_, std::min(x.prec_, y.prec_));
}

RingElt operator-(const RingElt& x, const RingElt& y) {
  check_same_field(x, y);
  return RingElt(x.field_, x.a_ - y.a_, x.b_ - y.b_, std::min(x.prec_, y.prec_));
}

RingElt operator*(const RingElt& x, const RingElt& y) {
  check_same_field(x, y);
  const std::uint64_t m = as_word(x.field_->m);
  return RingElt(x.field_, x.a_ * y.a_ + m * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_,
                 std::min(x.prec_, y.prec_));
}

std::ostream& operator<<(std::ostream& os, const RingElt& x) {
  return os << static_cast<std::int64_t>(x.a_) << " + " << static_cast<std::int64_t>(x.b_)
            << "*sqrt(" << x.field_->m << ") [mod pi^" << x.prec_ << "]";
}

RingElt pow4(const RingElt& x) {
  const RingElt sq = x * x;
  return sq * sq;
}

Valuation valuation(const RingElt& x) {
  const int v = raw_valuation(x.c(), x.d());
  if (v >= x.precision()) return {x.precision(), false};
  return {v, true};
}

bool is_unit(const RingElt& x) { return (x.c() & 1) != 0; }

bool congruent(const RingElt& x, const RingElt& y, int k) {
  check_same_field(x, y);
  if (k > x.precision() || k > y.precision()) {
    throw PrecisionError("cannot compare modulo pi^" + std::to_string(k) + " at precisions " +
                         std::to_string(x.precision()) + ", " + std::to_string(y.precision()));
  }
  const RingElt diff = x - y;
  return raw_valuation(diff.c(), diff.d()) >= k;
}

RingElt divide_by_pi(const RingElt& x) {
  const FieldParams& f = x.field();
  if (is_unit(x)) throw NotDivisible("element is a unit; not divisible by pi");
  if (x.precision() <= 1) throw PrecisionExhausted("dividing by pi would leave no valid digits");

  // The discarded low bit of each halved coordinate leaves an unknown top
  // bit, which sits at pi-valuation >= 126: far above any usable precision.
  if (f.pi_a == 0) {
    // (a + b sqrt m) / sqrt m = b + (a/m) sqrt m, with m = 2 * odd.
    const std::uint64_t inv = inverse_odd(as_word(f.m / 2));
    return RingElt::from_coords(f, x.b(), (x.a() >> 1) * inv, x.precision() - 1);
  }
  // Multiply by the conjugate of pi, then divide by N(pi) = 2 * odd.
  const std::uint64_t m = as_word(f.m);
  const std::uint64_t p = x.a() - m * x.b();
  const std::uint64_t q = x.b() - x.a();
  const std::uint64_t inv = inverse_odd(as_word(f.norm_pi / 2));
  return RingElt::from_coords(f, (p >> 1) * inv, (q >> 1) * inv, x.precision() - 1);
}

RingElt divide_by_pi_power(const RingElt& x, int s) {
  RingElt r = x;
  for (int i = 0; i < s; ++i) r = divide_by_pi(r);
  return r;
}

RingElt mul_pi_power(const RingElt& x, int s) {
  if (s < 0) throw std::invalid_argument("negative power of pi");
  const FieldParams& f = x.field();
  RingElt r = RingElt::from_coords(f, x.a(), x.b(), f.max_precision());
  const RingElt p = RingElt::pi(f, f.max_precision());
  for (int i = 0; i < s; ++i) r = r * p;
  return r.with_precision(std::min(f.max_precision(), x.precision() + s));
}

std::vector<int> digits(const RingElt& x, int n) {
  if (n < 0 || n > x.precision()) {
    throw PrecisionError("requested " + std::to_string(n) + " digits of an element known to " +
                         std::to_string(x.precision()));
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  RingElt r = x;
  for (int i = 0; i < n; ++i) {
    const int bit = is_unit(r) ? 1 : 0;
    out.push_back(bit);
    if (i + 1 == n) break;
    if (bit) r = r - RingElt::one(r.field(), r.precision());
    r = divide_by_pi(r);
  }
  return out;
}

std::string digit_string(const RingElt& x, int n) {
  std::string s;
  for (int bit : digits(x, n)) s.push_back(bit ? '1' : '0');
  return s;
}

RingElt from_pi_poly(const FieldParams& f, std::span<const PiTerm> terms, int prec) {
  check_precision(f, prec);
  const int top = f.max_precision();
  RingElt sum = RingElt::zero(f, top);
  for (const PiTerm& t : terms) {
    if (t.exponent < 0) throw std::invalid_argument("negative exponent in pi-polynomial");
    sum = sum + mul_pi_power(RingElt(f, t.coefficient, 0, top), t.exponent);
  }
  return sum.with_precision(prec);
}

RingElt from_digit_string(const FieldParams& f, std::string_view digit_chars, int prec) {
  std::vector<PiTerm> terms;
  for (std::size_t i = 0; i < digit_chars.size(); ++i) {
    if (digit_chars[i] == '1') {
      terms.push_back({static_cast<int>(i), 1});
    } else if (digit_chars[i] != '0') {
      throw ParseError("digit strings contain only 0 and 1", i);
    }
  }
  return from_pi_poly(f, terms, prec);
}

ResidueCodec::ResidueCodec(const FieldParams& f, int modulus)
    : field_(&f), modulus_(modulus), c_bits_((modulus + 1) / 2) {
  if (modulus < 1 || modulus > 62) throw std::invalid_argument("residue modulus must be in [1, 62]");
  c_mask_ = (std::uint64_t{1} << c_bits_) - 1;
  d_mask_ = (std::uint64_t{1} << (modulus / 2)) - 1;
}

std::uint64_t ResidueCodec::encode(const RingElt& x) const {
  if (!x.field().same_field(*field_)) throw FieldMismatch("residue codec used with another field");
  if (x.precision() < modulus_) {
    throw PrecisionError("element known to " + std::to_string(x.precision()) +
                         " digits cannot be reduced modulo pi^" + std::to_string(modulus_));
  }
  return (x.c() & c_mask_) | ((x.d() & d_mask_) << c_bits_);
}

RingElt ResidueCodec::decode(std::uint64_t code, int prec) const {
  const std::uint64_t c = code & c_mask_;
  const std::uint64_t d = (code >> c_bits_) & d_mask_;
  return RingElt::from_coords(*field_, c + d * as_word(field_->pi_a), d, prec);
}

int ResidueCodec::valuation(std::uint64_t code) const noexcept {
  const std::uint64_t c = code & c_mask_;
  const std::uint64_t d = (code >> c_bits_) & d_mask_;
  return std::min(raw_valuation(c, d), modulus_);
}

std::string ResidueCodec::digit_string(std::uint64_t code) const {
  return quartic::digit_string(decode(code, modulus_), modulus_);
}

}  // namespace quartic
