#pragma once

// Finite-precision arithmetic in the ring of integers O of a ramified
// quadratic extension K = Q2(sqrt m).
//
// Elements are stored as coordinates (a, b) of a + b*sqrt(m), each reduced
// modulo 2^64. Since 2 = pi^2 * unit, 2^64 O = pi^128 O, so the coordinates
// are exact far beyond any precision the library hands out (at most 2*bits
// pi-digits, bits <= 32). Each element also carries `precision`: the number
// of pi-adic digits that are meaningful.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quartic {

enum class FieldTag { sqrt2, sqrt_m2, sqrt10, sqrt_m10, sqrt_m1, sqrt_m5 };

struct FieldParams {
  FieldTag tag;
  std::string_view name;  // ASCII tag, e.g. "sqrt-10"
  int m;                  // radicand
  int pi_a;               // pi = pi_a + pi_b * sqrt(m)
  int pi_b;
  int norm_pi;  // a^2 - m b^2 for pi; 2 * odd
  int hensel_gamma = 7;
  int degree = 4;
  int ram_index = 2;
  int tau = 2;
  int bits = 32;  // coordinate width B; precision is capped at 2B digits

  int max_precision() const noexcept { return 2 * bits; }

  // One of Q2(sqrt 2), Q2(sqrt 10), Q2(sqrt -2), Q2(sqrt -10).
  bool theorem_field() const noexcept;

  // Copy with a different coordinate width (1..32). The copy must outlive
  // every element built from it.
  FieldParams with_bits(int b) const;

  bool same_field(const FieldParams& other) const noexcept {
    return tag == other.tag && bits == other.bits;
  }
};

const FieldParams& field(FieldTag tag);
// Accepts the ASCII tags "sqrt2", "sqrt-2", "sqrt10", "sqrt-10", "sqrt-1", "sqrt-5".
const FieldParams& field_by_name(std::string_view name);
std::span<const FieldParams> all_fields();
std::vector<FieldTag> theorem_field_tags();

constexpr int kDefaultFormPrecision = 24;

// Result of a valuation query. When `exact` is false the element is zero
// modulo pi^value and only the lower bound is known.
struct Valuation {
  int value;
  bool exact;

  bool operator==(const Valuation&) const = default;
  std::string str() const;
};

class RingElt {
 public:
  // a + b*sqrt(m) at the given precision (1 <= prec <= 2*bits).
  RingElt(const FieldParams& f, std::int64_t a, std::int64_t b, int prec);

  static RingElt from_coords(const FieldParams& f, std::uint64_t a, std::uint64_t b, int prec);
  static RingElt zero(const FieldParams& f, int prec) { return RingElt(f, 0, 0, prec); }
  static RingElt one(const FieldParams& f, int prec) { return RingElt(f, 1, 0, prec); }
  static RingElt pi(const FieldParams& f, int prec) { return RingElt(f, f.pi_a, f.pi_b, prec); }

  const FieldParams& field() const noexcept { return *field_; }
  std::uint64_t a() const noexcept { return a_; }
  std::uint64_t b() const noexcept { return b_; }
  int precision() const noexcept { return prec_; }

  // Coordinates in the basis (1, pi): x = c + d*pi.
  std::uint64_t c() const noexcept;
  std::uint64_t d() const noexcept { return b_; }

  // Same element with precision min(precision(), k).
  RingElt with_precision(int k) const;

  RingElt operator-() const;
  friend RingElt operator+(const RingElt& x, const RingElt& y);
  friend RingElt operator-(const RingElt& x, const RingElt& y);
  friend RingElt operator*(const RingElt& x, const RingElt& y);

  friend std::ostream& operator<<(std::ostream& os, const RingElt& x);

 private:
  RingElt(const FieldParams* f, std::uint64_t a, std::uint64_t b, int prec) noexcept
      : field_(f), a_(a), b_(b), prec_(prec) {}

  const FieldParams* field_;
  std::uint64_t a_;
  std::uint64_t b_;
  int prec_;
};

RingElt pow4(const RingElt& x);
Valuation valuation(const RingElt& x);
bool is_unit(const RingElt& x);

// x ≡ y (mod pi^k); k must not exceed either precision.
bool congruent(const RingElt& x, const RingElt& y, int k);

// Exact division by the uniformizer; precision drops by one.
RingElt divide_by_pi(const RingElt& x);
RingElt divide_by_pi_power(const RingElt& x, int s);
// x * pi^s, gaining s digits of precision (capped at the field maximum).
RingElt mul_pi_power(const RingElt& x, int s);

// c_0 ... c_{n-1} with x ≡ sum c_i pi^i (mod pi^n), least significant first.
std::vector<int> digits(const RingElt& x, int n);
std::string digit_string(const RingElt& x, int n);

struct PiTerm {
  int exponent;
  std::int64_t coefficient;
};

RingElt from_pi_poly(const FieldParams& f, std::span<const PiTerm> terms, int prec);
// Inverse of digit_string: "0010100" -> pi^2 + pi^4.
RingElt from_digit_string(const FieldParams& f, std::string_view digits, int prec);

// Additive encoding of the finite ring O/pi^N as N-bit integers.
//
// With x = c + d*pi, x ≡ 0 (mod pi^N) iff 2^ceil(N/2) | c and 2^floor(N/2) | d,
// so packing c mod 2^ceil(N/2) below d mod 2^floor(N/2) is a bijection onto
// [0, 2^N) under which ring addition becomes two masked integer additions.
class ResidueCodec {
 public:
  ResidueCodec(const FieldParams& f, int modulus);

  const FieldParams& field() const noexcept { return *field_; }
  int modulus() const noexcept { return modulus_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << modulus_; }

  std::uint64_t encode(const RingElt& x) const;
  RingElt decode(std::uint64_t code, int prec) const;

  std::uint64_t add(std::uint64_t x, std::uint64_t y) const noexcept {
    return (((x & c_mask_) + (y & c_mask_)) & c_mask_) |
           ((((x >> c_bits_) + (y >> c_bits_)) & d_mask_) << c_bits_);
  }
  std::uint64_t neg(std::uint64_t x) const noexcept {
    return ((0 - (x & c_mask_)) & c_mask_) | (((0 - (x >> c_bits_)) & d_mask_) << c_bits_);
  }
  std::uint64_t sub(std::uint64_t x, std::uint64_t y) const noexcept { return add(x, neg(y)); }

  // pi-adic valuation of the residue; `modulus()` for the zero residue.
  int valuation(std::uint64_t code) const noexcept;
  std::string digit_string(std::uint64_t code) const;

 private:
  const FieldParams* field_;
  int modulus_;
  int c_bits_;
  std::uint64_t c_mask_;
  std::uint64_t d_mask_;
};

}  // namespace quartic
