#pragma once

// Constructive zero-finding for additive quartic forms.
//
// A zero is found in two stages. First an exhaustive dynamic program over the
// finite ring O/pi^N decides which residues sum_i a_i x_i^4 can take and
// recovers an assignment with F ≡ 0 (mod pi^(7+v)) in which some variable
// x_j at coefficient level v is a unit. Dividing the congruence for x_j by
// pi^v leaves a unit congruence modulo pi^7, the threshold of the lifting
// lemma for d = 4, e = 2; x_j is then lifted digit by digit.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quartic/forms.hpp"
#include "quartic/kernels.hpp"
#include "quartic/qring.hpp"

namespace quartic {

enum class TermCategory { zero, scaled, unit };

// One admissible value of a_i x_i^4 modulo pi^N with a representative x_i.
struct TermChoice {
  std::size_t variable = 0;
  TermCategory category = TermCategory::zero;
  int scale = 0;  // x = pi^scale * unit for the scaled category
  RingElt representative;
  RingElt term_value;      // a_i x^4 mod pi^N
  std::uint64_t code = 0;  // ResidueCodec(field, N) code of term_value
};

// {0} ∪ {a pi^{4j} w : 4j + v(a) < N, w a unit fourth power}, each with a
// representative. Ordered: zero, units, then scaled entries by increasing j.
std::vector<TermChoice> term_menu(const RingElt& coeff, int modulus, std::size_t variable = 0);

// Reachability of residues modulo pi^N by sums of term choices, with a flag
// recording whether some qualifying variable took a unit value. Among all
// ways to reach a state the table keeps the one with the fewest nonzero
// variables, then the smallest menu index at each variable from the last.
class ReachTable {
 public:
  int modulus() const noexcept { return codec_.modulus(); }
  std::size_t variables() const noexcept { return menus_.size(); }
  const ResidueCodec& codec() const noexcept { return codec_; }
  const std::vector<TermChoice>& menu(std::size_t i) const { return menus_.at(i); }

  bool reachable(std::uint64_t code, bool unit_flag) const;
  bool reachable(const RingElt& residue, bool unit_flag) const;
  // Fewest nonzero variables reaching the state, if reachable.
  std::optional<int> min_nonzero(std::uint64_t code, bool unit_flag) const;
  // One choice per variable summing to the state. Throws NotFound if unreachable.
  std::vector<TermChoice> reconstruct(std::uint64_t code, bool unit_flag) const;
  // Codes reachable with exactly this flag, ascending.
  std::vector<std::uint64_t> reachable_codes(bool unit_flag) const;

  // Raw final-layer arrays (state = 2 * code + flag); exposed for kernel tests.
  std::span<const std::uint8_t> final_costs() const { return cost_.back(); }

 private:
  friend ReachTable dp_reach(const AdditiveForm&, int, std::span<const std::uint8_t>, Backend);
  explicit ReachTable(ResidueCodec codec) : codec_(codec) {}

  ResidueCodec codec_;
  std::vector<std::vector<TermChoice>> menus_;
  std::vector<std::vector<std::uint8_t>> cost_;       // layers 0..n
  std::vector<std::vector<std::uint8_t>> choice_;     // layers 1..n
  std::vector<std::vector<std::uint8_t>> prev_flag_;  // layers 1..n
};

constexpr int kMaxTableModulus = 12;

// `qualifying[i]` says whether a unit value of x_i sets the flag (all
// variables when empty). N <= 12.
ReachTable dp_reach(const AdditiveForm& form, int modulus,
                    std::span<const std::uint8_t> qualifying = {},
                    Backend backend = Backend::parallel);

// Assignment with F ≡ 0 (mod pi^(7+level)) and a unit at `lifted_index`,
// whose coefficient has valuation `level`.
struct RawWitness {
  std::vector<RingElt> assignment;
  std::size_t lifted_index = 0;
  int modulus = 0;
  int level = 0;
};

// Coefficient levels must lie in 0..3. nullopt when no liftable assignment
// exists; for such forms this means the form has no nontrivial zero.
std::optional<RawWitness> find_liftable(const AdditiveForm& form,
                                        Backend backend = Backend::parallel);

// Solves c t^4 ≡ b (mod pi^M) from c a^4 ≡ b (mod pi^nu), nu >= 7, keeping
// t ≡ a (mod pi^(nu-4)). Each step nu -> nu+1 tries the 16 perturbations of
// digits nu-4 .. nu-1, smallest first.
RingElt hensel_lift(const RingElt& c, const RingElt& b, const RingElt& a, int nu, int target);
// Same, returning the intermediate solution for every modulus nu .. target.
std::vector<RingElt> hensel_lift_trace(const RingElt& c, const RingElt& b, const RingElt& a,
                                       int nu, int target);

struct Witness {
  std::vector<RingElt> assignment;
  std::size_t lifted_index = 0;
  int check_modulus = 0;
  RingElt residual;
};

// Throws NoZeroFound when no liftable assignment exists.
Witness solve(const AdditiveForm& form, int modulus = kDefaultFormPrecision,
              Backend backend = Backend::parallel);

struct VerifyReport {
  bool length_ok = false;
  bool zero_ok = false;       // F(assignment) ≡ 0 mod pi^M
  bool primitive_ok = false;  // some entry is a unit
  bool lifted_is_unit = false;
  std::string residual_digits;
  std::string message;

  bool passed() const noexcept { return length_ok && zero_ok && primitive_ok; }
};

// Recomputes everything from the form and the assignment alone.
VerifyReport verify(const AdditiveForm& form, const Witness& witness);

}  // namespace quartic
