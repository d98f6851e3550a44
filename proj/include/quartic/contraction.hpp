#pragma once

// Contractions: substituting x_1 = b_1 y, x_2 = b_2 y merges two variables of
// the same level into one variable y at a higher level. Every resulting
// variable remembers how it was built, so the chain can be replayed against
// the original coefficients or turned into an assignment.

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "quartic/errors.hpp"
#include "quartic/qring.hpp"

namespace quartic {

class TrackedVariable;

struct Substitution {
  std::shared_ptr<const TrackedVariable> variable;
  RingElt value;
};

class TrackedVariable {
 public:
  // Variable `index` of the original form.
  static TrackedVariable original(std::size_t index, const RingElt& coeff);

  const RingElt& coeff() const noexcept { return coeff_; }
  int level() const noexcept { return level_; }
  const std::set<int>& free_levels() const noexcept { return free_levels_; }
  bool is_free_at(int level) const { return free_levels_.contains(level); }

  bool is_original() const noexcept { return source_.has_value(); }
  std::optional<std::size_t> source_index() const noexcept { return source_; }
  const std::vector<Substitution>& children() const noexcept { return children_; }
  // Level of the children merged by this node; nullopt for originals and scalings.
  std::optional<int> contraction_level() const noexcept { return contraction_level_; }

  // Originals are only treated as free when a caller says so. The flag
  // records level() + 5, toggled through the parent's substitution value.
  TrackedVariable marked_free() const;

  // General node y with x_child = value * y for every part. The coefficient
  // is sum coeff_child * value^4; a contraction level k adds free level k+5.
  // Throws DegenerateContraction when the coefficient vanishes.
  static TrackedVariable combine(std::vector<Substitution> parts,
                                 std::optional<int> contraction_level);

 private:
  RingElt coeff_;
  int level_ = 0;
  std::set<int> free_levels_;
  std::optional<std::size_t> source_;
  std::vector<Substitution> children_;
  std::optional<int> contraction_level_;

  explicit TrackedVariable(RingElt coeff) : coeff_(std::move(coeff)) {}
};

// The combined coefficient vanished at working precision: the substitutions
// already give a zero of the form. Carries them so the caller can build it.
class DegenerateContraction : public Error {
 public:
  explicit DegenerateContraction(std::vector<Substitution> parts)
      : Error("contraction coefficient vanishes at working precision"), parts_(std::move(parts)) {}
  const std::vector<Substitution>& parts() const noexcept { return parts_; }

 private:
  std::vector<Substitution> parts_;
};

enum class PairCase { OneUp, TwoUp, ThreePlusUp };

// Units compared on their pi- and pi^2-digits.
PairCase classify_pair(const RingElt& u1, const RingElt& u2);

TrackedVariable contract_pair(const TrackedVariable& v1, const TrackedVariable& v2,
                              const RingElt& b1, const RingElt& b2);
TrackedVariable contract_pair(const TrackedVariable& v1, const TrackedVariable& v2);

// Two disjoint pairs of indices into the four variables.
using Pairing = std::array<std::array<int, 2>, 2>;

TrackedVariable contract_four(const std::array<TrackedVariable, 4>& vs,
                              const Pairing& pairing = {{{0, 1}, {2, 3}}});

// x = pi^j y: same variable treated 4j levels higher.
TrackedVariable scale_up(const TrackedVariable& v, int j);

// Multiplies one substitution value by alpha (alpha^4 ≡ 1 + pi^5 mod pi^6),
// flipping the coefficient digit at `target_level` and no lower digit.
TrackedVariable toggle_pi5(const TrackedVariable& v, int target_level);

// Repeated contraction from two anchors at level k, using rungs (one variable
// per intermediate level, each used at most once) and free levels, until the
// variable reaches level >= k + t. With `stop_at`, the result lands exactly
// on that level instead (it must be free once it is overshot).
TrackedVariable slide(const TrackedVariable& anchor1, const TrackedVariable& anchor2,
                      std::span<const TrackedVariable> rungs, int t,
                      std::optional<int> stop_at = std::nullopt);

// Recomputes the coefficient bottom-up from the original coefficients.
RingElt replay(const TrackedVariable& v, std::span<const RingElt> original_coeffs);

// Value of every original variable when y = 1 (zero for unused variables).
std::vector<RingElt> substitution_vector(const TrackedVariable& v, std::size_t n_vars);
std::vector<RingElt> substitution_vector(std::span<const Substitution> parts, std::size_t n_vars);

}  // namespace quartic
