#include "quartic/contraction.hpp"

#include <algorithm>
#include <string>

#include "quartic/powers.hpp"

namespace quartic {

TrackedVariable TrackedVariable::original(std::size_t index, const RingElt& coeff) {
  const Valuation v = valuation(coeff);
  if (!v.exact) throw ZeroCoefficient("original variable has a zero coefficient");
  TrackedVariable t(coeff);
  t.level_ = v.value;
  t.source_ = index;
  return t;
}

TrackedVariable TrackedVariable::marked_free() const {
  if (!is_original()) throw std::logic_error("only original variables are marked free explicitly");
  TrackedVariable t = *this;
  t.free_levels_.insert(level_ + 5);
  return t;
}

TrackedVariable TrackedVariable::combine(std::vector<Substitution> parts,
                                         std::optional<int> contraction_level) {
  if (parts.empty()) throw std::invalid_argument("a combined variable needs at least one part");
  const FieldParams& f = parts.front().value.field();
  RingElt sum = RingElt::zero(f, f.max_precision());
  std::set<int> free;
  for (const auto& part : parts) {
    sum = sum + part.variable->coeff() * pow4(part.value);
    const Valuation vb = valuation(part.value);
    if (!vb.exact) continue;  // a zero substitution contributes nothing
    for (int level : part.variable->free_levels()) free.insert(level + 4 * vb.value);
  }
  const Valuation v = valuation(sum);
  if (!v.exact) throw DegenerateContraction(std::move(parts));
  if (contraction_level) free.insert(*contraction_level + 5);

  TrackedVariable t(sum);
  t.level_ = v.value;
  t.free_levels_ = std::move(free);
  t.children_ = std::move(parts);
  t.contraction_level_ = contraction_level;
  return t;
}

PairCase classify_pair(const RingElt& u1, const RingElt& u2) {
  if (!is_unit(u1) || !is_unit(u2)) throw NonUnit("classify_pair expects two units");
  const auto d1 = digits(u1, 3);
  const auto d2 = digits(u2, 3);
  if (d1[1] != d2[1]) return PairCase::OneUp;
  return d1[2] == d2[2] ? PairCase::TwoUp : PairCase::ThreePlusUp;
}

namespace {

Substitution part(const TrackedVariable& v, const RingElt& b) {
  return {std::make_shared<const TrackedVariable>(v), b};
}

RingElt exact_one(const FieldParams& f) { return RingElt::one(f, f.max_precision()); }

// digit `i` of the coefficient of v, counted from pi^0
int coeff_digit(const TrackedVariable& v, int i) { return digits(v.coeff(), i + 1)[static_cast<std::size_t>(i)]; }

}  // namespace

TrackedVariable contract_pair(const TrackedVariable& v1, const TrackedVariable& v2,
                              const RingElt& b1, const RingElt& b2) {
  if (v1.level() != v2.level()) {
    throw LevelMismatch("contract_pair needs equal levels, got " + std::to_string(v1.level()) +
                        " and " + std::to_string(v2.level()));
  }
  if (!is_unit(b1) && !is_unit(b2)) throw NonUnit("one substitution value must be a unit");
  return TrackedVariable::combine({part(v1, b1), part(v2, b2)}, v1.level());
}

TrackedVariable contract_pair(const TrackedVariable& v1, const TrackedVariable& v2) {
  const RingElt one = exact_one(v1.coeff().field());
  return contract_pair(v1, v2, one, one);
}

TrackedVariable contract_four(const std::array<TrackedVariable, 4>& vs, const Pairing& pairing) {
  std::array<int, 4> seen{};
  for (const auto& pr : pairing) {
    for (int i : pr) {
      if (i < 0 || i > 3 || seen[static_cast<std::size_t>(i)]++) {
        throw InvalidPairing("pairing must partition the four variables into two pairs");
      }
    }
  }
  const int k = vs[0].level();
  for (const auto& v : vs) {
    if (v.level() != k) throw InvalidPairing("all four variables must share a level");
  }
  const int pi_digit = coeff_digit(vs[0], k + 1);
  for (const auto& v : vs) {
    if (coeff_digit(v, k + 1) != pi_digit) throw InvalidPairing("pi-coefficients differ");
  }
  for (const auto& pr : pairing) {
    const auto& a = vs[static_cast<std::size_t>(pr[0])];
    const auto& b = vs[static_cast<std::size_t>(pr[1])];
    if (coeff_digit(a, k + 2) != coeff_digit(b, k + 2) ||
        coeff_digit(a, k + 3) != coeff_digit(b, k + 3)) {
      throw InvalidPairing("paired variables lie in different pi^2,pi^3-classes");
    }
  }
  const RingElt one = exact_one(vs[0].coeff().field());
  std::vector<Substitution> parts;
  for (const auto& v : vs) parts.push_back(part(v, one));
  return TrackedVariable::combine(std::move(parts), k);
}

TrackedVariable scale_up(const TrackedVariable& v, int j) {
  if (j < 1) throw std::invalid_argument("scale_up needs j >= 1");
  const FieldParams& f = v.coeff().field();
  return TrackedVariable::combine({part(v, mul_pi_power(exact_one(f), j))}, std::nullopt);
}

namespace {

TrackedVariable toggle_at(const TrackedVariable& v, int target, const RingElt& alpha) {
  std::vector<Substitution> parts = v.children();

  if (v.contraction_level() && target == *v.contraction_level() + 5) {
    // Any child sitting exactly at the contraction level with a unit value
    // contributes pi^k * unit; scaling it by alpha^4 moves digit k+5 only.
    for (auto& p : parts) {
      if (is_unit(p.value) && p.variable->level() == *v.contraction_level()) {
        p.value = p.value * alpha;
        return TrackedVariable::combine(std::move(parts), v.contraction_level());
      }
    }
  }
  for (auto& p : parts) {
    const Valuation vb = valuation(p.value);
    if (!vb.exact) continue;
    const int shifted = target - 4 * vb.value;
    if (!p.variable->is_free_at(shifted)) continue;
    if (p.variable->is_original()) {
      p.value = p.value * alpha;
    } else {
      p.variable = std::make_shared<const TrackedVariable>(toggle_at(*p.variable, shifted, alpha));
    }
    return TrackedVariable::combine(std::move(parts), v.contraction_level());
  }
  throw LevelNotFree("no substitution controls level " + std::to_string(target));
}

}  // namespace

TrackedVariable toggle_pi5(const TrackedVariable& v, int target_level) {
  if (!v.is_free_at(target_level)) {
    throw LevelNotFree("variable is not free at level " + std::to_string(target_level));
  }
  if (v.is_original()) {
    throw LevelNotFree("an original variable is toggled through the contraction that uses it");
  }
  return toggle_at(v, target_level, find_alpha(v.coeff().field()));
}

TrackedVariable slide(const TrackedVariable& anchor1, const TrackedVariable& anchor2,
                      std::span<const TrackedVariable> rungs, int t, std::optional<int> stop_at) {
  if (anchor1.level() != anchor2.level()) throw LevelMismatch("slide anchors must share a level");
  if (t < 1) throw std::invalid_argument("slide needs t >= 1");
  const int k = anchor1.level();
  if (stop_at && *stop_at <= k) throw std::invalid_argument("stop level must lie above the anchors");

  std::vector<bool> used(rungs.size(), false);
  TrackedVariable current = contract_pair(anchor1, anchor2);
  for (;;) {
    const int level = current.level();
    if (stop_at) {
      if (level == *stop_at) return current;
      if (level > *stop_at) {
        // Digits below stop_at are zero, so flipping that digit lands exactly on it.
        if (!current.is_free_at(*stop_at)) {
          throw LevelNotFree("overshot level " + std::to_string(*stop_at) + ", which is not free");
        }
        return toggle_pi5(current, *stop_at);
      }
    } else if (level >= k + t) {
      return current;
    }

    if (current.is_free_at(level)) {
      current = toggle_pi5(current, level);
      continue;
    }
    bool advanced = false;
    for (std::size_t i = 0; i < rungs.size(); ++i) {
      if (used[i] || rungs[i].level() != level) continue;
      used[i] = true;
      current = contract_pair(current, rungs[i]);
      advanced = true;
      break;
    }
    if (!advanced) {
      throw MissingRung("no variable or free level at level " + std::to_string(level), level);
    }
  }
}

RingElt replay(const TrackedVariable& v, std::span<const RingElt> original_coeffs) {
  if (v.is_original()) return original_coeffs[*v.source_index()];
  const FieldParams& f = v.coeff().field();
  RingElt sum = RingElt::zero(f, f.max_precision());
  for (const auto& p : v.children()) sum = sum + replay(*p.variable, original_coeffs) * pow4(p.value);
  return sum;
}

namespace {

void collect(const TrackedVariable& v, const RingElt& multiplier, std::vector<RingElt>& out,
             std::vector<bool>& assigned) {
  if (v.is_original()) {
    const std::size_t i = *v.source_index();
    if (i >= out.size()) throw std::out_of_range("original index beyond the variable count");
    if (assigned[i]) throw std::invalid_argument("original variable used twice in one tree");
    out[i] = multiplier;
    assigned[i] = true;
    return;
  }
  for (const auto& p : v.children()) collect(*p.variable, multiplier * p.value, out, assigned);
}

}  // namespace

std::vector<RingElt> substitution_vector(std::span<const Substitution> parts, std::size_t n_vars) {
  if (parts.empty()) throw std::invalid_argument("no substitutions");
  const FieldParams& f = parts.front().value.field();
  std::vector<RingElt> out(n_vars, RingElt::zero(f, f.max_precision()));
  std::vector<bool> assigned(n_vars, false);
  for (const auto& p : parts) collect(*p.variable, p.value, out, assigned);
  return out;
}

std::vector<RingElt> substitution_vector(const TrackedVariable& v, std::size_t n_vars) {
  const FieldParams& f = v.coeff().field();
  std::vector<RingElt> out(n_vars, RingElt::zero(f, f.max_precision()));
  std::vector<bool> assigned(n_vars, false);
  collect(v, RingElt::one(f, f.max_precision()), out, assigned);
  return out;
}

}  // namespace quartic
