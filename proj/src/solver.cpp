#include "quartic/solver.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "quartic/errors.hpp"
#include "quartic/powers.hpp"

namespace quartic {

namespace {

constexpr int kLiftThreshold = 7;  // gamma = floor(e/(p-1)) + e*tau + 1 with e = tau = 2, p = 2

RingElt exact(const FieldParams& f, std::int64_t a) { return RingElt(f, a, 0, f.max_precision()); }

}  // namespace

std::vector<TermChoice> term_menu(const RingElt& coeff, int modulus, std::size_t variable) {
  const FieldParams& f = coeff.field();
  if (modulus < 1 || modulus > coeff.precision()) {
    throw PrecisionError("term menu modulo pi^" + std::to_string(modulus) +
                         " needs the coefficient to that precision");
  }
  const ResidueCodec codec(f, modulus);
  std::vector<TermChoice> menu;
  menu.push_back({variable, TermCategory::zero, 0, exact(f, 0), RingElt::zero(f, modulus), 0});

  const Valuation v = valuation(coeff);
  if (!v.exact || v.value >= modulus) {
    // Every value vanishes; a unit x is still worth recording for primitivity.
    menu.push_back({variable, TermCategory::unit, 0, exact(f, 1), RingElt::zero(f, modulus), 0});
    return menu;
  }
  for (int j = 0; 4 * j + v.value < modulus; ++j) {
    const int r = modulus - 4 * j - v.value;
    for (const RingElt& w : unit_power_table(f, r).roots) {
      const RingElt x = mul_pi_power(w, j);
      const RingElt value = (coeff * pow4(x)).with_precision(modulus);
      const std::uint64_t code = codec.encode(value);
      menu.push_back({variable, j == 0 ? TermCategory::unit : TermCategory::scaled, j, x,
                      codec.decode(code, modulus), code});
    }
  }
  return menu;
}

bool ReachTable::reachable(std::uint64_t code, bool unit_flag) const {
  return min_nonzero(code, unit_flag).has_value();
}

bool ReachTable::reachable(const RingElt& residue, bool unit_flag) const {
  return reachable(codec_.encode(residue), unit_flag);
}

std::optional<int> ReachTable::min_nonzero(std::uint64_t code, bool unit_flag) const {
  if (code >= codec_.size()) throw std::out_of_range("residue code out of range");
  const std::uint8_t c = cost_.back()[(code << 1) | (unit_flag ? 1 : 0)];
  if (c == kUnreachable) return std::nullopt;
  return c;
}

std::vector<TermChoice> ReachTable::reconstruct(std::uint64_t code, bool unit_flag) const {
  if (!reachable(code, unit_flag)) throw NotFound("residue is not reachable");
  std::vector<TermChoice> out;
  std::uint8_t flag = unit_flag ? 1 : 0;
  for (std::size_t layer = menus_.size(); layer > 0; --layer) {
    const std::size_t state = (code << 1) | flag;
    const TermChoice& pick = menus_[layer - 1][choice_[layer - 1][state]];
    out.push_back(pick);
    code = codec_.sub(code, pick.code);
    flag = prev_flag_[layer - 1][state];
  }
  if (code != 0 || flag != 0) throw std::logic_error("reach table backpointers are inconsistent");
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> ReachTable::reachable_codes(bool unit_flag) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t code = 0; code < codec_.size(); ++code) {
    if (reachable(code, unit_flag)) out.push_back(code);
  }
  return out;
}

ReachTable dp_reach(const AdditiveForm& form, int modulus, std::span<const std::uint8_t> qualifying,
                    Backend backend) {
  if (modulus < 1 || modulus > kMaxTableModulus) {
    throw std::invalid_argument("residue tables support moduli 1..12");
  }
  if (!qualifying.empty() && qualifying.size() != form.size()) {
    throw LengthMismatch("qualifying mask does not match the form");
  }
  ReachTable table{ResidueCodec(form.field(), modulus)};
  const std::size_t n_states = table.codec_.size() * 2;

  std::vector<std::uint8_t> start(n_states, kUnreachable);
  start[0] = 0;
  table.cost_.push_back(std::move(start));

  for (std::size_t i = 0; i < form.size(); ++i) {
    auto menu = term_menu(form[i], modulus, i);
    if (menu.size() > 255) throw std::length_error("term menu exceeds 255 entries");
    const bool counts = qualifying.empty() || qualifying[i] != 0;
    std::vector<std::uint64_t> values;
    std::vector<std::uint8_t> nonzero;
    std::vector<std::uint8_t> qualifies;
    for (const auto& t : menu) {
      values.push_back(t.code);
      nonzero.push_back(t.category != TermCategory::zero);
      qualifies.push_back(counts && t.category == TermCategory::unit);
    }
    std::vector<std::uint8_t> cost(n_states);
    std::vector<std::uint8_t> choice(n_states);
    std::vector<std::uint8_t> prev(n_states);
    relax_layer(table.codec_, table.cost_.back(), LayerMenu{values, nonzero, qualifies},
                LayerOutput{cost, choice, prev}, backend);
    table.cost_.push_back(std::move(cost));
    table.choice_.push_back(std::move(choice));
    table.prev_flag_.push_back(std::move(prev));
    table.menus_.push_back(std::move(menu));
  }
  return table;
}

namespace {

std::optional<RawWitness> exact_cancellation(const AdditiveForm& form, const std::vector<int>& lv) {
  const FieldParams& f = form.field();
  for (std::size_t i = 0; i < form.size(); ++i) {
    for (std::size_t j = i + 1; j < form.size(); ++j) {
      if (lv[i] != lv[j] || valuation(form[i] + form[j]).exact) continue;
      std::vector<RingElt> x(form.size(), exact(f, 0));
      x[i] = exact(f, 1);
      x[j] = exact(f, 1);
      return RawWitness{std::move(x), i, kLiftThreshold + lv[i], lv[i]};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<RawWitness> find_liftable(const AdditiveForm& form, Backend backend) {
  const auto lv = levels(form);
  for (int level : lv) {
    if (level > 3) throw LevelMismatch("find_liftable expects coefficient levels in 0..3");
  }
  if (auto w = exact_cancellation(form, lv)) return w;

  for (int level = 0; level <= 3; ++level) {
    if (std::find(lv.begin(), lv.end(), level) == lv.end()) continue;
    const int modulus = kLiftThreshold + level;
    std::vector<std::uint8_t> qualifying(form.size());
    for (std::size_t i = 0; i < form.size(); ++i) qualifying[i] = lv[i] == level;
    const ReachTable table = dp_reach(form, modulus, qualifying, backend);
    if (!table.reachable(0, true)) continue;

    const auto picks = table.reconstruct(0, true);
    RawWitness w{{}, form.size(), modulus, level};
    for (const auto& p : picks) {
      if (w.lifted_index == form.size() && p.category == TermCategory::unit && qualifying[p.variable]) {
        w.lifted_index = p.variable;
      }
      w.assignment.push_back(p.representative);
    }
    return w;
  }
  return std::nullopt;
}

std::vector<RingElt> hensel_lift_trace(const RingElt& c, const RingElt& b, const RingElt& a,
                                       int nu, int target) {
  const FieldParams& f = c.field();
  if (!is_unit(c) || !is_unit(b)) throw NonUnit("hensel_lift needs unit c and b");
  if (nu < kLiftThreshold) throw std::invalid_argument("hensel_lift needs nu >= 7");
  if (target > c.precision() || target > b.precision()) {
    throw PrecisionError("cannot lift to pi^" + std::to_string(target) +
                         " with inputs known to fewer digits");
  }
  if (nu > c.precision() || !congruent((c * pow4(a)).with_precision(nu), b.with_precision(nu), nu)) {
    throw std::invalid_argument("hensel_lift: c a^4 ≢ b (mod pi^nu)");
  }

  std::vector<RingElt> powers;
  RingElt p = RingElt::one(f, f.max_precision());
  for (int i = 0; i < std::max(target, nu); ++i) {
    powers.push_back(p);
    p = p * RingElt::pi(f, f.max_precision());
  }

  RingElt t = RingElt::from_coords(f, a.a(), a.b(), f.max_precision());
  std::vector<RingElt> trace{t.with_precision(nu)};
  for (int n = nu; n < target; ++n) {
    bool stepped = false;
    for (unsigned mask = 0; mask < 16 && !stepped; ++mask) {
      RingElt candidate = t;
      for (int i = 0; i < 4; ++i) {
        if (mask & (1u << i)) candidate = candidate + powers[static_cast<std::size_t>(n - 4 + i)];
      }
      if (congruent(c * pow4(candidate), b, n + 1)) {
        t = candidate;
        stepped = true;
      }
    }
    if (!stepped) throw StepFailed("no lift from pi^" + std::to_string(n) + " to pi^" + std::to_string(n + 1));
    trace.push_back(t.with_precision(n + 1));
  }
  return trace;
}

RingElt hensel_lift(const RingElt& c, const RingElt& b, const RingElt& a, int nu, int target) {
  return hensel_lift_trace(c, b, a, nu, target).back();
}

Witness solve(const AdditiveForm& form, int modulus, Backend backend) {
  const FieldParams& f = form.field();
  if (modulus < 1 || modulus > form.precision()) {
    throw PrecisionError("target modulus pi^" + std::to_string(modulus) +
                         " exceeds the form precision " + std::to_string(form.precision()));
  }
  const LevelScaling scaling = rescale(form, 0);
  const AdditiveForm& reduced = scaling.form;
  const auto raw = find_liftable(reduced, backend);
  if (!raw) throw NoZeroFound("no nontrivial zero: no liftable assignment exists");

  // x_i = pi^(Q - q_i) y_i, then the common power pi^t is removed again.
  const int q_max = *std::max_element(scaling.quotients.begin(), scaling.quotients.end());
  int t = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    const Valuation v = valuation(raw->assignment[i]);
    if (v.exact) t = std::min(t, q_max - scaling.quotients[i] + v.value);
  }
  const int reduced_target = modulus - 4 * (q_max - t);
  if (reduced_target > reduced.precision()) {
    throw PrecisionError("reduced form too imprecise for modulus " + std::to_string(modulus));
  }

  std::vector<RingElt> y = raw->assignment;
  const std::size_t j = raw->lifted_index;
  const int level = raw->level;
  const int unit_target = reduced_target - level;
  if (unit_target > kLiftThreshold) {
    RingElt rest = RingElt::zero(f, reduced.precision());
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      if (i != j) rest = rest + reduced[i] * pow4(y[i]);
    }
    const RingElt unit_coeff = divide_by_pi_power(reduced[j], level);
    const RingElt rhs = divide_by_pi_power(-rest, level);
    const RingElt lifted = hensel_lift(unit_coeff, rhs, y[j], kLiftThreshold, unit_target);
    y[j] = RingElt::from_coords(f, lifted.a(), lifted.b(), f.max_precision());
  }

  MappedZero mapped = map_back(scaling, y, std::max(reduced_target, raw->modulus));
  Witness w{{}, j, modulus, RingElt::zero(f, modulus)};
  for (const auto& x : mapped.assignment) {
    w.assignment.push_back(RingElt::from_coords(f, x.a(), x.b(), modulus));
  }
  w.residual = evaluate(form, w.assignment, modulus);
  if (!verify(form, w).passed()) throw std::logic_error("solver produced an invalid witness");
  return w;
}

VerifyReport verify(const AdditiveForm& form, const Witness& witness) {
  VerifyReport r;
  r.length_ok = witness.assignment.size() == form.size();
  if (!r.length_ok) {
    r.message = "assignment length differs from the number of variables";
    return r;
  }
  try {
    const RingElt value = evaluate(form, witness.assignment, witness.check_modulus);
    r.residual_digits = digit_string(value, witness.check_modulus);
    r.zero_ok = !valuation(value).exact;
  } catch (const Error& e) {
    r.message = e.what();
    return r;
  }
  r.primitive_ok = std::any_of(witness.assignment.begin(), witness.assignment.end(),
                               [](const RingElt& x) { return is_unit(x); });
  r.lifted_is_unit = witness.lifted_index < witness.assignment.size() &&
                     is_unit(witness.assignment[witness.lifted_index]);
  if (!r.zero_ok) {
    r.message = "form does not vanish modulo pi^" + std::to_string(witness.check_modulus);
  } else if (!r.primitive_ok) {
    r.message = "assignment is not primitive (no unit entry)";
  } else {
    r.message = "ok";
  }
  return r;
}

}  // namespace quartic
