#pragma once

// Random generators shared by the property tests and the acceptance runner.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "quartic/forms.hpp"
#include "quartic/qring.hpp"

namespace quartic::testing {

using Rng = std::mt19937_64;

// 1 + sum_{i=1}^{n-1} r_i pi^i with random bits, exact.
inline RingElt random_unit(const FieldParams& f, Rng& rng, int n) {
  const RingElt pi = RingElt::pi(f, f.max_precision());
  RingElt u = RingElt::one(f, f.max_precision());
  RingElt p = u;
  for (int i = 1; i < n; ++i) {
    p = p * pi;
    if (rng() & 1) u = u + p;
  }
  return u;
}

// Uniform over O/pi^prec.
inline RingElt random_elt(const FieldParams& f, Rng& rng, int prec) {
  return RingElt::from_coords(f, rng(), rng(), prec);
}

inline RingElt with_level(const RingElt& u, int level) { return mul_pi_power(u, level); }

// pi^level_i * (unit with `unit_digits` random digits), at full precision.
inline AdditiveForm random_form(const FieldParams& f, Rng& rng, const std::vector<int>& lv,
                                int unit_digits = 8) {
  std::vector<RingElt> cs;
  for (int l : lv) cs.push_back(with_level(random_unit(f, rng, unit_digits), l));
  return AdditiveForm(f, std::move(cs));
}

inline std::vector<int> random_levels(Rng& rng, int n, int max_level = 3) {
  std::vector<int> lv(static_cast<std::size_t>(n));
  for (auto& l : lv) l = static_cast<int>(rng() % static_cast<std::uint64_t>(max_level + 1));
  return lv;
}

inline std::vector<int> levels_of_type(const FormType& t, Rng& rng) {
  std::vector<int> lv;
  for (int l = 0; l < 4; ++l) lv.insert(lv.end(), static_cast<std::size_t>(t.counts[static_cast<std::size_t>(l)]), l);
  std::shuffle(lv.begin(), lv.end(), rng);
  return lv;
}

}  // namespace quartic::testing
