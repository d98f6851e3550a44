#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quartic/kernels.hpp"
#include "quartic/qring.hpp"

namespace quartic {

// Residues modulo pi^k keyed by their digit strings (c_0 first).
using ResidueSet = std::map<std::string, RingElt>;

// Unit fourth powers modulo pi^k with, for each, the smallest unit (by digit
// pattern) attaining it. Entries are ordered by that pattern.
struct UnitPowerTable {
  int modulus = 0;
  std::vector<std::uint64_t> codes;  // ResidueCodec(f, modulus) codes of w^4
  std::vector<RingElt> roots;        // w, exact
};

// Cached per (field, k); safe to call concurrently.
const UnitPowerTable& unit_power_table(const FieldParams& f, int k);

// {x^4 mod pi^k : x a unit}; 1 <= k <= 24.
ResidueSet unit_fourth_powers(const FieldParams& f, int k, Backend backend = Backend::parallel);

// {x^4 mod pi^k : x in O}, assembled as {0} ∪ ⋃_{4j<k} pi^{4j} * unit_fourth_powers(k - 4j).
ResidueSet fourth_power_values(const FieldParams& f, int k);

// A unit alpha with alpha^4 ≡ 1 + pi^5 (mod pi^6); the smallest by digit
// pattern. Throws NotFound when none exists.
RingElt find_alpha(const FieldParams& f);

}  // namespace quartic
