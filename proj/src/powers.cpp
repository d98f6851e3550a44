#include "quartic/powers.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <tuple>

#include "quartic/errors.hpp"

namespace quartic {

namespace {

using TableKey = std::tuple<FieldTag, int, int>;

std::mutex table_mutex;
std::map<TableKey, std::unique_ptr<const UnitPowerTable>> table_cache;

UnitPowerTable build_table(const FieldParams& f, int k) {
  const auto patterns = unit_power_patterns(f, k, Backend::parallel);
  std::vector<std::pair<std::uint32_t, std::uint64_t>> hits;
  for (std::uint64_t code = 0; code < patterns.size(); ++code) {
    if (patterns[code] != kNoPattern) hits.emplace_back(patterns[code], code);
  }
  std::sort(hits.begin(), hits.end());
  UnitPowerTable t;
  t.modulus = k;
  for (const auto& [pattern, code] : hits) {
    t.codes.push_back(code);
    t.roots.push_back(unit_from_pattern(f, pattern, k));
  }
  return t;
}

}  // namespace

const UnitPowerTable& unit_power_table(const FieldParams& f, int k) {
  const TableKey key{f.tag, f.bits, k};
  {
    std::lock_guard lock(table_mutex);
    if (auto it = table_cache.find(key); it != table_cache.end()) return *it->second;
  }
  // Roots keep a pointer to their FieldParams; prefer the static instance.
  const FieldParams& owner = f.bits == field(f.tag).bits ? field(f.tag) : f;
  auto built = std::make_unique<const UnitPowerTable>(build_table(owner, k));
  std::lock_guard lock(table_mutex);
  auto [it, inserted] = table_cache.emplace(key, std::move(built));
  return *it->second;
}

ResidueSet unit_fourth_powers(const FieldParams& f, int k, Backend backend) {
  const ResidueCodec codec(f, k);
  const auto patterns = unit_power_patterns(f, k, backend);
  ResidueSet out;
  for (std::uint64_t code = 0; code < patterns.size(); ++code) {
    if (patterns[code] == kNoPattern) continue;
    out.emplace(codec.digit_string(code), codec.decode(code, k));
  }
  return out;
}

ResidueSet fourth_power_values(const FieldParams& f, int k) {
  const ResidueCodec codec(f, k);
  ResidueSet out;
  out.emplace(std::string(static_cast<std::size_t>(k), '0'), RingElt::zero(f, k));
  for (int j = 0; 4 * j < k; ++j) {
    const RingElt scale = mul_pi_power(RingElt::one(f, f.max_precision()), 4 * j);
    for (const RingElt& w : unit_power_table(f, k - 4 * j).roots) {
      const std::uint64_t code = codec.encode(scale * pow4(w));
      out.emplace(codec.digit_string(code), codec.decode(code, k));
    }
  }
  return out;
}

RingElt find_alpha(const FieldParams& f) {
  const RingElt target = from_digit_string(f, "100001", 6);
  for (std::uint32_t p = 0; p < 32; ++p) {
    const RingElt alpha = unit_from_pattern(f, p, 6);
    if (congruent(pow4(alpha).with_precision(6), target, 6)) return alpha;
  }
  throw NotFound("no unit alpha with alpha^4 ≡ 1 + pi^5 (mod pi^6) in " + std::string(f.name));
}

}  // namespace quartic
