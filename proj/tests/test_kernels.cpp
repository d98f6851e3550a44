#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "quartic/kernels.hpp"
#include "quartic/solver.hpp"
#include "support.hpp"

using namespace quartic;
using quartic::testing::Rng;

// every kernel must give bit-identical output across backends and thread counts

TEST(Kernels, UnitPowerPatterns) {
  for (const auto& f : all_fields()) {
    for (int k = 1; k <= 14; ++k) {
      const auto s = unit_power_patterns(f, k, Backend::serial);
      for (int threads : {1, 2, 3, 4}) {
        set_worker_threads(threads);
        EXPECT_EQ(unit_power_patterns(f, k, Backend::parallel), s) << f.name << " k=" << k;
      }
    }
  }
  set_worker_threads(0);
}

TEST(Kernels, PatternsAreMinimal) {
  const auto& f = field(FieldTag::sqrt10);
  const int k = 9;
  const ResidueCodec codec(f, k);
  const auto table = unit_power_patterns(f, k, Backend::serial);
  for (std::uint32_t p = 0; p < (1u << (k - 1)); ++p) {
    const std::uint64_t code = codec.encode(pow4(unit_from_pattern(f, p, k)));
    ASSERT_NE(table[code], kNoPattern);
    EXPECT_LE(table[code], p);
  }
}

TEST(Kernels, RelaxLayerRandom) {
  Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& f = all_fields()[trial % 6];
    const int n = 1 + static_cast<int>(rng() % 10);
    const ResidueCodec codec(f, n);
    const std::size_t states = 2 * codec.size();
    std::vector<std::uint8_t> prev(states, kUnreachable);
    for (auto& c : prev) {
      if (rng() % 3 == 0) c = static_cast<std::uint8_t>(rng() % 5);
    }
    const std::size_t m = 1 + rng() % 12;
    std::vector<std::uint64_t> values(m);
    std::vector<std::uint8_t> nonzero(m), qualifies(m);
    for (std::size_t i = 0; i < m; ++i) {
      values[i] = rng() % codec.size();
      nonzero[i] = static_cast<std::uint8_t>(rng() & 1);
      qualifies[i] = static_cast<std::uint8_t>(rng() & 1);
    }
    const LayerMenu menu{values, nonzero, qualifies};

    std::vector<std::uint8_t> c1(states), k1(states), p1(states);
    std::vector<std::uint8_t> c2(states), k2(states), p2(states);
    relax_layer(codec, prev, menu, {c1, k1, p1}, Backend::serial);
    relax_layer(codec, prev, menu, {c2, k2, p2}, Backend::parallel);
    ASSERT_EQ(c1, c2);
    for (std::size_t s = 0; s < states; ++s) {
      if (c1[s] == kUnreachable) continue;
      EXPECT_EQ(k1[s], k2[s]);
      EXPECT_EQ(p1[s], p2[s]);

      // the recorded choice is the minimum key over all candidates
      const std::uint64_t code = s / 2;
      const unsigned flag = s % 2;
      unsigned best = 0xffffffffu;
      for (std::size_t k = 0; k < m; ++k) {
        for (unsigned pf = 0; pf < 2; ++pf) {
          if ((pf | qualifies[k]) != flag) continue;
          const std::uint8_t pc = prev[2 * codec.sub(code, values[k]) + pf];
          if (pc == kUnreachable) continue;
          const unsigned key = (static_cast<unsigned>(pc + nonzero[k]) << 16) | (k << 1) | pf;
          best = std::min(best, key);
        }
      }
      EXPECT_EQ(c1[s], best >> 16);
      EXPECT_EQ(k1[s], (best >> 1) & 0x7fff);
      EXPECT_EQ(p1[s], best & 1);
    }
  }
}

TEST(Kernels, DpReachBackends) {
  Rng rng(4);
  for (const auto& f : all_fields()) {
    for (int n = 0; n < 10; ++n) {
      const AdditiveForm form = quartic::testing::random_form(f, rng, quartic::testing::random_levels(rng, 6));
      const int N = 4 + static_cast<int>(rng() % 8);
      const ReachTable a = dp_reach(form, N, {}, Backend::serial);
      const ReachTable b = dp_reach(form, N, {}, Backend::parallel);
      const auto ca = a.final_costs(), cb = b.final_costs();
      EXPECT_TRUE(std::equal(ca.begin(), ca.end(), cb.begin(), cb.end()));
      if (a.reachable(0, true)) {
        const auto ra = a.reconstruct(0, true), rb = b.reconstruct(0, true);
        ASSERT_EQ(ra.size(), rb.size());
        for (std::size_t i = 0; i < ra.size(); ++i) EXPECT_EQ(ra[i].code, rb[i].code);
      }
    }
  }
}
