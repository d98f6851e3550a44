#include "quartic/kernels.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace quartic {

void set_worker_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

int worker_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

std::vector<RingElt> pi_powers(const FieldParams& f, int count) {
  std::vector<RingElt> out;
  RingElt p = RingElt::one(f, f.max_precision());
  const RingElt pi = RingElt::pi(f, f.max_precision());
  for (int i = 0; i < count; ++i) {
    out.push_back(p);
    p = p * pi;
  }
  return out;
}

RingElt unit_with_powers(const std::vector<RingElt>& powers, std::uint32_t pattern) {
  RingElt u = powers[0];
  for (std::size_t i = 1; i < powers.size(); ++i) {
    if (pattern & (1u << (i - 1))) u = u + powers[i];
  }
  return u;
}

void check_pattern_modulus(int k) {
  if (k < 1 || k > 24) throw std::invalid_argument("fourth-power enumeration supports 1 <= k <= 24");
}

}  // namespace

RingElt unit_from_pattern(const FieldParams& f, std::uint32_t pattern, int length) {
  return unit_with_powers(pi_powers(f, std::max(length, 1)), pattern);
}

std::vector<std::uint32_t> unit_power_patterns(const FieldParams& f, int k, Backend backend) {
  check_pattern_modulus(k);
  const ResidueCodec codec(f, k);
  const auto powers = pi_powers(f, k);
  const std::uint32_t n_patterns = std::uint32_t{1} << (k - 1);
  std::vector<std::uint32_t> table(codec.size(), kNoPattern);

  if (backend == Backend::serial) {
    for (std::uint32_t p = 0; p < n_patterns; ++p) {
      const std::uint64_t code = codec.encode(pow4(unit_with_powers(powers, p)));
      if (table[code] == kNoPattern) table[code] = p;
    }
    return table;
  }

#pragma omp parallel
  {
    std::vector<std::uint32_t> local(codec.size(), kNoPattern);
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n_patterns); ++i) {
      const auto p = static_cast<std::uint32_t>(i);
      const std::uint64_t code = codec.encode(pow4(unit_with_powers(powers, p)));
      local[code] = std::min(local[code], p);
    }
#pragma omp critical
    for (std::size_t r = 0; r < table.size(); ++r) table[r] = std::min(table[r], local[r]);
  }
  return table;
}

namespace {

void relax_push(const ResidueCodec& codec, std::span<const std::uint8_t> prev_cost,
                const LayerMenu& menu, LayerOutput out) {
  std::fill(out.cost.begin(), out.cost.end(), kUnreachable);
  std::fill(out.choice.begin(), out.choice.end(), 0);
  std::fill(out.prev_flag.begin(), out.prev_flag.end(), 0);
  const std::size_t n_states = prev_cost.size();
  for (std::size_t s = 0; s < n_states; ++s) {
    if (prev_cost[s] == kUnreachable) continue;
    const std::uint64_t r = s >> 1;
    const std::uint8_t f_old = s & 1;
    for (std::size_t k = 0; k < menu.values.size(); ++k) {
      const std::size_t dest = (codec.add(r, menu.values[k]) << 1) | (f_old | menu.qualifies[k]);
      const auto c = static_cast<std::uint8_t>(prev_cost[s] + menu.nonzero[k]);
      const auto kk = static_cast<std::uint8_t>(k);
      const bool better = c < out.cost[dest] ||
                          (c == out.cost[dest] &&
                           (kk < out.choice[dest] || (kk == out.choice[dest] && f_old < out.prev_flag[dest])));
      if (better) {
        out.cost[dest] = c;
        out.choice[dest] = kk;
        out.prev_flag[dest] = f_old;
      }
    }
  }
}

void relax_pull(const ResidueCodec& codec, std::span<const std::uint8_t> prev_cost,
                const LayerMenu& menu, LayerOutput out) {
  const auto n_codes = static_cast<std::int64_t>(codec.size());
  const std::size_t n_menu = menu.values.size();
#pragma omp parallel for schedule(static)
  for (std::int64_t ri = 0; ri < n_codes; ++ri) {
    const auto r = static_cast<std::uint64_t>(ri);
    for (std::uint8_t f = 0; f < 2; ++f) {
      std::uint8_t best = kUnreachable;
      std::uint8_t best_k = 0;
      std::uint8_t best_flag = 0;
      for (std::size_t k = 0; k < n_menu; ++k) {
        if (menu.qualifies[k] && f == 0) continue;
        const std::uint64_t src = codec.sub(r, menu.values[k]);
        const std::uint8_t lo = menu.qualifies[k] ? 0 : f;
        for (std::uint8_t f_old = lo; f_old <= f; ++f_old) {
          const std::uint8_t pc = prev_cost[(src << 1) | f_old];
          if (pc == kUnreachable) continue;
          const auto c = static_cast<std::uint8_t>(pc + menu.nonzero[k]);
          if (c < best) {
            best = c;
            best_k = static_cast<std::uint8_t>(k);
            best_flag = f_old;
          }
        }
      }
      const std::size_t dest = (r << 1) | f;
      out.cost[dest] = best;
      out.choice[dest] = best_k;
      out.prev_flag[dest] = best_flag;
    }
  }
}

}  // namespace

void relax_layer(const ResidueCodec& codec, std::span<const std::uint8_t> prev_cost,
                 const LayerMenu& menu, LayerOutput out, Backend backend) {
  const std::size_t n_states = codec.size() * 2;
  if (prev_cost.size() != n_states || out.cost.size() != n_states ||
      out.choice.size() != n_states || out.prev_flag.size() != n_states) {
    throw std::invalid_argument("layer buffers must hold 2 * 2^N states");
  }
  if (menu.values.size() > 255 || menu.nonzero.size() != menu.values.size() ||
      menu.qualifies.size() != menu.values.size()) {
    throw std::invalid_argument("malformed layer menu");
  }
  if (backend == Backend::serial) {
    relax_push(codec, prev_cost, menu, out);
  } else {
    relax_pull(codec, prev_cost, menu, out);
  }
}

}  // namespace quartic
