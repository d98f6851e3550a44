#pragma once

// Data-parallel inner loops. Every kernel has a serial reference
// implementation and an OpenMP implementation; both must return identical
// results (tie-breaking is part of the contract), which the kernel tests and
// the benchmark target check.

#include <cstdint>
#include <span>
#include <vector>

#include "quartic/qring.hpp"

namespace quartic {

enum class Backend { serial, parallel };

// Sets the worker count used by the parallel kernels (<= 0 keeps the OpenMP default).
void set_worker_threads(int n);
int worker_threads();

constexpr std::uint32_t kNoPattern = 0xffffffffu;

// For every residue r of O/pi^k (codec order), the smallest digit pattern p
// such that the unit u_p = 1 + sum_{i>=1} bit_{i-1}(p) pi^i satisfies
// u_p^4 ≡ r (mod pi^k); kNoPattern when r is not a unit fourth power.
// Patterns range over [0, 2^(k-1)).
std::vector<std::uint32_t> unit_power_patterns(const FieldParams& f, int k, Backend backend);

// The unit 1 + sum bit_{i-1}(p) pi^i, exact (full precision).
RingElt unit_from_pattern(const FieldParams& f, std::uint32_t pattern, int length);

// One relaxation layer of the residue dynamic program.
//
// States are (residue code, unit flag) packed as 2*code + flag. For each
// destination state the kernel picks the minimum of the key
// (prev_cost + nonzero[k], k, prev_flag) over menu entries k and predecessor
// flags, where the predecessor residue is dest - value[k] and the flag
// becomes prev_flag | qualifies[k]. Costs of 0xff mark unreachable states.
struct LayerMenu {
  std::span<const std::uint64_t> values;    // residue codes of the term values
  std::span<const std::uint8_t> nonzero;    // 1 if the entry assigns a nonzero value to x
  std::span<const std::uint8_t> qualifies;  // 1 if the entry sets the unit flag
};

constexpr std::uint8_t kUnreachable = 0xff;

struct LayerOutput {
  std::span<std::uint8_t> cost;
  std::span<std::uint8_t> choice;
  std::span<std::uint8_t> prev_flag;
};

void relax_layer(const ResidueCodec& codec, std::span<const std::uint8_t> prev_cost,
                 const LayerMenu& menu, LayerOutput out, Backend backend);

}  // namespace quartic
