#pragma once

#include <cstdint>

#include "banpar/network.hpp"
#include "banpar/schedule.hpp"

namespace banpar {

/// Canonical positive cycle of size n: rule i = x_{i-1 mod n}.
AffineUnaryNetwork positive_cycle(std::uint32_t n);

/// Positive cycle with rule 0 negated: a negative cycle, no parallel fixed point.
AffineUnaryNetwork negative_cycle(std::uint32_t n);

enum class HhatVariant : std::uint8_t {
  /// Size 3n: negative cycle on {0..n-1} plus 2n constant-0 automata.
  standard,
  /// Size 2n: the cycle closed positively, plus n constant-0 automata.
  positive,
};

/// The exponential fixed-point family: a small cycle plus constant automata
/// whose o-block stretches the step until the cycle composes to identity.
AffineUnaryNetwork hhat(std::uint32_t n, HhatVariant variant = HhatVariant::standard);

/// Schedule for hhat: n singletons plus one o-block of all constant automata.
PartitionedOrder mu_hat(std::uint32_t n, HhatVariant variant = HhatVariant::standard);

/// Two-o-block schedule for the positive cycle of odd size n = 2k+1:
/// {(0,...,k-1), (k, k+1, 2k, 2k-1, ..., k+2)}. Requires k >= 2. Its
/// parallelization has k cycles.
PartitionedOrder mu_odd(std::uint32_t k);

/// Three-o-block schedule for the positive cycle of even size n = 2k:
/// {(0), (1,...,k-1), (k, 2k-1, k+1, 2k-2, ..., k+2)}. Requires k >= 4. Its
/// parallelization has k-1 cycles.
PartitionedOrder mu_even(std::uint32_t k);

}  // namespace banpar
