#pragma once

#include <cstdint>
#include <vector>

#include "banpar/network.hpp"
#include "banpar/schedule.hpp"

namespace banpar {

/// Default cap on any operation that sweeps all 2^n configurations.
inline constexpr std::uint32_t kDefaultSweepGuard = 24;

/// The substep engine: composes the block updates of `sched` over `net`,
/// yielding the transition function as a network of the same class. Each
/// substep reads the previous substep's rules for the whole block before
/// writing any of them.
AffineUnaryNetwork parallelize_unary(const AffineUnaryNetwork& net, const BlockSequence& sched);

/// Every intermediate network of the parallelization process, starting from
/// the identity; the last element equals parallelize_unary's output.
std::vector<AffineUnaryNetwork> substep_trace(const AffineUnaryNetwork& net,
                                              const BlockSequence& sched);

/// Full transition map over all 2^n configurations, by packed encoding.
struct TransitionMap {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> next;  // next[code] = image of code

  friend bool operator==(const TransitionMap&, const TransitionMap&) = default;
};

/// Brute-force parallelization of a general network: applies the blocks in
/// order to every configuration. Refuses n > guard.
TransitionMap parallelize_brute(const TruthTableNetwork& net, const BlockSequence& sched,
                                std::uint32_t guard = kDefaultSweepGuard);

}  // namespace banpar
