#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "banpar/network.hpp"
#include "banpar/parallelize.hpp"
#include "banpar/schedule.hpp"

namespace banpar {

/// One weakly connected component of a unary network's dependency graph
/// (vertex i points to its link source). A component holds either exactly
/// one cycle, or exactly one constant-rooted tree and no cycle.
struct ComponentInfo {
  std::uint32_t vertex_count = 0;
  std::uint32_t cycle_length = 0;  // 0 for a constant-rooted component
  Sign cycle_sign = Sign::positive;  // product of signs around the cycle
  bool has_constant = false;

  friend bool operator==(const ComponentInfo&, const ComponentInfo&) = default;
};

/// Component/cycle structure of a unary network.
struct ComponentReport {
  std::uint32_t component_count = 0;
  std::vector<ComponentInfo> components;

  std::uint32_t cycle_count() const;
  std::uint32_t positive_cycle_count() const;
  bool has_negative_cycle() const;
};

/// Components, cycle lengths and cycle signs of the dependency graph, in
/// linear time.
ComponentReport cycle_census(const AffineUnaryNetwork& net);

/// Fixed-point count of a unary network in exponent form: a negative cycle
/// forces zero; otherwise each positive-cycle component doubles the count
/// and constant-rooted components are forced, so the count is 2^exponent.
struct FixedPointCount {
  std::uint32_t exponent = 0;
  bool zero = false;

  /// Plain value when it fits: 0 if zero, else 2^exponent for exponent <= 63.
  std::optional<std::uint64_t> value() const {
    if (zero) return 0;
    if (exponent <= 63) return std::uint64_t{1} << exponent;
    return std::nullopt;
  }

  friend bool operator==(const FixedPointCount&, const FixedPointCount&) = default;
};

FixedPointCount count_fixed_points_unary(const AffineUnaryNetwork& net);

/// All configurations x with the composed block application equal to x,
/// in ascending integer encoding. Refuses n > guard.
std::vector<Configuration> brute_force_fixed_points(const TruthTableNetwork& net,
                                                    const BlockSequence& sched,
                                                    std::uint32_t guard = kDefaultSweepGuard);

/// Packed-encoding variant.
std::vector<std::uint64_t> brute_force_fixed_point_codes(const TruthTableNetwork& net,
                                                         const BlockSequence& sched,
                                                         std::uint32_t guard = kDefaultSweepGuard);

/// True iff the fixed points under `bs` (which must be an ordered partition)
/// equal the fixed points under the parallel schedule.
bool check_bs_invariance(const TruthTableNetwork& net, const BlockSequence& bs,
                         std::uint32_t guard = kDefaultSweepGuard);

}  // namespace banpar
