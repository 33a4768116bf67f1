#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// deliberately re-derive everything from first principles instead of calling
// back into the library paths they are meant to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "banpar/network.hpp"
#include "banpar/schedule.hpp"

namespace testutil {

// Size-3 network with f_0 = x_1, f_1 = x_0, f_2 = !x_2.
inline banpar::TruthTableNetwork dual_negation_net() {
  banpar::TruthTableNetwork net;
  net.n = 3;
  net.rules = {
      {{1}, {0, 1}},
      {{0}, {0, 1}},
      {{2}, {1, 0}},
  };
  return net;
}

inline banpar::BlockSequence blocks(std::uint32_t n,
                                    std::vector<std::vector<std::uint32_t>> blocks) {
  banpar::BlockSequence bs;
  bs.n = n;
  bs.blocks = std::move(blocks);
  for (auto& w : bs.blocks) std::sort(w.begin(), w.end());
  return bs;
}

inline banpar::BlockSequence parallel_schedule(std::uint32_t n) {
  std::vector<std::uint32_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  return blocks(n, {all});
}

// All partitioned orders of {0..n-1}: every set partition with every
// ordering of every block. Exponential; intended for n <= 5.
inline std::vector<banpar::PartitionedOrder> all_partitioned_orders(std::uint32_t n) {
  std::vector<std::vector<std::vector<std::uint32_t>>> set_partitions;
  std::vector<std::vector<std::uint32_t>> current;
  auto recurse = [&](auto&& self, std::uint32_t next) -> void {
    if (next == n) {
      set_partitions.push_back(current);
      return;
    }
    for (std::size_t b = 0; b < current.size(); ++b) {
      current[b].push_back(next);
      self(self, next + 1);
      current[b].pop_back();
    }
    current.push_back({next});
    self(self, next + 1);
    current.pop_back();
  };
  recurse(recurse, 0);

  std::vector<banpar::PartitionedOrder> orders;
  for (const auto& partition : set_partitions) {
    // odometer over per-block permutations
    std::vector<std::vector<std::vector<std::uint32_t>>> perms(partition.size());
    for (std::size_t b = 0; b < partition.size(); ++b) {
      std::vector<std::uint32_t> p = partition[b];
      std::sort(p.begin(), p.end());
      do {
        perms[b].push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
    }
    std::vector<std::size_t> pick(partition.size(), 0);
    for (;;) {
      banpar::PartitionedOrder mu;
      for (std::size_t b = 0; b < partition.size(); ++b) mu.oblocks.push_back(perms[b][pick[b]]);
      orders.push_back(std::move(mu));
      std::size_t b = 0;
      while (b < pick.size() && ++pick[b] == perms[b].size()) pick[b++] = 0;
      if (b == pick.size()) break;
    }
  }
  return orders;
}

// Independent sequentialization: lcm of sizes, block i collects the
// ((i-1 mod s)+1)-th element of each o-block. Blocks as sorted sets.
inline std::vector<std::vector<std::uint32_t>> oracle_phi(const banpar::PartitionedOrder& mu) {
  std::uint64_t steps = 1;
  for (const auto& b : mu.oblocks) steps = std::lcm(steps, b.size());
  std::vector<std::vector<std::uint32_t>> phi(steps);
  for (std::uint64_t i = 1; i <= steps; ++i) {
    std::set<std::uint32_t> w;
    for (const auto& b : mu.oblocks) w.insert(b[(i - 1) % b.size()]);
    phi[i - 1].assign(w.begin(), w.end());
  }
  return phi;
}

// Random truth-table network with up to max_inputs inputs per rule.
inline banpar::TruthTableNetwork random_network(std::mt19937& rng, std::uint32_t n,
                                                std::uint32_t max_inputs) {
  banpar::TruthTableNetwork net;
  net.n = n;
  std::uniform_int_distribution<std::uint32_t> arity(0, std::min(max_inputs, n));
  std::uniform_int_distribution<std::uint32_t> automaton(0, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::uint32_t i = 0; i < n; ++i) {
    banpar::TruthTableRule r;
    std::set<std::uint32_t> inputs;
    const std::uint32_t want = arity(rng);
    while (inputs.size() < want) inputs.insert(automaton(rng));
    r.inputs.assign(inputs.begin(), inputs.end());
    std::shuffle(r.inputs.begin(), r.inputs.end(), rng);
    r.table.resize(std::size_t{1} << r.inputs.size());
    for (auto& bit : r.table) bit = static_cast<std::uint8_t>(coin(rng));
    net.rules.push_back(std::move(r));
  }
  return net;
}

// Random unary network; may include constants and negations when allowed.
inline banpar::AffineUnaryNetwork random_unary_network(std::mt19937& rng, std::uint32_t n,
                                                       bool allow_constants) {
  banpar::AffineUnaryNetwork net;
  std::uniform_int_distribution<std::uint32_t> automaton(0, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> kind(0, allow_constants ? 3 : 1);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (kind(rng) == 3)
      net.rules.push_back(banpar::AffineUnaryRule::constant(coin(rng) != 0));
    else
      net.rules.push_back(banpar::AffineUnaryRule::link(
          automaton(rng), coin(rng) ? banpar::Sign::negative : banpar::Sign::positive));
  }
  return net;
}

// Random ordered partition of {0..n-1}.
inline banpar::BlockSequence random_ordered_partition(std::mt19937& rng, std::uint32_t n) {
  std::vector<std::uint32_t> automata(n);
  std::iota(automata.begin(), automata.end(), 0);
  std::shuffle(automata.begin(), automata.end(), rng);
  banpar::BlockSequence bs;
  bs.n = n;
  std::size_t at = 0;
  while (at < automata.size()) {
    std::uniform_int_distribution<std::size_t> len(1, automata.size() - at);
    const std::size_t take = len(rng);
    bs.blocks.emplace_back(automata.begin() + at, automata.begin() + at + take);
    std::sort(bs.blocks.back().begin(), bs.blocks.back().end());
    at += take;
  }
  return bs;
}

}  // namespace testutil
