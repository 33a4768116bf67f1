#include "banpar/fixedpoints.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace banpar {

std::uint32_t ComponentReport::cycle_count() const {
  std::uint32_t c = 0;
  for (const auto& comp : components) c += comp.cycle_length > 0;
  return c;
}

std::uint32_t ComponentReport::positive_cycle_count() const {
  std::uint32_t c = 0;
  for (const auto& comp : components)
    c += comp.cycle_length > 0 && comp.cycle_sign == Sign::positive;
  return c;
}

bool ComponentReport::has_negative_cycle() const {
  return std::any_of(components.begin(), components.end(), [](const ComponentInfo& comp) {
    return comp.cycle_length > 0 && comp.cycle_sign == Sign::negative;
  });
}

ComponentReport cycle_census(const AffineUnaryNetwork& net) {
  net.validate();
  const std::uint32_t n = net.size();
  // Union arcs (i -> source) to get the weak components, then walk each
  // component's functional chain once to find its cycle.
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::uint32_t i = 0; i < n; ++i)
    if (net.rules[i].is_link()) parent[find(i)] = find(net.rules[i].source);

  std::vector<std::uint32_t> comp_id(n, 0);
  ComponentReport report;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (find(i) == i) {
      comp_id[i] = report.component_count++;
      report.components.push_back({});
    }
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    ComponentInfo& comp = report.components[comp_id[find(i)]];
    ++comp.vertex_count;
    if (net.rules[i].is_constant()) comp.has_constant = true;
  }

  // Walk from each root until a vertex repeats; with in-degree <= 1 per
  // vertex the chain either loops (the component's unique cycle) or stops
  // at a constant.
  std::vector<std::uint32_t> visited_at(n, n);  // n = unvisited
  for (std::uint32_t root = 0; root < n; ++root) {
    if (find(root) != root || report.components[comp_id[root]].has_constant) continue;
    std::uint32_t v = root, step = 0;
    while (visited_at[v] == n) {
      visited_at[v] = step++;
      v = net.rules[v].source;
    }
    ComponentInfo& comp = report.components[comp_id[root]];
    comp.cycle_length = step - visited_at[v];
    // sign = product of arc signs around the cycle
    bool negative = false;
    std::uint32_t w = v;
    do {
      negative = negative != net.rules[w].negated();
      w = net.rules[w].source;
    } while (w != v);
    comp.cycle_sign = negative ? Sign::negative : Sign::positive;
  }
  return report;
}

FixedPointCount count_fixed_points_unary(const AffineUnaryNetwork& net) {
  const ComponentReport report = cycle_census(net);
  return {report.positive_cycle_count(), report.has_negative_cycle()};
}

std::vector<std::uint64_t> brute_force_fixed_point_codes(const TruthTableNetwork& net,
                                                         const BlockSequence& sched,
                                                         std::uint32_t guard) {
  net.validate();
  if (sched.n != net.n)
    throw std::invalid_argument("schedule is for size " + std::to_string(sched.n) +
                                ", network has size " + std::to_string(net.n));
  sched.validate();
  if (net.n > guard)
    throw std::invalid_argument("refusing 2^" + std::to_string(net.n) +
                                " configuration sweep (guard is " + std::to_string(guard) + ")");
  std::vector<std::uint64_t> fixed;
  const std::uint64_t count = std::uint64_t{1} << net.n;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t y = code;
    for (const auto& block : sched.blocks) y = apply_block_code(net, block, y);
    if (y == code) fixed.push_back(code);
  }
  return fixed;
}

std::vector<Configuration> brute_force_fixed_points(const TruthTableNetwork& net,
                                                    const BlockSequence& sched,
                                                    std::uint32_t guard) {
  std::vector<Configuration> out;
  for (std::uint64_t code : brute_force_fixed_point_codes(net, sched, guard))
    out.push_back(Configuration::from_uint(net.n, code));
  return out;
}

bool check_bs_invariance(const TruthTableNetwork& net, const BlockSequence& bs,
                         std::uint32_t guard) {
  if (!bs.is_ordered_partition())
    throw std::invalid_argument("block-sequential check requires an ordered partition");
  BlockSequence parallel;
  parallel.n = net.n;
  parallel.blocks.push_back(std::vector<std::uint32_t>(net.n));
  std::iota(parallel.blocks[0].begin(), parallel.blocks[0].end(), 0);
  return brute_force_fixed_point_codes(net, bs, guard) ==
         brute_force_fixed_point_codes(net, parallel, guard);
}

}  // namespace banpar
