#include "banpar/parallelize.hpp"

#include <stdexcept>
#include <utility>

namespace banpar {

namespace {

// f_i applied on top of the current substep network g: for a link rule the
// result is g[source] with the sign folded in; constants pass through
// (negated by a negative link).
AffineUnaryRule compose(const AffineUnaryRule& f_i, const AffineUnaryNetwork& g) {
  if (f_i.is_constant()) return f_i;
  AffineUnaryRule r = g.rules[f_i.source];
  r.bit = r.bit != f_i.negated();
  return r;
}

void advance_substep(const AffineUnaryNetwork& net, const std::vector<std::uint32_t>& block,
                     AffineUnaryNetwork& g, std::vector<AffineUnaryRule>& scratch) {
  scratch.clear();
  for (std::uint32_t i : block) scratch.push_back(compose(net.rules[i], g));
  for (std::size_t m = 0; m < block.size(); ++m) g.rules[block[m]] = scratch[m];
}

void check_inputs(const AffineUnaryNetwork& net, const BlockSequence& sched) {
  net.validate();
  if (sched.n != net.size())
    throw std::invalid_argument("schedule is for size " + std::to_string(sched.n) +
                                ", network has size " + std::to_string(net.size()));
  sched.validate();
}

}  // namespace

AffineUnaryNetwork parallelize_unary(const AffineUnaryNetwork& net, const BlockSequence& sched) {
  check_inputs(net, sched);
  AffineUnaryNetwork g = AffineUnaryNetwork::identity(net.size());
  std::vector<AffineUnaryRule> scratch;
  for (const auto& block : sched.blocks) advance_substep(net, block, g, scratch);
  return g;
}

std::vector<AffineUnaryNetwork> substep_trace(const AffineUnaryNetwork& net,
                                              const BlockSequence& sched) {
  check_inputs(net, sched);
  std::vector<AffineUnaryNetwork> trace;
  trace.reserve(sched.blocks.size() + 1);
  trace.push_back(AffineUnaryNetwork::identity(net.size()));
  std::vector<AffineUnaryRule> scratch;
  for (const auto& block : sched.blocks) {
    AffineUnaryNetwork g = trace.back();
    advance_substep(net, block, g, scratch);
    trace.push_back(std::move(g));
  }
  return trace;
}

TransitionMap parallelize_brute(const TruthTableNetwork& net, const BlockSequence& sched,
                                std::uint32_t guard) {
  net.validate();
  if (sched.n != net.n)
    throw std::invalid_argument("schedule is for size " + std::to_string(sched.n) +
                                ", network has size " + std::to_string(net.n));
  sched.validate();
  if (net.n > guard)
    throw std::invalid_argument("refusing 2^" + std::to_string(net.n) +
                                " configuration sweep (guard is " + std::to_string(guard) + ")");
  TransitionMap map;
  map.n = net.n;
  map.next.resize(std::size_t{1} << net.n);
  for (std::uint64_t code = 0; code < map.next.size(); ++code) {
    std::uint64_t y = code;
    for (const auto& block : sched.blocks) y = apply_block_code(net, block, y);
    map.next[code] = static_cast<std::uint32_t>(y);
  }
  return map;
}

}  // namespace banpar
