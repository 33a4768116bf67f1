#include "banpar/network.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace banpar {

Configuration Configuration::from_uint(std::uint32_t n, std::uint64_t code) {
  if (n < 64 && code >= (std::uint64_t{1} << n))
    throw std::invalid_argument("configuration code does not fit in " + std::to_string(n) + " bits");
  Configuration x(n);
  for (std::uint32_t i = 0; i < n && i < 64; ++i) x.bits_[i] = (code >> i) & 1u;
  return x;
}

Configuration Configuration::parse(std::string_view text) {
  Configuration x(static_cast<std::uint32_t>(text.size()));
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1')
      throw std::invalid_argument("configuration bitstring must contain only 0 and 1");
    x.bits_[i] = text[i] == '1';
  }
  return x;
}

std::uint64_t Configuration::to_uint() const {
  if (size() > 64) throw std::invalid_argument("configuration too long for integer encoding");
  std::uint64_t code = 0;
  for (std::uint32_t i = 0; i < size(); ++i)
    if (bits_[i]) code |= std::uint64_t{1} << i;
  return code;
}

std::string Configuration::to_string() const {
  std::string s(size(), '0');
  for (std::uint32_t i = 0; i < size(); ++i)
    if (bits_[i]) s[i] = '1';
  return s;
}

std::string AffineUnaryRule::to_string() const {
  if (is_constant()) return bit ? "1" : "0";
  return (bit ? "!x" : "x") + std::to_string(source);
}

AffineUnaryNetwork AffineUnaryNetwork::identity(std::uint32_t n) {
  AffineUnaryNetwork net;
  net.rules.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) net.rules.push_back(AffineUnaryRule::link(i, Sign::positive));
  return net;
}

void AffineUnaryNetwork::validate() const {
  for (std::uint32_t i = 0; i < size(); ++i)
    if (rules[i].is_link() && rules[i].source >= size())
      throw std::invalid_argument("rule " + std::to_string(i) + " links to automaton " +
                                  std::to_string(rules[i].source) + " out of range");
}

void TruthTableNetwork::validate() const {
  if (rules.size() != n) throw std::invalid_argument("network has " + std::to_string(rules.size()) +
                                                     " rules for size " + std::to_string(n));
  for (std::uint32_t i = 0; i < n; ++i) {
    const TruthTableRule& r = rules[i];
    if (r.inputs.size() > n)
      throw std::invalid_argument("rule " + std::to_string(i) + " declares more inputs than automata");
    for (std::uint32_t j : r.inputs)
      if (j >= n)
        throw std::invalid_argument("rule " + std::to_string(i) + " input " + std::to_string(j) +
                                    " out of range");
    if (r.inputs.size() >= 32 || r.table.size() != (std::size_t{1} << r.inputs.size()))
      throw std::invalid_argument("rule " + std::to_string(i) + " table size must be 2^|inputs|");
  }
}

bool evaluate_rule(const TruthTableNetwork& net, std::uint32_t i, const Configuration& x) {
  if (i >= net.n) throw std::invalid_argument("automaton index out of range");
  if (x.size() != net.n) throw std::invalid_argument("configuration length does not match network size");
  const TruthTableRule& r = net.rules[i];
  std::size_t idx = 0;
  for (std::uint32_t j : r.inputs) idx = (idx << 1) | (x.bit(j) ? 1u : 0u);
  return r.table[idx] != 0;
}

bool evaluate_rule_code(const TruthTableNetwork& net, std::uint32_t i, std::uint64_t code) {
  const TruthTableRule& r = net.rules[i];
  std::size_t idx = 0;
  for (std::uint32_t j : r.inputs) idx = (idx << 1) | ((code >> j) & 1u);
  return r.table[idx] != 0;
}

Configuration apply_block(const TruthTableNetwork& net, std::span<const std::uint32_t> block,
                          const Configuration& x) {
  Configuration y = x;
  for (std::uint32_t i : block) y.set_bit(i, evaluate_rule(net, i, x));
  return y;
}

std::uint64_t apply_block_code(const TruthTableNetwork& net, std::span<const std::uint32_t> block,
                               std::uint64_t code) {
  std::uint64_t out = code;
  for (std::uint32_t i : block) {
    const std::uint64_t mask = std::uint64_t{1} << i;
    if (evaluate_rule_code(net, i, code))
      out |= mask;
    else
      out &= ~mask;
  }
  return out;
}

std::uint64_t evaluate_code(const AffineUnaryNetwork& net, std::uint64_t code) {
  std::uint64_t out = 0;
  for (std::uint32_t i = 0; i < net.size(); ++i) {
    const AffineUnaryRule& r = net.rules[i];
    const bool v = r.is_constant() ? r.constant_value() : (((code >> r.source) & 1u) != 0) != r.negated();
    if (v) out |= std::uint64_t{1} << i;
  }
  return out;
}

namespace {

// Essentiality and monotonicity of declared input at position `pos`, by
// scanning all table index pairs that differ only in that input.
struct InputEffect {
  bool essential = false;
  bool can_increase = false;  // some pair with f(j=0)=0, f(j=1)=1
  bool can_decrease = false;  // some pair with f(j=0)=1, f(j=1)=0
};

InputEffect input_effect(const TruthTableRule& r, std::size_t pos) {
  InputEffect e;
  const std::size_t bits = r.inputs.size();
  const std::size_t hi = std::size_t{1} << (bits - 1 - pos);  // inputs[0] most significant
  for (std::size_t idx = 0; idx < r.table.size(); ++idx) {
    if (idx & hi) continue;
    const bool f0 = r.table[idx] != 0;
    const bool f1 = r.table[idx | hi] != 0;
    if (f0 != f1) {
      e.essential = true;
      (f1 ? e.can_increase : e.can_decrease) = true;
    }
  }
  return e;
}

ArcSign effect_sign(const InputEffect& e) {
  assert(e.essential);
  if (e.can_increase && e.can_decrease) return ArcSign::non_monotone;
  return e.can_increase ? ArcSign::positive : ArcSign::negative;
}

}  // namespace

InteractionGraph interaction_graph(const TruthTableNetwork& net) {
  net.validate();
  InteractionGraph g{net.n, {}};
  for (std::uint32_t i = 0; i < net.n; ++i) {
    const TruthTableRule& r = net.rules[i];
    for (std::size_t pos = 0; pos < r.inputs.size(); ++pos) {
      const InputEffect e = input_effect(r, pos);
      if (e.essential) g.arcs.push_back({r.inputs[pos], i, effect_sign(e)});
    }
  }
  std::sort(g.arcs.begin(), g.arcs.end());
  return g;
}

InteractionGraph interaction_graph(const AffineUnaryNetwork& net) {
  net.validate();
  InteractionGraph g{net.size(), {}};
  for (std::uint32_t i = 0; i < net.size(); ++i) {
    const AffineUnaryRule& r = net.rules[i];
    if (r.is_link())
      g.arcs.push_back({r.source, i, r.negated() ? ArcSign::negative : ArcSign::positive});
  }
  std::sort(g.arcs.begin(), g.arcs.end());
  return g;
}

std::optional<AffineUnaryNetwork> affine_unary_view(const TruthTableNetwork& net,
                                                    std::uint32_t* offender) {
  net.validate();
  AffineUnaryNetwork out;
  out.rules.reserve(net.n);
  for (std::uint32_t i = 0; i < net.n; ++i) {
    const TruthTableRule& r = net.rules[i];
    std::optional<std::size_t> essential_pos;
    for (std::size_t pos = 0; pos < r.inputs.size(); ++pos) {
      if (!input_effect(r, pos).essential) continue;
      if (essential_pos) {
        if (offender) *offender = i;
        return std::nullopt;
      }
      essential_pos = pos;
    }
    if (!essential_pos) {
      out.rules.push_back(AffineUnaryRule::constant(r.table[0] != 0));
    } else {
      // With one essential input the rule is x_j or !x_j; read the
      // polarity off any pair, here the all-zeros row.
      const InputEffect e = input_effect(r, *essential_pos);
      out.rules.push_back(AffineUnaryRule::link(
          r.inputs[*essential_pos], e.can_increase ? Sign::positive : Sign::negative));
    }
  }
  return out;
}

TruthTableNetwork to_truth_tables(const AffineUnaryNetwork& net) {
  net.validate();
  TruthTableNetwork out;
  out.n = net.size();
  out.rules.reserve(out.n);
  for (const AffineUnaryRule& r : net.rules) {
    TruthTableRule t;
    if (r.is_constant()) {
      t.table = {static_cast<std::uint8_t>(r.constant_value() ? 1 : 0)};
    } else {
      t.inputs = {r.source};
      t.table = r.negated() ? std::vector<std::uint8_t>{1, 0} : std::vector<std::uint8_t>{0, 1};
    }
    out.rules.push_back(std::move(t));
  }
  return out;
}

}  // namespace banpar
