#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace banpar {

/// Sign of a dependency: does the target follow or oppose the source?
enum class Sign : std::uint8_t { positive, negative };

/// One Boolean state per automaton; index i holds the state x_i.
class Configuration {
public:
  Configuration() = default;
  explicit Configuration(std::uint32_t n) : bits_(n, 0) {}

  /// Decode from an unsigned integer, bit i of `code` becoming x_i.
  static Configuration from_uint(std::uint32_t n, std::uint64_t code);

  /// Parse a bitstring such as "01011"; the leftmost character is x_0.
  static Configuration parse(std::string_view text);

  std::uint32_t size() const { return static_cast<std::uint32_t>(bits_.size()); }
  bool bit(std::uint32_t i) const { return bits_[i] != 0; }
  void set_bit(std::uint32_t i, bool v) { bits_[i] = v ? 1 : 0; }

  /// Encode as an unsigned integer with bit i = x_i. Requires size() <= 64.
  std::uint64_t to_uint() const;

  /// Bitstring with x_0 first, e.g. "00111".
  std::string to_string() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

private:
  std::vector<std::uint8_t> bits_;
};

/// Local rule from the affine unary class: constant 0/1, x_j, or not x_j.
struct AffineUnaryRule {
  enum class Kind : std::uint8_t { constant, link };

  Kind kind = Kind::constant;
  std::uint32_t source = 0;  // link rules only
  bool bit = false;          // constant: the value; link: true iff negated

  static AffineUnaryRule constant(bool value) { return {Kind::constant, 0, value}; }
  static AffineUnaryRule link(std::uint32_t source, Sign sign) {
    return {Kind::link, source, sign == Sign::negative};
  }

  bool is_constant() const { return kind == Kind::constant; }
  bool is_link() const { return kind == Kind::link; }
  bool constant_value() const { return bit; }
  bool negated() const { return bit; }
  Sign sign() const { return bit ? Sign::negative : Sign::positive; }

  /// "0", "1", "x3", "!x3"
  std::string to_string() const;

  friend bool operator==(const AffineUnaryRule&, const AffineUnaryRule&) = default;
};

/// Network whose local functions are all affine unary. Closed under
/// parallelization, which makes it the engine representation.
struct AffineUnaryNetwork {
  std::vector<AffineUnaryRule> rules;

  std::uint32_t size() const { return static_cast<std::uint32_t>(rules.size()); }

  /// Network with rule i = x_i everywhere.
  static AffineUnaryNetwork identity(std::uint32_t n);

  /// Throws std::invalid_argument if a link source is out of range.
  void validate() const;

  friend bool operator==(const AffineUnaryNetwork&, const AffineUnaryNetwork&) = default;
};

/// General local function as a truth table over an ordered input list.
/// Table entries are indexed by the input states read as a binary number,
/// inputs[0] most significant.
struct TruthTableRule {
  std::vector<std::uint32_t> inputs;
  std::vector<std::uint8_t> table;  // size 2^|inputs|, entries 0/1

  friend bool operator==(const TruthTableRule&, const TruthTableRule&) = default;
};

/// Ground-truth representation of a Boolean automata network.
struct TruthTableNetwork {
  std::uint32_t n = 0;
  std::vector<TruthTableRule> rules;

  /// Throws std::invalid_argument on bad input indices or table sizes.
  void validate() const;

  friend bool operator==(const TruthTableNetwork&, const TruthTableNetwork&) = default;
};

/// Arc sign in an interaction graph; non_monotone marks an essential
/// dependency that is neither nondecreasing nor nonincreasing.
enum class ArcSign : std::uint8_t { positive, negative, non_monotone };

struct Arc {
  std::uint32_t source = 0;
  std::uint32_t target = 0;
  ArcSign sign = ArcSign::positive;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Digraph with an arc j -> i whenever f_i essentially depends on x_j.
struct InteractionGraph {
  std::uint32_t n = 0;
  std::vector<Arc> arcs;  // sorted by (source, target)

  friend bool operator==(const InteractionGraph&, const InteractionGraph&) = default;
};

/// Evaluates local function i on configuration x.
bool evaluate_rule(const TruthTableNetwork& net, std::uint32_t i, const Configuration& x);

/// Same, on the packed integer encoding of x (bit a = x_a).
bool evaluate_rule_code(const TruthTableNetwork& net, std::uint32_t i, std::uint64_t code);

/// Synchronously updates the automata in `block`, leaving the rest alone.
Configuration apply_block(const TruthTableNetwork& net, std::span<const std::uint32_t> block,
                          const Configuration& x);

/// Packed-encoding variant of apply_block.
std::uint64_t apply_block_code(const TruthTableNetwork& net, std::span<const std::uint32_t> block,
                               std::uint64_t code);

/// Synchronous application of a unary network to a packed configuration.
std::uint64_t evaluate_code(const AffineUnaryNetwork& net, std::uint64_t code);

/// Interaction graph with essential dependencies only. For truth-table rules
/// essentiality and monotonicity are decided by scanning every table pair
/// that differs in exactly one input.
InteractionGraph interaction_graph(const TruthTableNetwork& net);
InteractionGraph interaction_graph(const AffineUnaryNetwork& net);

/// Equivalent unary network, if every rule has at most one essential
/// variable. Otherwise returns nullopt and stores the offending automaton
/// in *offender (when given).
std::optional<AffineUnaryNetwork> affine_unary_view(const TruthTableNetwork& net,
                                                    std::uint32_t* offender = nullptr);

/// Canonical truth-table encoding of a unary network.
TruthTableNetwork to_truth_tables(const AffineUnaryNetwork& net);

}  // namespace banpar
