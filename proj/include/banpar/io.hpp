#pragma once

#include <string>
#include <string_view>

#include "banpar/network.hpp"

namespace banpar {

/// Parses the network file format:
/// {"n": int, "rules": [{"inputs": [int,...], "table": [0|1,...]}, ...]}
TruthTableNetwork network_from_json(std::string_view text);

std::string network_to_json(const TruthTableNetwork& net);

/// Resolves a network spec: a builtin constructor "pos-cycle:N",
/// "neg-cycle:N" or "hhat:N", else a path to a network JSON file.
TruthTableNetwork load_network(const std::string& spec);

/// DOT rendering, one line per arc; labels "+", "-", or "pm" for
/// non-monotone dependencies.
std::string to_dot(const InteractionGraph& graph);

}  // namespace banpar
