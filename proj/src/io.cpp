#include "banpar/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "banpar/families.hpp"

namespace banpar {

TruthTableNetwork network_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("network JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("rules"))
    throw std::invalid_argument("network JSON must be an object with \"n\" and \"rules\"");
  TruthTableNetwork net;
  net.n = j.at("n").get<std::uint32_t>();
  for (const auto& rule : j.at("rules")) {
    TruthTableRule r;
    for (const auto& input : rule.at("inputs")) r.inputs.push_back(input.get<std::uint32_t>());
    for (const auto& bit : rule.at("table")) {
      const int v = bit.get<int>();
      if (v != 0 && v != 1) throw std::invalid_argument("network JSON: table entries must be 0 or 1");
      r.table.push_back(static_cast<std::uint8_t>(v));
    }
    net.rules.push_back(std::move(r));
  }
  net.validate();
  return net;
}

std::string network_to_json(const TruthTableNetwork& net) {
  nlohmann::ordered_json j;
  j["n"] = net.n;
  nlohmann::ordered_json rules = nlohmann::ordered_json::array();
  for (const TruthTableRule& r : net.rules) {
    nlohmann::ordered_json rule;
    rule["inputs"] = r.inputs;
    rule["table"] = nlohmann::ordered_json::array();
    for (std::uint8_t bit : r.table) rule["table"].push_back(static_cast<int>(bit));
    rules.push_back(std::move(rule));
  }
  j["rules"] = std::move(rules);
  return j.dump();
}

namespace {

std::uint32_t parse_spec_size(const std::string& spec, std::size_t colon) {
  const std::string num = spec.substr(colon + 1);
  if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("network spec \"" + spec + "\": expected a size after ':'");
  const unsigned long v = std::stoul(num);
  if (v == 0 || v > 1'000'000) throw std::invalid_argument("network spec \"" + spec + "\": bad size");
  return static_cast<std::uint32_t>(v);
}

}  // namespace

TruthTableNetwork load_network(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon);
    if (kind == "pos-cycle") return to_truth_tables(positive_cycle(parse_spec_size(spec, colon)));
    if (kind == "neg-cycle") return to_truth_tables(negative_cycle(parse_spec_size(spec, colon)));
    if (kind == "hhat") return to_truth_tables(hhat(parse_spec_size(spec, colon)));
  }
  std::ifstream in(spec);
  if (!in)
    throw std::invalid_argument("network spec \"" + spec +
                                "\" is neither a builtin (pos-cycle:N, neg-cycle:N, hhat:N) nor a "
                                "readable file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return network_from_json(buf.str());
}

std::string to_dot(const InteractionGraph& graph) {
  std::string out = "digraph interaction {\n";
  for (const Arc& arc : graph.arcs) {
    const char* label = arc.sign == ArcSign::positive  ? "+"
                        : arc.sign == ArcSign::negative ? "-"
                                                        : "pm";
    out += "  " + std::to_string(arc.source) + " -> " + std::to_string(arc.target) + " [label=\"" +
           label + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace banpar
