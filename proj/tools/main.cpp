// banpar: Boolean automata networks under block-parallel update schedules.
//
// Subcommands: census, enumerate, parallelize, fixed-points, family.
// Exit code 0 on success, 2 on usage errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "banpar/census.hpp"
#include "banpar/families.hpp"
#include "banpar/fixedpoints.hpp"
#include "banpar/io.hpp"
#include "banpar/network.hpp"
#include "banpar/parallelize.hpp"
#include "banpar/schedule.hpp"

#include <json.hpp>

namespace {

constexpr const char* kThreadsEnv = "BANPAR_THREADS";

unsigned default_threads() {
  if (const char* env = std::getenv(kThreadsEnv)) {
    const unsigned long v = std::strtoul(env, nullptr, 10);
    if (v > 0 && v < 4096) return static_cast<unsigned>(v);
  }
  return 0;  // library default: hardware concurrency
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file " + path);
  out << content;
}

banpar::AffineUnaryNetwork load_unary(const std::string& spec) {
  const banpar::TruthTableNetwork net = banpar::load_network(spec);
  std::uint32_t offender = 0;
  auto unary = banpar::affine_unary_view(net, &offender);
  if (!unary)
    throw std::invalid_argument("network rule " + std::to_string(offender) +
                                " has more than one essential input; only unary networks can be "
                                "parallelized symbolically");
  return *unary;
}

void print_rules(const banpar::AffineUnaryNetwork& net, const std::string& indent) {
  for (std::uint32_t i = 0; i < net.size(); ++i)
    std::cout << indent << i << ": " << net.rules[i].to_string() << "\n";
}

int run_census(const std::vector<std::uint32_t>& sizes, unsigned threads, const std::string& format,
               const std::string& out_path, bool witness) {
  banpar::CensusOptions options;
  options.threads = threads;
  options.collect_witnesses = witness;
  options.progress = [](std::uint64_t done, double secs) {
    std::cerr << "census: " << done << " schedules, "
              << static_cast<std::uint64_t>(done / (secs > 0 ? secs : 1.0)) << "/s\n";
  };
  std::vector<banpar::CycleCensus> results;
  for (std::uint32_t n : sizes) results.push_back(banpar::census(n, options));
  const std::string report = format == "json" ? banpar::census_report_json(results)
                                              : banpar::census_report_csv(results);
  write_output(out_path, format == "json" ? report + "\n" : report);
  return 0;
}

int run_enumerate(std::uint32_t n, std::uint64_t limit) {
  std::uint64_t emitted = 0;
  banpar::visit_representatives(n, [&](const banpar::AssignmentView& view) {
    std::cout << banpar::format_partitioned_order(banpar::realize(view.materialize())) << "\n";
    ++emitted;
    return limit == 0 || emitted < limit;
  });
  return 0;
}

int run_parallelize(const std::string& network_spec, const std::string& schedule_text, bool trace,
                    const std::string& dot_path) {
  const banpar::AffineUnaryNetwork net = load_unary(network_spec);
  const banpar::PartitionedOrder mu = banpar::parse_partitioned_order(schedule_text);
  if (mu.size() != net.size())
    throw std::invalid_argument("schedule covers " + std::to_string(mu.size()) +
                                " automata, network has " + std::to_string(net.size()));
  const banpar::BlockSequence phi = banpar::sequentialize(mu);
  if (trace) {
    const auto steps = banpar::substep_trace(net, phi);
    for (std::size_t s = 0; s < steps.size(); ++s) {
      std::cout << "substep " << s << "\n";
      print_rules(steps[s], "  ");
    }
  }
  const banpar::AffineUnaryNetwork result = banpar::parallelize_unary(net, phi);
  if (!trace) print_rules(result, "");
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw std::invalid_argument("cannot open DOT file " + dot_path);
    out << banpar::to_dot(banpar::interaction_graph(result));
  }
  return 0;
}

int run_fixed_points(const std::string& network_spec, const std::string& schedule_text,
                     const std::string& method, const std::string& format) {
  const banpar::PartitionedOrder mu = banpar::parse_partitioned_order(schedule_text);
  const banpar::BlockSequence phi = banpar::sequentialize(mu);
  nlohmann::ordered_json j;
  std::string text;
  if (method == "unary") {
    const banpar::AffineUnaryNetwork net = load_unary(network_spec);
    if (mu.size() != net.size())
      throw std::invalid_argument("schedule covers " + std::to_string(mu.size()) +
                                  " automata, network has " + std::to_string(net.size()));
    const banpar::FixedPointCount count =
        banpar::count_fixed_points_unary(banpar::parallelize_unary(net, phi));
    j["c"] = count.exponent;
    if (auto v = count.value())
      j["count"] = *v;
    else
      j["count"] = "2^" + std::to_string(count.exponent);
    text = "c: " + std::to_string(count.exponent) + "\ncount: " + j["count"].dump() + "\n";
  } else {
    const banpar::TruthTableNetwork net = banpar::load_network(network_spec);
    if (mu.size() != net.n)
      throw std::invalid_argument("schedule covers " + std::to_string(mu.size()) +
                                  " automata, network has " + std::to_string(net.n));
    const auto fixed = banpar::brute_force_fixed_points(net, phi);
    j["count"] = fixed.size();
    auto list = nlohmann::ordered_json::array();
    text = "count: " + std::to_string(fixed.size()) + "\n";
    for (const auto& x : fixed) {
      list.push_back(x.to_string());
      text += x.to_string() + "\n";
    }
    j["fixed_points"] = std::move(list);
  }
  if (format == "json")
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean automata networks under block-parallel update schedules"};
  app.require_subcommand(1);

  // census
  auto* census_cmd = app.add_subcommand(
      "census", "Exhaustive cycle census of all representative schedules on the positive cycle");
  std::vector<std::uint32_t> census_sizes;
  unsigned census_threads = default_threads();
  std::string census_format = "csv", census_out;
  bool census_witness = false;
  census_cmd->add_option("--n", census_sizes, "Cycle size(s), 1..14")->required()
      ->check(CLI::Range(1u, 14u));
  census_cmd->add_option("--threads", census_threads,
                         std::string("Worker count (default: $") + kThreadsEnv +
                             " or hardware concurrency)");
  census_cmd->add_option("--format", census_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  census_cmd->add_option("--out", census_out, "Write the report to a file instead of stdout");
  census_cmd->add_flag("--witness", census_witness,
                       "Record one example schedule per cycle-count bin");

  // enumerate
  auto* enum_cmd = app.add_subcommand(
      "enumerate", "List the canonical representative schedules of size n, one per line");
  std::uint32_t enum_n = 0;
  std::uint64_t enum_limit = 0;
  enum_cmd->add_option("--n", enum_n, "Number of automata")->required()->check(CLI::Range(1u, 14u));
  enum_cmd->add_option("--limit", enum_limit, "Stop after this many schedules (0 = all)");

  // parallelize
  auto* par_cmd =
      app.add_subcommand("parallelize", "Compute the parallelization of a unary network");
  std::string par_network, par_schedule, par_dot;
  bool par_trace = false;
  par_cmd->add_option("--network", par_network,
                      "Builtin spec (pos-cycle:N, neg-cycle:N, hhat:N) or network JSON file")
      ->required();
  par_cmd->add_option("--schedule", par_schedule, "Partitioned order, e.g. \"{(0,1),(2,3,4)}\"")
      ->required();
  par_cmd->add_flag("--trace", par_trace, "Print every substep network");
  par_cmd->add_option("--dot", par_dot, "Write the parallelized interaction graph as DOT");

  // fixed-points
  auto* fp_cmd = app.add_subcommand("fixed-points", "Count or list fixed points under a schedule");
  std::string fp_network, fp_schedule, fp_method, fp_format = "text";
  fp_cmd->add_option("--network", fp_network, "Network spec or JSON file")->required();
  fp_cmd->add_option("--schedule", fp_schedule, "Partitioned order")->required();
  fp_cmd->add_option("--method", fp_method, "unary: 2^c via cycle structure; brute: 2^n sweep")
      ->required()
      ->check(CLI::IsMember({"unary", "brute"}));
  fp_cmd->add_option("--format", fp_format, "Output format")->check(CLI::IsMember({"text", "json"}));

  // family
  auto* family_cmd = app.add_subcommand("family", "Print a named network or schedule family");
  family_cmd->require_subcommand(1);
  std::uint32_t fam_k = 0, fam_n = 0;
  std::string fam_variant = "standard";
  auto* mu_odd_cmd = family_cmd->add_subcommand("mu-odd", "Schedule with k cycles on size 2k+1");
  mu_odd_cmd->add_option("--k", fam_k, "k >= 2")->required();
  auto* mu_even_cmd = family_cmd->add_subcommand("mu-even", "Schedule with k-1 cycles on size 2k");
  mu_even_cmd->add_option("--k", fam_k, "k >= 4")->required();
  auto* mu_hat_cmd = family_cmd->add_subcommand("mu-hat", "Schedule paired with hhat");
  mu_hat_cmd->add_option("--n", fam_n, "n >= 1")->required();
  mu_hat_cmd->add_option("--variant", fam_variant, "standard or positive")
      ->check(CLI::IsMember({"standard", "positive"}));
  auto* pos_cmd = family_cmd->add_subcommand("pos-cycle", "Positive cycle network JSON");
  pos_cmd->add_option("--n", fam_n, "n >= 1")->required();
  auto* neg_cmd = family_cmd->add_subcommand("neg-cycle", "Negative cycle network JSON");
  neg_cmd->add_option("--n", fam_n, "n >= 1")->required();
  auto* hhat_cmd = family_cmd->add_subcommand("hhat", "Cycle-plus-constants network JSON");
  hhat_cmd->add_option("--n", fam_n, "n >= 1")->required();
  hhat_cmd->add_option("--variant", fam_variant, "standard or positive")
      ->check(CLI::IsMember({"standard", "positive"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (census_cmd->parsed())
      return run_census(census_sizes, census_threads, census_format, census_out, census_witness);
    if (enum_cmd->parsed()) return run_enumerate(enum_n, enum_limit);
    if (par_cmd->parsed()) return run_parallelize(par_network, par_schedule, par_trace, par_dot);
    if (fp_cmd->parsed()) return run_fixed_points(fp_network, fp_schedule, fp_method, fp_format);
    if (family_cmd->parsed()) {
      const banpar::HhatVariant variant = fam_variant == "positive"
                                              ? banpar::HhatVariant::positive
                                              : banpar::HhatVariant::standard;
      if (mu_odd_cmd->parsed())
        std::cout << banpar::format_partitioned_order(banpar::mu_odd(fam_k)) << "\n";
      else if (mu_even_cmd->parsed())
        std::cout << banpar::format_partitioned_order(banpar::mu_even(fam_k)) << "\n";
      else if (mu_hat_cmd->parsed())
        std::cout << banpar::format_partitioned_order(banpar::mu_hat(fam_n, variant)) << "\n";
      else if (pos_cmd->parsed())
        std::cout << banpar::network_to_json(banpar::to_truth_tables(banpar::positive_cycle(fam_n)))
                  << "\n";
      else if (neg_cmd->parsed())
        std::cout << banpar::network_to_json(banpar::to_truth_tables(banpar::negative_cycle(fam_n)))
                  << "\n";
      else if (hhat_cmd->parsed())
        std::cout << banpar::network_to_json(banpar::to_truth_tables(banpar::hhat(fam_n, variant)))
                  << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
