#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>

#include "banpar/schedule.hpp"

namespace banpar {

/// Distribution of cycle counts over all representative block-parallel
/// schedules of the positive cycle of size n: bins[c] schedules parallelize
/// to an interaction graph with exactly c cycles (hence 2^c fixed points).
struct CycleCensus {
  std::uint32_t n = 0;
  std::map<std::uint32_t, std::uint64_t> bins;
  std::uint64_t total = 0;
  double elapsed_seconds = 0.0;
  /// When requested: for each bin, the first schedule (in enumeration
  /// order) reaching that cycle count, in canonical text form.
  std::map<std::uint32_t, std::string> witnesses;

  bool same_counts(const CycleCensus& other) const {
    return n == other.n && bins == other.bins && total == other.total &&
           witnesses == other.witnesses;
  }
};

struct CensusOptions {
  /// Worker count; 0 picks the hardware concurrency.
  unsigned threads = 0;
  bool collect_witnesses = false;
  /// Invoked roughly every 10^7 schedules with (schedules done, seconds).
  std::function<void(std::uint64_t, double)> progress;
};

/// Runs the exhaustive census for size n. Deterministic: the result does not
/// depend on the worker count.
CycleCensus census(std::uint32_t n, const CensusOptions& options = {});

/// Largest cycle count any representative schedule reaches at size n.
std::uint32_t max_cycles(std::uint32_t n, const CensusOptions& options = {});

/// CSV table, header "n,cycles,count", rows sorted by n then cycles.
std::string census_report_csv(std::span<const CycleCensus> results);

/// JSON report: an object {"n":..,"bins":{..},"total":..,"elapsed_seconds":..}
/// per census, wrapped in an array when there are several.
std::string census_report_json(std::span<const CycleCensus> results);

}  // namespace banpar
