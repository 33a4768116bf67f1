#include "banpar/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include <json.hpp>

namespace banpar {

namespace {

// Per-worker scratch: the substep engine for the positive cycle plus a local
// histogram. No allocation per schedule.
struct CensusWorker {
  explicit CensusWorker(std::uint32_t n)
      : n(n), g(n), tmp_target(n), tmp_rule(n), mark(n), bins(n + 1, 0), first_seen(n + 1) {}

  std::uint32_t n;
  std::vector<std::uint32_t> g;  // current substep network: g[i] = source of rule i
  std::vector<std::uint32_t> tmp_target, tmp_rule, mark;
  std::vector<std::uint64_t> bins;
  std::uint64_t visited = 0;

  struct Seen {
    bool set = false;
    std::uint64_t unit = 0;
    std::uint64_t seq = 0;
    std::string schedule;
  };
  std::vector<Seen> first_seen;
  std::uint64_t current_unit = 0;
  std::uint64_t seq_in_unit = 0;

  // Parallelizes the positive cycle under the schedule described by `view`
  // and returns the number of cycles (= components) of the result.
  std::uint32_t run(const AssignmentView& view) {
    for (std::uint32_t a = 0; a < n; ++a) g[a] = a;
    const std::uint32_t* substep = view.substep_cells;
    for (std::uint32_t t = 0; t < view.substeps; ++t) {
      // Gather f composed with the previous substep for the whole block,
      // then write: updates within a substep read pre-substep rules.
      std::uint32_t cnt = 0;
      for (std::uint32_t si = 0; si < view.num_sizes; ++si) {
        const std::uint32_t c = *substep++;
        for (std::uint32_t m = view.cell_begin[c]; m < view.cell_begin[c + 1]; ++m) {
          const std::uint32_t a = view.members[m];
          tmp_target[cnt] = a;
          tmp_rule[cnt] = g[a == 0 ? n - 1 : a - 1];
          ++cnt;
        }
      }
      for (std::uint32_t j = 0; j < cnt; ++j) g[tmp_target[j]] = tmp_rule[j];
    }
    // Components of the functional graph i -> g[i]: every walk either closes
    // a fresh cycle (new component) or runs into an earlier walk.
    std::fill(mark.begin(), mark.end(), 0u);
    std::uint32_t comps = 0;
    for (std::uint32_t a = 0; a < n; ++a) {
      std::uint32_t j = a;
      while (mark[j] == 0) {
        mark[j] = a + 1;
        j = g[j];
      }
      if (mark[j] == a + 1) ++comps;
    }
    return comps;
  }
};

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

}  // namespace

CycleCensus census(std::uint32_t n, const CensusOptions& options) {
  if (n == 0) throw std::invalid_argument("census size must be at least 1");
  const unsigned threads = resolve_threads(options.threads);
  const auto start = std::chrono::steady_clock::now();

  std::atomic<std::uint64_t> done{0};
  std::mutex progress_mutex;
  std::uint64_t next_report = 10'000'000;
  auto flush_progress = [&](std::uint64_t amount) {
    const std::uint64_t now_done = done.fetch_add(amount, std::memory_order_relaxed) + amount;
    if (!options.progress) return;
    std::lock_guard<std::mutex> lock(progress_mutex);
    if (now_done >= next_report) {
      while (next_report <= now_done) next_report += 10'000'000;
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      options.progress(now_done, secs);
    }
  };

  std::vector<CensusWorker> workers;
  workers.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) workers.emplace_back(n);

  auto work = [&](unsigned w) {
    CensusWorker& worker = workers[w];
    std::uint64_t unflushed = 0;
    visit_representatives(
        n,
        [&](const AssignmentView& view) {
          const std::uint32_t c = worker.run(view);
          ++worker.bins[c];
          ++worker.visited;
          if (options.collect_witnesses) {
            if (view.unit != worker.current_unit) {
              worker.current_unit = view.unit;
              worker.seq_in_unit = 0;
            }
            auto& seen = worker.first_seen[c];
            if (!seen.set) {
              seen.set = true;
              seen.unit = view.unit;
              seen.seq = worker.seq_in_unit;
              seen.schedule = format_partitioned_order(realize(view.materialize()));
            }
            ++worker.seq_in_unit;
          }
          if (++unflushed == 65536) {
            flush_progress(unflushed);
            unflushed = 0;
          }
          return true;
        },
        EnumerationChunk{w, threads});
    flush_progress(unflushed);
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  CycleCensus result;
  result.n = n;
  for (const CensusWorker& worker : workers) {
    result.total += worker.visited;
    for (std::uint32_t c = 0; c <= n; ++c)
      if (worker.bins[c] > 0) result.bins[c] += worker.bins[c];
  }
  if (options.collect_witnesses) {
    for (std::uint32_t c = 0; c <= n; ++c) {
      const CensusWorker::Seen* best = nullptr;
      for (const CensusWorker& worker : workers) {
        const auto& seen = worker.first_seen[c];
        if (!seen.set) continue;
        if (!best || std::pair{seen.unit, seen.seq} < std::pair{best->unit, best->seq}) best = &seen;
      }
      if (best) result.witnesses[c] = best->schedule;
    }
  }
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::uint32_t max_cycles(std::uint32_t n, const CensusOptions& options) {
  const CycleCensus result = census(n, options);
  return result.bins.empty() ? 0 : result.bins.rbegin()->first;
}

std::string census_report_csv(std::span<const CycleCensus> results) {
  std::vector<const CycleCensus*> ordered;
  for (const CycleCensus& r : results) ordered.push_back(&r);
  std::sort(ordered.begin(), ordered.end(),
            [](const CycleCensus* a, const CycleCensus* b) { return a->n < b->n; });
  std::string out = "n,cycles,count\n";
  for (const CycleCensus* r : ordered)
    for (auto [c, count] : r->bins)
      out += std::to_string(r->n) + ',' + std::to_string(c) + ',' + std::to_string(count) + '\n';
  return out;
}

std::string census_report_json(std::span<const CycleCensus> results) {
  auto one = [](const CycleCensus& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    nlohmann::ordered_json bins = nlohmann::ordered_json::object();
    for (auto [c, count] : r.bins) bins[std::to_string(c)] = count;
    j["bins"] = bins;
    j["total"] = r.total;
    if (r.elapsed_seconds > 0.0) j["elapsed_seconds"] = r.elapsed_seconds;
    if (!r.witnesses.empty()) {
      nlohmann::ordered_json w = nlohmann::ordered_json::object();
      for (const auto& [c, text] : r.witnesses) w[std::to_string(c)] = text;
      j["witnesses"] = w;
    }
    return j;
  };
  if (results.size() == 1) return one(results[0]).dump();
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CycleCensus& r : results) arr.push_back(one(r));
  return arr.dump();
}

}  // namespace banpar
