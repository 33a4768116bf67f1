#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace banpar {

/// Block-parallel update schedule: a set of pairwise disjoint o-blocks
/// (sequences of automata) whose union is {0..n-1}. Within one o-block the
/// listed automata update one per substep, cyclically; all o-blocks advance
/// in parallel.
struct PartitionedOrder {
  std::vector<std::vector<std::uint32_t>> oblocks;

  /// Total number of automata.
  std::uint32_t size() const;

  /// Throws std::invalid_argument listing duplicates/gaps when the o-blocks
  /// do not partition {0..n-1}.
  void validate() const;

  /// Same schedule with o-blocks ordered by smallest element.
  PartitionedOrder normalized() const;

  friend bool operator==(const PartitionedOrder&, const PartitionedOrder&) = default;
};

/// Ordered sequence of blocks (W_1,...,W_l); each block is a set of automata
/// updated synchronously during one substep. Block-sequential schedules are
/// the special case where the blocks partition {0..n-1}.
struct BlockSequence {
  std::uint32_t n = 0;
  std::vector<std::vector<std::uint32_t>> blocks;  // each sorted ascending

  void validate() const;

  /// True iff the blocks partition {0..n-1} (each automaton exactly once).
  bool is_ordered_partition() const;

  friend bool operator==(const BlockSequence&, const BlockSequence&) = default;
};

/// The sequentialization morphism: l = lcm of o-block sizes and
/// W_i = { S^j at position ((i-1) mod |S^j|)+1 : all o-blocks S^j }.
BlockSequence sequentialize(const PartitionedOrder& mu);

/// True iff some automaton updates more than once per step, i.e. not all
/// o-block sizes are equal.
bool has_repetitions(const PartitionedOrder& mu);

/// How many o-blocks of each size a schedule has; the enumeration index.
struct SizeProfile {
  /// (o-block size, number of such o-blocks), sizes strictly increasing.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> counts;

  std::uint32_t total() const;      // sum of size*count
  std::uint32_t substeps() const;   // lcm of the sizes

  friend bool operator==(const SizeProfile&, const SizeProfile&) = default;
};

/// All size profiles with total n, ordered by decreasing largest part then
/// lexicographically (the order of the underlying integer partitions).
std::vector<SizeProfile> enumerate_size_profiles(std::uint32_t n);

/// Canonical representative of a schedule's equivalence class under equal
/// sequentialization: each automaton reduced to its (o-block size, 1-based
/// position) cell. Balanced cell sizes make the assignment realizable.
struct ScheduleAssignment {
  struct Cell {
    std::uint32_t size = 0;
    std::uint32_t phase = 0;                 // 1-based position within the o-block
    std::vector<std::uint32_t> automata;     // sorted ascending

    friend bool operator==(const Cell&, const Cell&) = default;
  };

  std::uint32_t n = 0;
  std::vector<Cell> cells;  // ordered by (size, phase)

  /// Throws std::invalid_argument if cells are unbalanced or do not
  /// partition {0..n-1}.
  void validate() const;

  friend bool operator==(const ScheduleAssignment&, const ScheduleAssignment&) = default;
};

ScheduleAssignment assignment_of(const PartitionedOrder& mu);

/// Witness partitioned order: for each size, o-block m zips the m-th
/// smallest automaton of each phase cell.
PartitionedOrder realize(const ScheduleAssignment& asg);

/// Number of representatives for size n: sum over profiles of
/// n! / prod_s (k_s!)^s, exact. Throws std::overflow_error past 64 bits.
std::uint64_t count_representatives(std::uint32_t n);

/// Selects every stride-th enumeration unit starting at index; the unchunked
/// stream is the disjoint union over all indices of one stride.
struct EnumerationChunk {
  std::uint64_t index = 0;
  std::uint64_t stride = 1;
};

/// Borrowed, allocation-free view of one representative during enumeration.
/// Pointers are only valid inside the visitor call. Cells are ordered by
/// (size, phase); members of cell c are members[cell_begin[c]..cell_begin[c+1])
/// in ascending order. At 0-based substep t the active cells are, for each
/// distinct size, substep_cells[t*num_sizes..(t+1)*num_sizes).
struct AssignmentView {
  std::uint32_t n = 0;
  std::uint32_t num_cells = 0;
  std::uint32_t num_sizes = 0;
  std::uint32_t substeps = 0;  // lcm of the profile's sizes
  std::uint64_t unit = 0;      // ordinal of the enumeration unit this belongs to
  const std::uint32_t* cell_size = nullptr;
  const std::uint32_t* cell_phase = nullptr;
  const std::uint32_t* cell_begin = nullptr;     // num_cells + 1 offsets
  const std::uint32_t* members = nullptr;        // n automata grouped by cell
  const std::uint32_t* substep_cells = nullptr;  // substeps * num_sizes cell ids

  ScheduleAssignment materialize() const;
};

namespace detail {

// Shared enumeration state: per-profile cell layout plus reusable buffers
// for the subset recursion. One instance per consumer; not thread-safe.
class RepresentativeEnumerator {
public:
  RepresentativeEnumerator(std::uint32_t n, EnumerationChunk chunk);

  // Visits every representative in deterministic order; visitor returns
  // false to stop early. Returns false iff the visitor stopped.
  template <class Visitor>
  bool run(Visitor&& visit) {
    for (const SizeProfile& profile : profiles_) {
      load_profile(profile);
      if (!fill_cell<Visitor>(0, visit)) return false;
    }
    return true;
  }

private:
  void load_profile(const SizeProfile& profile);

  template <class Visitor>
  bool fill_cell(std::uint32_t c, Visitor& visit) {
    if (c == view_.num_cells) return visit(std::as_const(view_));
    const std::uint32_t k = cell_begin_[c + 1] - cell_begin_[c];
    const std::vector<std::uint32_t>& rem = remaining_[c];
    const std::uint32_t r = static_cast<std::uint32_t>(rem.size());
    std::uint32_t* idx = comb_idx_.data() + cell_begin_[c];
    for (std::uint32_t m = 0; m < k; ++m) idx[m] = m;
    for (;;) {
      // Lexicographically increasing subsets of the remaining automata.
      std::uint32_t* chosen = members_.data() + cell_begin_[c];
      for (std::uint32_t m = 0; m < k; ++m) chosen[m] = rem[idx[m]];
      bool descend = true;
      if (c == 0) {
        view_.unit = unit_counter_++;
        descend = view_.unit % chunk_.stride == chunk_.index;
      }
      if (descend) {
        std::vector<std::uint32_t>& next = remaining_[c + 1];
        next.clear();
        std::uint32_t m = 0;
        for (std::uint32_t pos = 0; pos < r; ++pos) {
          if (m < k && idx[m] == pos)
            ++m;
          else
            next.push_back(rem[pos]);
        }
        if (!fill_cell<Visitor>(c + 1, visit)) return false;
      }
      // next k-combination of {0..r-1}
      std::int64_t i = static_cast<std::int64_t>(k) - 1;
      while (i >= 0 && idx[i] == r - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (std::uint32_t m = static_cast<std::uint32_t>(i) + 1; m < k; ++m) idx[m] = idx[m - 1] + 1;
    }
    return true;
  }

  std::vector<SizeProfile> profiles_;
  EnumerationChunk chunk_;
  std::uint64_t unit_counter_ = 0;

  AssignmentView view_;
  std::vector<std::uint32_t> cell_size_, cell_phase_, cell_begin_;
  std::vector<std::uint32_t> members_, comb_idx_, substep_cells_;
  std::vector<std::vector<std::uint32_t>> remaining_;
};

}  // namespace detail

/// Streams every representative assignment for size n exactly once, in a
/// fixed deterministic order. The visitor receives a borrowed AssignmentView
/// and returns true to continue. Chunks split the stream by enumeration unit
/// (profile plus first-cell content); the union over all chunk indices of a
/// stride is the full stream. Returns false iff the visitor stopped early.
template <class Visitor>
bool visit_representatives(std::uint32_t n, Visitor&& visit, EnumerationChunk chunk = {}) {
  detail::RepresentativeEnumerator e(n, chunk);
  return e.run(std::forward<Visitor>(visit));
}

/// Materialized enumeration, for small n.
std::vector<ScheduleAssignment> enumerate_representatives(std::uint32_t n,
                                                          EnumerationChunk chunk = {});

/// Schedule text format: "{(0,1),(2,3,4)}", braces optional on input.
PartitionedOrder parse_partitioned_order(std::string_view text);

/// Canonical text: o-blocks sorted by smallest element, wrapped in braces.
std::string format_partitioned_order(const PartitionedOrder& mu);

}  // namespace banpar
