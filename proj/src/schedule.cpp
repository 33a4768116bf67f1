#include "banpar/schedule.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <stdexcept>

namespace banpar {

std::uint32_t PartitionedOrder::size() const {
  std::size_t total = 0;
  for (const auto& b : oblocks) total += b.size();
  return static_cast<std::uint32_t>(total);
}

void PartitionedOrder::validate() const {
  if (oblocks.empty()) throw std::invalid_argument("partitioned order must have at least one o-block");
  const std::uint32_t n = size();
  std::vector<std::uint32_t> seen(n, 0);
  std::string dups, oob;
  for (const auto& b : oblocks) {
    if (b.empty()) throw std::invalid_argument("partitioned order contains an empty o-block");
    for (std::uint32_t a : b) {
      if (a >= n)
        oob += (oob.empty() ? "" : ",") + std::to_string(a);
      else if (++seen[a] > 1)
        dups += (dups.empty() ? "" : ",") + std::to_string(a);
    }
  }
  if (!dups.empty() || !oob.empty()) {
    std::string gaps;
    for (std::uint32_t a = 0; a < n; ++a)
      if (seen[a] == 0) gaps += (gaps.empty() ? "" : ",") + std::to_string(a);
    std::string msg = "invalid partitioned order:";
    if (!dups.empty()) msg += " repeated automata {" + dups + "}";
    if (!oob.empty()) msg += " out-of-range automata {" + oob + "}";
    if (!gaps.empty()) msg += " missing automata {" + gaps + "}";
    throw std::invalid_argument(msg);
  }
}

PartitionedOrder PartitionedOrder::normalized() const {
  PartitionedOrder out = *this;
  std::sort(out.oblocks.begin(), out.oblocks.end(),
            [](const auto& a, const auto& b) {
              return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
            });
  return out;
}

void BlockSequence::validate() const {
  for (const auto& w : blocks) {
    if (w.empty()) throw std::invalid_argument("block sequence contains an empty block");
    for (std::uint32_t a : w)
      if (a >= n)
        throw std::invalid_argument("block references automaton " + std::to_string(a) +
                                    " out of range for size " + std::to_string(n));
  }
}

bool BlockSequence::is_ordered_partition() const {
  std::vector<std::uint8_t> seen(n, 0);
  for (const auto& w : blocks)
    for (std::uint32_t a : w) {
      if (a >= n || seen[a]) return false;
      seen[a] = 1;
    }
  return std::all_of(seen.begin(), seen.end(), [](std::uint8_t s) { return s != 0; });
}

BlockSequence sequentialize(const PartitionedOrder& mu) {
  mu.validate();
  BlockSequence out;
  out.n = mu.size();
  std::uint32_t steps = 1;
  for (const auto& b : mu.oblocks) steps = std::lcm(steps, static_cast<std::uint32_t>(b.size()));
  out.blocks.resize(steps);
  for (std::uint32_t t = 0; t < steps; ++t) {
    auto& w = out.blocks[t];
    w.reserve(mu.oblocks.size());
    for (const auto& b : mu.oblocks) w.push_back(b[t % b.size()]);
    std::sort(w.begin(), w.end());
  }
  return out;
}

bool has_repetitions(const PartitionedOrder& mu) {
  mu.validate();
  for (const auto& b : mu.oblocks)
    if (b.size() != mu.oblocks.front().size()) return true;
  return false;
}

std::uint32_t SizeProfile::total() const {
  std::uint32_t t = 0;
  for (auto [s, k] : counts) t += s * k;
  return t;
}

std::uint32_t SizeProfile::substeps() const {
  std::uint32_t l = 1;
  for (auto [s, k] : counts) l = std::lcm(l, s);
  return l;
}

namespace {

void partitions_rec(std::uint32_t remaining, std::uint32_t max_part,
                    std::vector<std::uint32_t>& parts, std::vector<SizeProfile>& out) {
  if (remaining == 0) {
    SizeProfile p;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      if (!p.counts.empty() && p.counts.back().first == *it)
        ++p.counts.back().second;
      else
        p.counts.push_back({*it, 1});
    }
    out.push_back(std::move(p));
    return;
  }
  for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
    parts.push_back(part);
    partitions_rec(remaining - part, part, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<SizeProfile> enumerate_size_profiles(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("size must be at least 1");
  std::vector<SizeProfile> out;
  std::vector<std::uint32_t> parts;
  partitions_rec(n, n, parts, out);
  return out;
}

void ScheduleAssignment::validate() const {
  std::map<std::uint32_t, std::uint32_t> cells_per_size, count_per_size;
  std::vector<std::uint32_t> seen(n, 0);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const Cell& cell = cells[c];
    if (c > 0) {
      const Cell& prev = cells[c - 1];
      if (std::pair{prev.size, prev.phase} >= std::pair{cell.size, cell.phase})
        throw std::invalid_argument("assignment cells must be ordered by (size, phase)");
    }
    if (cell.phase < 1 || cell.phase > cell.size)
      throw std::invalid_argument("cell phase must lie in 1..size");
    if (cell.automata.empty() || !std::is_sorted(cell.automata.begin(), cell.automata.end()))
      throw std::invalid_argument("cell automata must be nonempty and sorted");
    for (std::uint32_t a : cell.automata) {
      if (a >= n || seen[a]++)
        throw std::invalid_argument("assignment cells must partition the automata");
    }
    ++cells_per_size[cell.size];
    auto [it, fresh] = count_per_size.try_emplace(cell.size, static_cast<std::uint32_t>(cell.automata.size()));
    if (!fresh && it->second != cell.automata.size())
      throw std::invalid_argument("unbalanced assignment: cell sizes differ within o-block size " +
                                  std::to_string(cell.size));
  }
  for (auto [s, phases] : cells_per_size)
    if (phases != s)
      throw std::invalid_argument("assignment is missing phases for o-block size " + std::to_string(s));
  for (std::uint32_t a = 0; a < n; ++a)
    if (!seen[a]) throw std::invalid_argument("assignment cells must cover every automaton");
}

ScheduleAssignment assignment_of(const PartitionedOrder& mu) {
  mu.validate();
  ScheduleAssignment out;
  out.n = mu.size();
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> cells;
  for (const auto& b : mu.oblocks) {
    const std::uint32_t s = static_cast<std::uint32_t>(b.size());
    for (std::uint32_t p = 1; p <= s; ++p) cells[{s, p}].push_back(b[p - 1]);
  }
  for (auto& [key, automata] : cells) {
    std::sort(automata.begin(), automata.end());
    out.cells.push_back({key.first, key.second, std::move(automata)});
  }
  return out;
}

PartitionedOrder realize(const ScheduleAssignment& asg) {
  asg.validate();
  PartitionedOrder out;
  for (std::size_t c = 0; c < asg.cells.size();) {
    const std::uint32_t s = asg.cells[c].size;
    const std::uint32_t k = static_cast<std::uint32_t>(asg.cells[c].automata.size());
    // cells c..c+s-1 are the phases of this size; zip them into k o-blocks
    for (std::uint32_t m = 0; m < k; ++m) {
      std::vector<std::uint32_t> oblock(s);
      for (std::uint32_t p = 0; p < s; ++p) oblock[p] = asg.cells[c + p].automata[m];
      out.oblocks.push_back(std::move(oblock));
    }
    c += s;
  }
  out = out.normalized();
  return out;
}

std::uint64_t count_representatives(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("size must be at least 1");
  // Any n >= 26 exceeds 64 bits outright: the single-o-block profile alone
  // contributes n! > 2^64.
  if (n > 25) throw std::overflow_error("representative count exceeds 64 bits");
  unsigned __int128 total = 0;
  for (const SizeProfile& profile : enumerate_size_profiles(n)) {
    unsigned __int128 numer = 1;
    for (std::uint32_t i = 2; i <= n; ++i) numer *= i;
    for (auto [s, k] : profile.counts) {
      unsigned __int128 kfact = 1;
      for (std::uint32_t i = 2; i <= k; ++i) kfact *= i;
      for (std::uint32_t rep = 0; rep < s; ++rep) numer /= kfact;
    }
    total += numer;
  }
  if (total > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("representative count exceeds 64 bits");
  return static_cast<std::uint64_t>(total);
}

ScheduleAssignment AssignmentView::materialize() const {
  ScheduleAssignment out;
  out.n = n;
  out.cells.reserve(num_cells);
  for (std::uint32_t c = 0; c < num_cells; ++c) {
    ScheduleAssignment::Cell cell;
    cell.size = cell_size[c];
    cell.phase = cell_phase[c];
    cell.automata.assign(members + cell_begin[c], members + cell_begin[c + 1]);
    out.cells.push_back(std::move(cell));
  }
  return out;
}

namespace detail {

RepresentativeEnumerator::RepresentativeEnumerator(std::uint32_t n, EnumerationChunk chunk)
    : profiles_(enumerate_size_profiles(n)), chunk_(chunk) {
  if (chunk_.stride == 0 || chunk_.index >= chunk_.stride)
    throw std::invalid_argument("chunk requires 0 <= index < stride");
  view_.n = n;
  members_.resize(n);
  comb_idx_.resize(n);
  remaining_.resize(n + 2);
  for (auto& r : remaining_) r.reserve(n);
}

void RepresentativeEnumerator::load_profile(const SizeProfile& profile) {
  const std::uint32_t n = view_.n;
  cell_size_.clear();
  cell_phase_.clear();
  cell_begin_.clear();
  cell_begin_.push_back(0);
  for (auto [s, k] : profile.counts)
    for (std::uint32_t p = 1; p <= s; ++p) {
      cell_size_.push_back(s);
      cell_phase_.push_back(p);
      cell_begin_.push_back(cell_begin_.back() + k);
    }
  const std::uint32_t steps = profile.substeps();
  const std::uint32_t num_sizes = static_cast<std::uint32_t>(profile.counts.size());
  substep_cells_.resize(static_cast<std::size_t>(steps) * num_sizes);
  std::uint32_t first_cell_of_size = 0;
  for (std::uint32_t si = 0; si < num_sizes; ++si) {
    const std::uint32_t s = profile.counts[si].first;
    for (std::uint32_t t = 0; t < steps; ++t)
      substep_cells_[static_cast<std::size_t>(t) * num_sizes + si] = first_cell_of_size + t % s;
    first_cell_of_size += s;
  }
  view_.num_cells = static_cast<std::uint32_t>(cell_size_.size());
  view_.num_sizes = num_sizes;
  view_.substeps = steps;
  view_.cell_size = cell_size_.data();
  view_.cell_phase = cell_phase_.data();
  view_.cell_begin = cell_begin_.data();
  view_.members = members_.data();
  view_.substep_cells = substep_cells_.data();
  remaining_[0].resize(n);
  for (std::uint32_t a = 0; a < n; ++a) remaining_[0][a] = a;
}

}  // namespace detail

std::vector<ScheduleAssignment> enumerate_representatives(std::uint32_t n, EnumerationChunk chunk) {
  std::vector<ScheduleAssignment> out;
  visit_representatives(
      n,
      [&](const AssignmentView& view) {
        out.push_back(view.materialize());
        return true;
      },
      chunk);
  return out;
}

namespace {

void skip_ws(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

std::uint32_t parse_number(std::string_view text, std::size_t& pos) {
  skip_ws(text, pos);
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
    throw std::invalid_argument("schedule text: expected automaton index at position " +
                                std::to_string(pos));
  std::uint64_t value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    if (value > 0xffffffffull) throw std::invalid_argument("schedule text: index too large");
    ++pos;
  }
  return static_cast<std::uint32_t>(value);
}

}  // namespace

PartitionedOrder parse_partitioned_order(std::string_view text) {
  PartitionedOrder mu;
  std::size_t pos = 0;
  skip_ws(text, pos);
  bool braced = pos < text.size() && text[pos] == '{';
  if (braced) ++pos;
  for (;;) {
    skip_ws(text, pos);
    if (pos >= text.size() || text[pos] != '(')
      throw std::invalid_argument("schedule text: expected '(' at position " + std::to_string(pos));
    ++pos;
    std::vector<std::uint32_t> oblock;
    for (;;) {
      oblock.push_back(parse_number(text, pos));
      skip_ws(text, pos);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    if (pos >= text.size() || text[pos] != ')')
      throw std::invalid_argument("schedule text: expected ')' at position " + std::to_string(pos));
    ++pos;
    mu.oblocks.push_back(std::move(oblock));
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (braced) {
    skip_ws(text, pos);
    if (pos >= text.size() || text[pos] != '}')
      throw std::invalid_argument("schedule text: expected '}' at position " + std::to_string(pos));
    ++pos;
  }
  skip_ws(text, pos);
  if (pos != text.size())
    throw std::invalid_argument("schedule text: trailing characters at position " + std::to_string(pos));
  mu.validate();
  return mu;
}

std::string format_partitioned_order(const PartitionedOrder& mu) {
  const PartitionedOrder sorted = mu.normalized();
  std::string out = "{";
  for (std::size_t b = 0; b < sorted.oblocks.size(); ++b) {
    if (b > 0) out += ',';
    out += '(';
    for (std::size_t i = 0; i < sorted.oblocks[b].size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(sorted.oblocks[b][i]);
    }
    out += ')';
  }
  out += '}';
  return out;
}

}  // namespace banpar
