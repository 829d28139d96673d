#include "hookbias/partition.hpp"

#include <algorithm>
#include <cassert>

#include "hookbias/errors.hpp"

namespace hookbias {

Partition::Partition(std::vector<Block> sorted_blocks) : blocks_(std::move(sorted_blocks)) {
  for (const auto& b : blocks_) weight_ += std::uint64_t{b.part} * b.mult;
  check_invariants();
}

void Partition::check_invariants() const {
#ifndef NDEBUG
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    assert(blocks_[i].part >= 1 && blocks_[i].mult >= 1);
    assert(i == 0 || blocks_[i - 1].part > blocks_[i].part);
    w += std::uint64_t{blocks_[i].part} * blocks_[i].mult;
  }
  assert(w == weight_);
#endif
}

Partition Partition::from_blocks(std::vector<Block> blocks) {
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.part > b.part; });
  std::vector<Block> merged;
  merged.reserve(blocks.size());
  for (const auto& b : blocks) {
    if (b.mult == 0) continue;
    if (b.part == 0) throw domain_error("partition parts must be positive, got 0");
    if (!merged.empty() && merged.back().part == b.part) {
      merged.back().mult += b.mult;
    } else {
      merged.push_back(b);
    }
  }
  return Partition(std::move(merged));
}

Partition Partition::from_parts(std::span<const part_t> parts) {
  std::vector<Block> blocks;
  blocks.reserve(parts.size());
  for (part_t p : parts) blocks.push_back({p, 1});
  return from_blocks(std::move(blocks));
}

Partition Partition::from_parts(std::initializer_list<part_t> parts) {
  return from_parts(std::span<const part_t>(parts.begin(), parts.size()));
}

std::uint32_t Partition::multiplicity(part_t part) const noexcept {
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), part,
                             [](const Block& b, part_t v) { return b.part > v; });
  return (it != blocks_.end() && it->part == part) ? it->mult : 0;
}

std::uint64_t Partition::length() const noexcept {
  std::uint64_t n = 0;
  for (const auto& b : blocks_) n += b.mult;
  return n;
}

std::vector<part_t> Partition::parts() const {
  std::vector<part_t> out;
  out.reserve(length());
  for (const auto& b : blocks_) out.insert(out.end(), b.mult, b.part);
  return out;
}

std::string Partition::to_string() const {
  std::string s;
  for (const auto& b : blocks_) {
    for (std::uint32_t i = 0; i < b.mult; ++i) {
      if (!s.empty()) s += ',';
      s += std::to_string(b.part);
    }
  }
  return s;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
  // Compare run-length encoded sequences without expanding them.
  std::size_t i = 0, j = 0;
  std::uint32_t used_a = 0, used_b = 0;
  while (i < a.blocks_.size() && j < b.blocks_.size()) {
    const auto& x = a.blocks_[i];
    const auto& y = b.blocks_[j];
    if (x.part != y.part) return x.part <=> y.part;
    std::uint32_t step = std::min(x.mult - used_a, y.mult - used_b);
    used_a += step;
    used_b += step;
    if (used_a == x.mult) { ++i; used_a = 0; }
    if (used_b == y.mult) { ++j; used_b = 0; }
  }
  bool a_done = i == a.blocks_.size();
  bool b_done = j == b.blocks_.size();
  if (a_done && b_done) return std::strong_ordering::equal;
  return a_done ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::uint64_t HookProfile::total() const {
  std::uint64_t s = 0;
  for (const auto& [h, c] : counts) s += c;
  return s;
}

namespace {

// heights[j-1] = number of rows of length >= j.
std::vector<std::uint64_t> column_heights(const Partition& p) {
  std::vector<std::uint64_t> heights(p.largest(), 0);
  std::uint64_t rows = 0;
  const auto& blocks = p.blocks();
  // Walk blocks from largest part; columns (next_part, part] have height rows.
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    rows += blocks[i].mult;
    part_t lo = (i + 1 < blocks.size()) ? blocks[i + 1].part : 0;
    for (part_t j = lo + 1; j <= blocks[i].part; ++j) heights[j - 1] = rows;
  }
  return heights;
}

}  // namespace

Partition conjugate(const Partition& p) {
  auto heights = column_heights(p);
  std::vector<part_t> parts;
  parts.reserve(heights.size());
  for (auto h : heights) parts.push_back(static_cast<part_t>(h));
  return Partition::from_parts(parts);
}

HookProfile hook_profile(const Partition& p) {
  HookProfile profile;
  auto heights = column_heights(p);
  std::uint64_t row = 0;
  for (const auto& b : p.blocks()) {
    for (std::uint32_t r = 0; r < b.mult; ++r) {
      ++row;
      for (part_t j = 1; j <= b.part; ++j) {
        std::uint64_t arm = b.part - j;
        std::uint64_t leg = heights[j - 1] - row;
        ++profile.counts[arm + leg + 1];
      }
    }
  }
  return profile;
}

std::uint64_t count_hooks(const Partition& p, std::uint64_t k) {
  if (k == 0) return 0;
  auto heights = column_heights(p);
  std::uint64_t row = 0, found = 0;
  for (const auto& b : p.blocks()) {
    for (std::uint32_t r = 0; r < b.mult; ++r) {
      ++row;
      // arm <= k - 1 restricts j to the last k columns of the row.
      part_t first = b.part >= k ? static_cast<part_t>(b.part - k + 1) : 1;
      for (part_t j = first; j <= b.part; ++j) {
        std::uint64_t hook = (b.part - j) + (heights[j - 1] - row) + 1;
        if (hook == k) ++found;
      }
    }
  }
  return found;
}

bool is_t_regular(const Partition& p, std::uint32_t t) {
  if (t < 2) throw domain_error("t-regularity needs t >= 2");
  return std::none_of(p.blocks().begin(), p.blocks().end(),
                      [t](const Partition::Block& b) { return b.part % t == 0; });
}

PartitionStream::PartitionStream(std::uint32_t n, PartPredicate allowed)
    : n_(n), allowed_(n + 1, false), reach_(std::size_t{n + 1} * (n + 1), false) {
  for (std::uint32_t v = 1; v <= n; ++v) allowed_[v] = allowed(v);
  // reach(r, q) = reach(r, q-1) || (allowed(q) && reach(r-q, q))
  for (std::uint32_t q = 0; q <= n; ++q) reach_[q] = true;  // r = 0
  for (std::uint32_t r = 1; r <= n; ++r) {
    for (std::uint32_t q = 1; q <= n; ++q) {
      bool ok = reach_[std::size_t{r} * (n + 1) + q - 1];
      if (!ok && q <= r && allowed_[q]) ok = reach_[std::size_t{r - q} * (n + 1) + q];
      reach_[std::size_t{r} * (n + 1) + q] = ok;
    }
  }
}

bool PartitionStream::representable(std::uint32_t remainder, std::uint32_t max_part) const {
  max_part = std::min(max_part, n_);
  return reach_[std::size_t{remainder} * (n_ + 1) + max_part];
}

void PartitionStream::fill(std::uint32_t remainder, std::uint32_t max_part) {
  while (remainder > 0) {
    std::uint32_t q = std::min(max_part, remainder);
    while (q > 0 && !(allowed_[q] && representable(remainder - q, q))) --q;
    assert(q > 0);
    current_.push_back(q);
    remainder -= q;
    max_part = q;
  }
}

std::optional<Partition> PartitionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (!representable(n_, n_)) {
      done_ = true;
      return std::nullopt;
    }
    fill(n_, n_);
    return Partition::from_parts(current_);
  }
  // Pop trailing parts and try to lower the rightmost part that admits a
  // smaller allowed replacement with the remainder still representable.
  std::uint32_t tail = 0;
  while (!current_.empty()) {
    part_t p = current_.back();
    current_.pop_back();
    tail += p;
    for (part_t q = p - 1; q >= 1; --q) {
      if (allowed_[q] && q <= tail && representable(tail - q, q)) {
        current_.push_back(q);
        fill(tail - q, q);
        return Partition::from_parts(current_);
      }
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<Partition> enumerate_partitions(std::uint32_t n, const PartPredicate& allowed) {
  std::vector<Partition> out;
  PartitionStream stream(n, allowed);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

namespace {

class HookWalker {
 public:
  HookWalker(std::uint32_t t, std::uint32_t k, std::uint32_t n_max)
      : t_(t), k_(k), n_max_(n_max), totals_(n_max + 1, 0) {}

  std::vector<std::uint64_t> run() {
    visit(0, 0, 0);
    return std::move(totals_);
  }

 private:
  // Blocks on the stack have increasing part values; the top is the largest
  // part, i.e. the top rows of the diagram.
  void visit(part_t last, std::uint32_t weight, std::uint64_t hooks) {
    totals_[weight] += hooks;
    const std::uint32_t room = n_max_ - weight;
    for (part_t v = last + 1; v <= room; ++v) {
      if (v % t_ == 0) continue;
      // Column j = v - a of a new top block has below it every old row of
      // length >= j. Only arms a < k can give a k-hook.
      std::uint32_t need_count = 0;
      std::uint32_t need[kMaxK];
      const std::uint32_t arms = std::min<std::uint32_t>(k_, v);
      for (std::uint32_t a = 0; a < arms; ++a) {
        std::uint64_t below = 0;
        for (std::size_t i = depth_; i-- > 0 && parts_[i] >= v - a;) below += mults_[i];
        // Hook = a + leg + 1 with leg = (rows of the block under the cell) + below.
        std::int64_t rows_under = std::int64_t{k_} - 1 - a - static_cast<std::int64_t>(below);
        if (rows_under >= 0) need[need_count++] = static_cast<std::uint32_t>(rows_under);
      }
      parts_[depth_] = v;
      for (std::uint32_t m = 1; std::uint64_t{m} * v <= room; ++m) {
        // Row r of the block (counting from the bottom, 0-based) has r rows of
        // the same block below it; a cell needs r == rows_under.
        std::uint64_t add = 0;
        for (std::uint32_t i = 0; i < need_count; ++i) add += need[i] < m ? 1 : 0;
        mults_[depth_] = m;
        ++depth_;
        visit(v, weight + m * v, hooks + add);
        --depth_;
      }
    }
  }

  static constexpr std::uint32_t kMaxK = 64;
  std::uint32_t t_, k_, n_max_;
  std::vector<std::uint64_t> totals_;
  part_t parts_[128] = {};
  std::uint32_t mults_[128] = {};
  std::size_t depth_ = 0;
};

}  // namespace

std::vector<std::uint64_t> b_t_k_table(std::uint32_t t, std::uint32_t k, std::uint32_t n_max) {
  if (t < 2) throw domain_error("b_{t,k} needs t >= 2");
  if (k < 1 || k > 64) throw domain_error("b_{t,k} supports hook lengths 1..64");
  if (n_max > 4000) throw domain_error("b_{t,k} enumeration limited to n <= 4000");
  return HookWalker(t, k, n_max).run();
}

std::uint64_t b_t_k(std::uint32_t t, std::uint32_t k, std::uint32_t n) {
  return b_t_k_table(t, k, n).back();
}

Partition multiset_union(const Partition& a, const Partition& b) {
  std::vector<Partition::Block> blocks = a.blocks();
  blocks.insert(blocks.end(), b.blocks().begin(), b.blocks().end());
  return Partition::from_blocks(std::move(blocks));
}

Partition multiset_difference(const Partition& a, const Partition& b) {
  std::vector<Partition::Block> blocks;
  blocks.reserve(a.blocks().size());
  for (const auto& blk : b.blocks()) {
    if (a.multiplicity(blk.part) < blk.mult) {
      throw domain_error("cannot remove " + std::to_string(blk.mult) + " copies of part " +
                         std::to_string(blk.part) + ": only " +
                         std::to_string(a.multiplicity(blk.part)) + " present");
    }
  }
  for (const auto& blk : a.blocks()) {
    std::uint32_t left = blk.mult - b.multiplicity(blk.part);
    if (left > 0) blocks.push_back({blk.part, left});
  }
  return Partition::from_blocks(std::move(blocks));
}

}  // namespace hookbias
