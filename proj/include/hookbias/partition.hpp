#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hookbias {

using part_t = std::uint32_t;

/// A partition stored as a multiplicity map. Blocks are kept sorted by
/// strictly decreasing part value; multiplicities are always positive.
class Partition {
 public:
  struct Block {
    part_t part;
    std::uint32_t mult;
    friend bool operator==(const Block&, const Block&) = default;
  };

  Partition() = default;

  /// Parts in any order. Throws domain_error on a zero part.
  static Partition from_parts(std::span<const part_t> parts);
  static Partition from_parts(std::initializer_list<part_t> parts);
  /// Blocks in any order, duplicates merged; zero multiplicities dropped.
  static Partition from_blocks(std::vector<Block> blocks);

  std::uint32_t multiplicity(part_t part) const noexcept;
  bool contains(part_t part) const noexcept { return multiplicity(part) > 0; }
  std::uint64_t weight() const noexcept { return weight_; }
  /// Number of parts (with multiplicity).
  std::uint64_t length() const noexcept;
  part_t largest() const noexcept { return blocks_.empty() ? 0 : blocks_.front().part; }
  bool empty() const noexcept { return blocks_.empty(); }

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  /// Non-increasing part sequence.
  std::vector<part_t> parts() const;

  /// "5,3,3,1"; the empty partition prints as "".
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) noexcept {
    return a.blocks_ == b.blocks_;
  }
  /// Lexicographic order on the non-increasing part sequences. Enumeration
  /// streams emit partitions in decreasing order under this comparison.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept;

 private:
  explicit Partition(std::vector<Block> sorted_blocks);
  void check_invariants() const;

  std::vector<Block> blocks_;
  std::uint64_t weight_ = 0;
};

/// Number of cells per hook length.
struct HookProfile {
  std::map<std::uint64_t, std::uint64_t> counts;

  std::uint64_t count(std::uint64_t hook) const {
    auto it = counts.find(hook);
    return it == counts.end() ? 0 : it->second;
  }
  std::uint64_t total() const;
  friend bool operator==(const HookProfile&, const HookProfile&) = default;
};

/// Hook length of every cell (arm + leg + 1), via the conjugate's column heights.
HookProfile hook_profile(const Partition& p);

/// Number of cells with hook length exactly k. Only the last k columns of each
/// row can qualify, so this is O(largest part + length * k).
std::uint64_t count_hooks(const Partition& p, std::uint64_t k);

/// Column lengths of the Young diagram.
Partition conjugate(const Partition& p);

bool is_t_regular(const Partition& p, std::uint32_t t);

using PartPredicate = std::function<bool(part_t)>;

/// Partitions of n with every part accepted by the predicate, produced one at
/// a time in decreasing-lexicographic order of part sequences.
class PartitionStream {
 public:
  PartitionStream(std::uint32_t n, PartPredicate allowed);

  /// Next partition, or nullopt when exhausted.
  std::optional<Partition> next();

 private:
  bool representable(std::uint32_t remainder, std::uint32_t max_part) const;
  /// Appends the decreasing-lex first partition of `remainder` into parts <= max_part.
  void fill(std::uint32_t remainder, std::uint32_t max_part);

  std::uint32_t n_;
  std::vector<bool> allowed_;
  // reach_[r * (n_ + 1) + q]: r is a sum of allowed parts <= q.
  std::vector<bool> reach_;
  std::vector<part_t> current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Partition> enumerate_partitions(std::uint32_t n, const PartPredicate& allowed);

/// Total number of k-hooks over all t-regular partitions of each n <= n_max.
/// Exhaustive: every t-regular partition of weight <= n_max is visited once,
/// built by stacking blocks of strictly increasing part size on top of the
/// diagram so the hooks of earlier rows never change.
std::vector<std::uint64_t> b_t_k_table(std::uint32_t t, std::uint32_t k, std::uint32_t n_max);
std::uint64_t b_t_k(std::uint32_t t, std::uint32_t k, std::uint32_t n);

/// Adds multiplicities.
Partition multiset_union(const Partition& a, const Partition& b);
/// Subtracts multiplicities; throws domain_error naming the first part where
/// b has more copies than a.
Partition multiset_difference(const Partition& a, const Partition& b);

}  // namespace hookbias
