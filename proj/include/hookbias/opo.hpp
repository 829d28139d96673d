#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "hookbias/partition.hpp"

namespace hookbias {

/// A partition with exactly one overlined part value. The overlined
/// occurrence is one of the copies counted in `base`. `tagged` marks objects
/// of the tagged copy of A used for even t; it is part of identity.
struct OpoOverpartition {
  Partition base;
  part_t overlined = 0;
  bool tagged = false;

  /// Validates that `overlined` occurs in `base`; throws domain_error otherwise.
  OpoOverpartition(Partition base, part_t overlined, bool tagged = false);

  std::uint64_t weight() const noexcept { return base.weight(); }
  /// Base without the overlined occurrence.
  Partition plain_parts() const;
  /// Part text format with `~` on the first occurrence of the overlined value
  /// and `'` after it when tagged: "10,~8,7,4,1", "11,~8',6".
  std::string to_string() const;

  friend bool operator==(const OpoOverpartition&, const OpoOverpartition&) = default;
  /// Overlined value ascending, then base in decreasing order, untagged first.
  friend std::strong_ordering operator<=>(const OpoOverpartition& a, const OpoOverpartition& b);
};

using ParsedPartition = std::variant<Partition, OpoOverpartition>;

/// Comma-separated parts, whitespace ignored; `~` prefix marks the overlined
/// part and a trailing `'` on that token marks the tagged copy.
ParsedPartition parse_partition(const std::string& text);
/// As parse_partition but requires exactly one overlined token.
OpoOverpartition parse_opo(const std::string& text);

struct TAdicFactorization {
  std::uint32_t k = 0;
  std::uint64_t c = 0;
  friend bool operator==(const TAdicFactorization&, const TAdicFactorization&) = default;
};

/// m = base^k * c with base not dividing c.
TAdicFactorization t_adic_factor(std::uint64_t m, std::uint32_t base);

/// Weight gained when the t-adic factor of m is replaced by (t+1):
/// (t+1)^k * c - m for m = t^k * c. Zero exactly when t does not divide m.
std::uint64_t lift_deficit(std::uint64_t m, std::uint32_t t);

/// Sum of lift_deficit over every part, with multiplicity, optionally skipping
/// one part value.
std::int64_t total_lift_deficit(const Partition& p, std::uint32_t t, part_t skip_value = 0);

enum class SetId { A, A1, A2, Ahat3, Ahat4, B, C, D, E, F };

inline constexpr SetId kAllSets[] = {SetId::A,  SetId::A1, SetId::A2, SetId::Ahat3, SetId::Ahat4,
                                     SetId::B,  SetId::C,  SetId::D,  SetId::E,     SetId::F};

const char* set_name(SetId id);
/// Accepts the names produced by set_name; throws parse_error otherwise.
SetId parse_set_id(const std::string& text);
/// False for Ahat3/Ahat4 under odd t.
bool set_defined_for(SetId id, std::uint32_t t);
bool set_is_tagged(SetId id);

using OverlinedPredicate = std::function<bool(part_t)>;
/// Predicate on a non-overlined part, given the overlined value.
using PlainPartPredicate = std::function<bool(part_t part, part_t overlined)>;

/// Every OPO-overpartition of n whose overlined value passes `overlined_ok`
/// and whose remaining parts pass `part_ok`; ordered by overlined value, then
/// decreasing base.
std::vector<OpoOverpartition> enumerate_opo(std::uint32_t n, const OverlinedPredicate& overlined_ok,
                                            const PlainPartPredicate& part_ok, bool tagged = false);

/// Throws domain_error for t < 3 or a set undefined at this parity.
bool set_membership(SetId id, std::uint32_t t, const OpoOverpartition& x);

std::vector<OpoOverpartition> enumerate_set(SetId id, std::uint32_t t, std::uint32_t n);

/// |S(n)| for n = 0..n_max.
std::vector<std::uint64_t> set_cardinalities(SetId id, std::uint32_t t, std::uint32_t n_max);

}  // namespace hookbias
