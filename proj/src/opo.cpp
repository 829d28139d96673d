#include "hookbias/opo.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <optional>

#include "hookbias/errors.hpp"

namespace hookbias {

OpoOverpartition::OpoOverpartition(Partition base_in, part_t overlined_in, bool tagged_in)
    : base(std::move(base_in)), overlined(overlined_in), tagged(tagged_in) {
  if (overlined == 0 || !base.contains(overlined)) {
    throw domain_error("overlined part " + std::to_string(overlined) + " does not occur in (" +
                       base.to_string() + ")");
  }
}

Partition OpoOverpartition::plain_parts() const {
  return multiset_difference(base, Partition::from_blocks({{overlined, 1}}));
}

std::string OpoOverpartition::to_string() const {
  std::string s;
  bool marked = false;
  for (const auto& b : base.blocks()) {
    for (std::uint32_t i = 0; i < b.mult; ++i) {
      if (!s.empty()) s += ',';
      if (!marked && b.part == overlined) {
        s += '~';
        s += std::to_string(b.part);
        if (tagged) s += '\'';
        marked = true;
      } else {
        s += std::to_string(b.part);
      }
    }
  }
  return s;
}

std::strong_ordering operator<=>(const OpoOverpartition& a, const OpoOverpartition& b) {
  if (auto c = a.overlined <=> b.overlined; c != 0) return c;
  if (auto c = b.base <=> a.base; c != 0) return c;
  return a.tagged <=> b.tagged;
}

ParsedPartition parse_partition(const std::string& text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  if (compact.empty()) return Partition{};

  std::vector<part_t> parts;
  std::optional<part_t> overlined;
  bool tagged = false;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = compact.find(',', pos);
    std::string token = compact.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (token.empty()) throw parse_error("empty part token in '" + text + "'");
    std::string_view digits = token;
    bool is_over = false, is_tag = false;
    if (digits.front() == '~') {
      is_over = true;
      digits.remove_prefix(1);
    }
    if (!digits.empty() && digits.back() == '\'') {
      is_tag = true;
      digits.remove_suffix(1);
    }
    if (is_tag && !is_over) throw parse_error("tag mark without overline in token '" + token + "'");
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw parse_error("invalid part token '" + token + "'");
    }
    if (value == 0) throw parse_error("non-positive part in token '" + token + "'");
    if (value > std::numeric_limits<part_t>::max()) throw parse_error("part too large in token '" + token + "'");
    if (is_over) {
      if (overlined) throw parse_error("second overlined token '" + token + "'");
      overlined = static_cast<part_t>(value);
      tagged = is_tag;
    }
    parts.push_back(static_cast<part_t>(value));
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  Partition base = Partition::from_parts(parts);
  if (!overlined) return base;
  return OpoOverpartition(std::move(base), *overlined, tagged);
}

OpoOverpartition parse_opo(const std::string& text) {
  auto parsed = parse_partition(text);
  if (auto* x = std::get_if<OpoOverpartition>(&parsed)) return *x;
  throw parse_error("expected exactly one overlined part in '" + text + "'");
}

TAdicFactorization t_adic_factor(std::uint64_t m, std::uint32_t base) {
  if (m == 0) throw domain_error("t-adic factorization needs m >= 1");
  if (base < 2) throw domain_error("t-adic factorization needs t >= 2");
  TAdicFactorization f{0, m};
  while (f.c % base == 0) {
    f.c /= base;
    ++f.k;
  }
  return f;
}

std::uint64_t lift_deficit(std::uint64_t m, std::uint32_t t) {
  auto [k, c] = t_adic_factor(m, t);
  std::uint64_t lifted = c;
  for (std::uint32_t i = 0; i < k; ++i) lifted *= t + 1;
  return lifted - m;
}

std::int64_t total_lift_deficit(const Partition& p, std::uint32_t t, part_t skip_value) {
  std::int64_t sum = 0;
  for (const auto& b : p.blocks()) {
    if (b.part == skip_value) continue;
    sum += static_cast<std::int64_t>(lift_deficit(b.part, t)) * b.mult;
  }
  return sum;
}

const char* set_name(SetId id) {
  switch (id) {
    case SetId::A: return "A";
    case SetId::A1: return "A1";
    case SetId::A2: return "A2";
    case SetId::Ahat3: return "Ahat3";
    case SetId::Ahat4: return "Ahat4";
    case SetId::B: return "B";
    case SetId::C: return "C";
    case SetId::D: return "D";
    case SetId::E: return "E";
    case SetId::F: return "F";
  }
  return "?";
}

SetId parse_set_id(const std::string& text) {
  for (SetId id : kAllSets) {
    if (text == set_name(id)) return id;
  }
  throw parse_error("unknown set '" + text + "' (expected A, A1, A2, Ahat3, Ahat4, B, C, D, E, F)");
}

bool set_defined_for(SetId id, std::uint32_t t) {
  return t % 2 == 0 || !set_is_tagged(id);
}

bool set_is_tagged(SetId id) { return id == SetId::Ahat3 || id == SetId::Ahat4; }

namespace {

struct SetRule {
  OverlinedPredicate overlined_ok;
  PlainPartPredicate part_ok;
  // Extra condition on the whole object, empty when none.
  std::function<bool(const OpoOverpartition&)> extra;
};

std::uint64_t power(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// The A-split conditions. Under odd t only the plain comparison is used.
bool in_first_half(const OpoOverpartition& x, std::uint32_t t) {
  const std::int64_t ones = x.base.multiplicity(1);
  const std::int64_t deficit = total_lift_deficit(x.base, t);
  if (t % 2 == 1) return ones >= deficit;
  auto [k, c] = t_adic_factor(x.overlined, t);
  if (c % 2 == 0) return ones >= deficit;
  return ones >= deficit - static_cast<std::int64_t>(c * power(t + 1, k - 1));
}

bool in_tagged_first_half(const OpoOverpartition& x, std::uint32_t t) {
  const std::int64_t ones = x.base.multiplicity(1);
  auto [k, c] = t_adic_factor(x.overlined, t);
  if (c % 2 == 0) return ones >= total_lift_deficit(x.base, t);
  return ones >= static_cast<std::int64_t>(lift_deficit(x.overlined, t));
}

SetRule rule_for(SetId id, std::uint32_t t) {
  if (t < 3) throw domain_error("sets are defined for t >= 3, got t=" + std::to_string(t));
  if (!set_defined_for(id, t)) {
    throw domain_error(std::string("set ") + set_name(id) + " exists only for even t, got t=" +
                       std::to_string(t));
  }
  const bool odd = t % 2 == 1;
  const std::uint32_t u = t + 1;
  auto not_div = [](std::uint32_t m) { return [m](part_t p, part_t) { return p % m != 0; }; };

  SetRule a{[u](part_t o) { return o % 2 == 0 && o % u != 0; }, not_div(u), {}};
  switch (id) {
    case SetId::A:
      return a;
    case SetId::A1:
      a.extra = [t](const OpoOverpartition& x) { return in_first_half(x, t); };
      return a;
    case SetId::A2:
      a.extra = [t](const OpoOverpartition& x) { return !in_first_half(x, t); };
      return a;
    case SetId::Ahat3:
      a.extra = [t](const OpoOverpartition& x) { return in_tagged_first_half(x, t); };
      return a;
    case SetId::Ahat4:
      a.extra = [t](const OpoOverpartition& x) { return !in_tagged_first_half(x, t); };
      return a;
    case SetId::B:
      if (odd) return {[t](part_t o) { return o % 2 == 0 && o % t != 0; }, not_div(t), {}};
      return {[u](part_t o) { return o % u == 0 && (o / u) % 2 == 1; }, not_div(u), {}};
    case SetId::C:
      if (odd) return {[t](part_t o) { return o % t == 0 && (o / t) % 2 == 1; }, not_div(t), {}};
      return {[t](part_t o) { return o % 2 == 0 && o % t != 0; }, not_div(t), {}};
    case SetId::D:
      if (odd) return {[u](part_t o) { return o % 2 == 0 && o % (2 * u) != 0; }, not_div(u), {}};
      return {[t](part_t o) { return o % 2 == 0 && o % (2 * t) != 0; }, not_div(t), {}};
    case SetId::E:
      return {[t](part_t o) { return o == 2 * t + 1 || o == 2 * t + 3; },
              [u](part_t p, part_t) { return p == 2 * u || p % u != 0; }, {}};
    case SetId::F:
      return {[t](part_t o) { return o == 2 * t - 1 || o == 2 * t + 1; },
              [t](part_t p, part_t) { return p == 2 * t || p % t != 0; }, {}};
  }
  throw domain_error("unknown set id");
}

}  // namespace

std::vector<OpoOverpartition> enumerate_opo(std::uint32_t n, const OverlinedPredicate& overlined_ok,
                                            const PlainPartPredicate& part_ok, bool tagged) {
  std::vector<OpoOverpartition> out;
  for (part_t o = 1; o <= n; ++o) {
    if (!overlined_ok(o)) continue;
    PartitionStream rest(n - o, [&](part_t p) { return part_ok(p, o); });
    while (auto rho = rest.next()) {
      out.emplace_back(multiset_union(*rho, Partition::from_blocks({{o, 1}})), o, tagged);
    }
  }
  return out;
}

bool set_membership(SetId id, std::uint32_t t, const OpoOverpartition& x) {
  SetRule rule = rule_for(id, t);
  if (x.tagged != set_is_tagged(id)) return false;
  if (!rule.overlined_ok(x.overlined)) return false;
  const Partition plain = x.plain_parts();
  for (const auto& b : plain.blocks()) {
    if (!rule.part_ok(b.part, x.overlined)) return false;
  }
  return !rule.extra || rule.extra(x);
}

std::vector<OpoOverpartition> enumerate_set(SetId id, std::uint32_t t, std::uint32_t n) {
  SetRule rule = rule_for(id, t);
  auto all = enumerate_opo(n, rule.overlined_ok, rule.part_ok, set_is_tagged(id));
  if (rule.extra) std::erase_if(all, [&](const OpoOverpartition& x) { return !rule.extra(x); });
  return all;
}

std::vector<std::uint64_t> set_cardinalities(SetId id, std::uint32_t t, std::uint32_t n_max) {
  std::vector<std::uint64_t> out;
  out.reserve(n_max + 1);
  for (std::uint32_t n = 0; n <= n_max; ++n) out.push_back(enumerate_set(id, t, n).size());
  return out;
}

}  // namespace hookbias
