#include "hookbias/injections.hpp"

#include <map>

#include "hookbias/errors.hpp"

namespace hookbias {

namespace {

std::uint64_t power(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// Mutable multiset used while assembling an image.
class PartBag {
 public:
  PartBag() = default;
  explicit PartBag(const Partition& p) {
    for (const auto& b : p.blocks()) counts_[b.part] += b.mult;
  }

  void add(part_t part, std::uint64_t mult = 1) {
    if (mult > 0) counts_[part] += mult;
  }
  void add(const Partition& p) {
    for (const auto& b : p.blocks()) add(b.part, b.mult);
  }
  std::uint64_t count(part_t part) const {
    auto it = counts_.find(part);
    return it == counts_.end() ? 0 : it->second;
  }
  bool take(part_t part, std::uint64_t mult = 1) {
    if (mult == 0) return true;
    auto it = counts_.find(part);
    if (it == counts_.end() || it->second < mult) return false;
    it->second -= mult;
    if (it->second == 0) counts_.erase(it);
    return true;
  }
  Partition to_partition() const {
    std::vector<Partition::Block> blocks;
    blocks.reserve(counts_.size());
    for (auto [p, m] : counts_) blocks.push_back({p, static_cast<std::uint32_t>(m)});
    return Partition::from_blocks(std::move(blocks));
  }

 private:
  std::map<part_t, std::uint64_t> counts_;
};

OpoOverpartition assemble(PartBag bag, part_t overlined, bool tagged = false) {
  bag.add(overlined);
  return OpoOverpartition(bag.to_partition(), overlined, tagged);
}

// Forward removals are guaranteed by the case conditions.
void take_or_fail(PartBag& bag, part_t part, std::uint64_t mult, const char* where) {
  if (!bag.take(part, mult)) {
    throw std::logic_error(std::string(where) + ": missing " + std::to_string(mult) + " x " +
                           std::to_string(part));
  }
}

void take_or_not_in_image(PartBag& bag, part_t part, std::int64_t mult, const OpoOverpartition& image) {
  if (mult < 0 || !bag.take(part, static_cast<std::uint64_t>(mult))) {
    throw not_in_image_error("(" + image.to_string() + ") cannot supply " + std::to_string(mult) +
                             " copies of part " + std::to_string(part));
  }
}

// (c*t^k) for o = c*(t+1)^k.
part_t descended_value(part_t o, std::uint32_t t) {
  auto [k, c] = t_adic_factor(o, t + 1);
  return static_cast<part_t>(c * power(t, k));
}

PartBag descend_all(const Partition& parts, std::uint32_t t, PartMapKind kind) {
  PartBag bag;
  for (const auto& b : parts.blocks()) {
    Partition frag = apply_part_map(kind, b.part, t);
    for (std::uint32_t i = 0; i < b.mult; ++i) bag.add(frag);
  }
  return bag;
}

PartBag ascend_all(const Partition& parts, std::uint32_t t, PartMapKind kind) {
  PartBag bag;
  for (const auto& b : parts.blocks()) {
    bag.add(apply_part_map(kind, b.part, t).largest(), b.mult);
  }
  return bag;
}

void require_regime(MapId id, std::uint32_t t) {
  if (!map_defined_for(id, t)) {
    bool phi = id == MapId::phi1 || id == MapId::phi2 || id == MapId::phi3;
    throw domain_error(std::string(map_name(id)) + " needs " + (phi ? "odd t >= 3" : "even t >= 4") +
                       ", got t=" + std::to_string(t));
  }
}

struct Image {
  SetId hit;
  int case_number;
  OpoOverpartition output;
};

// Inverse shared by phi1, phi2 and the even-c branches of the even maps:
// every part (overlined included) m -> m + g(m), then drop the surplus ones.
OpoOverpartition lift_everything(const OpoOverpartition& mu, std::uint32_t t) {
  PartBag bag = ascend_all(mu.plain_parts(), t, PartMapKind::ascend);
  take_or_not_in_image(bag, 1, total_lift_deficit(mu.base, t), mu);
  return assemble(std::move(bag), mu.overlined + static_cast<part_t>(lift_deficit(mu.overlined, t)));
}

Image phi1(const OpoOverpartition& x, std::uint32_t t) {
  auto [k, c] = t_adic_factor(x.overlined, t + 1);
  part_t h = descended_value(x.overlined, t);
  if (c % 2 == 0) {
    PartBag bag = descend_all(x.plain_parts(), t, PartMapKind::descend);
    bag.add(1, x.overlined - h);
    return {SetId::A1, 1, assemble(std::move(bag), h)};
  }
  PartBag bag(x.plain_parts());
  bag.add(1, x.overlined - h);
  return {SetId::C, 2, assemble(std::move(bag), h)};
}

Image phi2(const OpoOverpartition& x, std::uint32_t t) {
  auto [k, c] = t_adic_factor(x.overlined, t + 1);
  PartBag bag = descend_all(x.plain_parts(), t, PartMapKind::descend);
  if (c % 2 == 1 && k == 1) return {SetId::D, 1, assemble(std::move(bag), x.overlined)};
  part_t h = c % 2 == 1 ? static_cast<part_t>(c * power(t, k - 1) * (t + 1)) : descended_value(x.overlined, t);
  bag.add(1, x.overlined - h);
  return {SetId::D, c % 2 == 1 ? 2 : 3, assemble(std::move(bag), h)};
}

Image phi3_like(const OpoOverpartition& x, std::uint32_t t) {
  const bool even = t % 2 == 0;
  const Partition plain = x.plain_parts();
  PartBag bag = descend_all(plain, t, PartMapKind::descend_keep_2t2);
  const std::uint32_t ones = plain.multiplicity(1);
  const std::uint32_t big = plain.multiplicity(2 * t + 2);
  const char* where = even ? "zeta3" : "phi3";

  if (x.overlined == 2 * t + 1) return {SetId::E, 1, assemble(std::move(bag), x.overlined)};
  // Remaining cases have o = 2t - 1.
  if (ones >= 4) {
    take_or_fail(bag, 1, 4, where);
    return {SetId::E, 2, assemble(std::move(bag), 2 * t + 3)};
  }
  if (big >= 2) {
    bag.add(t, 4);
    take_or_fail(bag, 2 * t + 2, 2, where);
    return {SetId::E, 3, assemble(std::move(bag), 2 * t + 3)};
  }
  if (ones == 0 && big == 0) {
    if (even && t == 4) {
      bool has_multiple_of_5 = false;
      for (const auto& b : plain.blocks()) has_multiple_of_5 |= b.part % 5 == 0;
      if (has_multiple_of_5) {
        take_or_fail(bag, 1, 1, where);
        return {SetId::Ahat4, 4, assemble(std::move(bag), 8, true)};
      }
      bag.add(3);
      return {SetId::Ahat4, 4, assemble(std::move(bag), 4, true)};
    }
    if (even) {
      bag.add(t);
      bag.add(t - 3);
      return {SetId::A2, 4, assemble(std::move(bag), 2)};
    }
    bag.add(t);
    return {SetId::A2, 4, assemble(std::move(bag), t - 1)};
  }
  if (big == 0 && ones <= 2) {
    take_or_fail(bag, 1, 1, where);
    return {SetId::A2, 5, assemble(std::move(bag), 2 * t)};
  }
  if (big == 0) {  // ones == 3
    take_or_fail(bag, 1, 3, where);
    bag.add(t, 2);
    return {SetId::A2, 6, assemble(std::move(bag), 2)};
  }
  // big == 1
  take_or_fail(bag, 2 * t + 2, 1, where);
  if (ones == 0) {
    bag.add(t, 2);
    bag.add(1);
    return {SetId::A2, 7, assemble(std::move(bag), 2 * t)};
  }
  take_or_fail(bag, 1, 1, where);
  bag.add(2 * t, 2);
  return {SetId::A2, 8, assemble(std::move(bag), 2)};
}

OpoOverpartition phi3_like_inverse(const OpoOverpartition& mu, std::uint32_t t) {
  const bool even = t % 2 == 0;
  const std::int64_t s = case_signature(mu, t);
  const part_t o = mu.overlined;
  const Partition plain = mu.plain_parts();

  // Undo the part map on `nu`, add `extra`, overline `result_overlined`.
  auto finish = [&](const Partition& nu, std::initializer_list<std::pair<part_t, std::uint32_t>> extra,
                    part_t result_overlined) {
    PartBag bag = ascend_all(nu, t, PartMapKind::ascend_keep_2t);
    for (auto [p, m] : extra) bag.add(p, m);
    take_or_not_in_image(bag, 1, total_lift_deficit(nu, t, 2 * t), mu);
    return assemble(std::move(bag), result_overlined);
  };
  auto without = [&](std::initializer_list<std::pair<part_t, std::uint32_t>> removed) {
    PartBag bag(plain);
    for (auto [p, m] : removed) take_or_not_in_image(bag, p, m, mu);
    return bag.to_partition();
  };

  if (mu.tagged) {
    if (even && t == 4) {
      if (o == 8 && s == -1) return finish(plain, {{1, 1}}, 7);
      if (o == 4 && plain.contains(3)) return finish(without({{3, 1}}), {}, 7);
    }
    throw not_in_image_error("tagged (" + mu.to_string() + ") matches no case");
  }
  if (o == 2 * t + 1) return finish(plain, {}, o);
  if (o == 2 * t + 3) {
    if (s >= 0) return finish(plain, {{1, 4}}, 2 * t - 1);
    return finish(without({{t, 4}}), {{2 * t + 2, 2}}, 2 * t - 1);
  }
  if (!(even && t == 4) && s == -1 && o == (even ? 2 : t - 1)) {
    if (even) return finish(without({{t, 1}, {t - 3, 1}}), {}, 2 * t - 1);
    return finish(without({{t, 1}}), {}, 2 * t - 1);
  }
  if (o == 2 * t && (s == 0 || s == 1)) return finish(plain, {{1, 1}}, 2 * t - 1);
  if (o == 2 && s == -2) return finish(without({{t, 2}}), {{1, 3}}, 2 * t - 1);
  if (o == 2 * t && s == -1) return finish(without({{t, 2}, {1, 1}}), {{2 * t + 2, 1}}, 2 * t - 1);
  if (o == 2 && s >= 0 && s <= 2) return finish(without({{2 * t, 2}}), {{2 * t + 2, 1}, {1, 1}}, 2 * t - 1);
  throw not_in_image_error("(" + mu.to_string() + ") has signature (o=" + std::to_string(o) +
                           ", " + std::to_string(s) + ") matching no case");
}

Image zeta1(const OpoOverpartition& x, std::uint32_t t) {
  part_t h = descended_value(x.overlined, t);
  if (set_membership(SetId::B, t, x)) {
    PartBag bag(x.plain_parts());
    bag.add(1, x.overlined - h);
    return {SetId::Ahat3, 1, assemble(std::move(bag), h, true)};
  }
  PartBag bag = descend_all(x.plain_parts(), t, PartMapKind::descend);
  bag.add(1, x.overlined - h);
  return {SetId::Ahat3, 2, assemble(std::move(bag), h, true)};
}

OpoOverpartition zeta1_inverse(const OpoOverpartition& mu, std::uint32_t t) {
  if (!mu.tagged) throw not_in_image_error("(" + mu.to_string() + ") is not tagged");
  auto [k, c] = t_adic_factor(mu.overlined, t);
  if (c % 2 == 1) {
    PartBag bag(mu.plain_parts());
    take_or_not_in_image(bag, 1, static_cast<std::int64_t>(lift_deficit(mu.overlined, t)), mu);
    return assemble(std::move(bag), mu.overlined + static_cast<part_t>(lift_deficit(mu.overlined, t)));
  }
  return lift_everything(mu, t);
}

Image zeta2(const OpoOverpartition& x, std::uint32_t t) {
  auto [k, c] = t_adic_factor(x.overlined, t + 1);
  // Both cases produce c*t^k; they differ in how the inverse recognises them.
  part_t h = static_cast<part_t>(c * power(t, k));
  PartBag bag = descend_all(x.plain_parts(), t, PartMapKind::descend);
  bag.add(1, x.overlined - h);
  return {SetId::A1, c % t == 0 ? 1 : 2, assemble(std::move(bag), h)};
}

OpoOverpartition zeta2_inverse(const OpoOverpartition& mu, std::uint32_t t) {
  if (mu.tagged) throw not_in_image_error("(" + mu.to_string() + ") is tagged");
  auto [k, c] = t_adic_factor(mu.overlined, t);
  if (c % 2 == 0) return lift_everything(mu, t);
  if (k == 0) throw not_in_image_error("(" + mu.to_string() + ") has an odd overlined part");
  const std::uint64_t tail = c * power(t + 1, k - 1);
  PartBag bag = ascend_all(mu.plain_parts(), t, PartMapKind::ascend);
  take_or_not_in_image(bag, 1, total_lift_deficit(mu.base, t) - static_cast<std::int64_t>(tail), mu);
  return assemble(std::move(bag), static_cast<part_t>(tail * t));
}

Image forward(MapId id, std::uint32_t t, const OpoOverpartition& x) {
  switch (id) {
    case MapId::phi1: return phi1(x, t);
    case MapId::phi2: return phi2(x, t);
    case MapId::phi3: return phi3_like(x, t);
    case MapId::zeta1: return zeta1(x, t);
    case MapId::zeta2: return zeta2(x, t);
    case MapId::zeta3: return phi3_like(x, t);
  }
  throw domain_error("unknown map");
}

}  // namespace

const char* map_name(MapId id) {
  switch (id) {
    case MapId::phi1: return "phi1";
    case MapId::phi2: return "phi2";
    case MapId::phi3: return "phi3";
    case MapId::zeta1: return "zeta1";
    case MapId::zeta2: return "zeta2";
    case MapId::zeta3: return "zeta3";
  }
  return "?";
}

MapId parse_map_id(const std::string& text) {
  for (MapId id : kAllMaps) {
    if (text == map_name(id)) return id;
  }
  throw parse_error("unknown map '" + text + "' (expected phi1, phi2, phi3, zeta1, zeta2, zeta3)");
}

bool map_defined_for(MapId id, std::uint32_t t) {
  bool phi = id == MapId::phi1 || id == MapId::phi2 || id == MapId::phi3;
  return phi ? (t >= 3 && t % 2 == 1) : (t >= 4 && t % 2 == 0);
}

std::vector<SetId> map_domain(MapId id) {
  switch (id) {
    case MapId::phi1:
    case MapId::phi2: return {SetId::B};
    case MapId::phi3:
    case MapId::zeta3: return {SetId::F};
    case MapId::zeta1: return {SetId::B, SetId::C};
    case MapId::zeta2: return {SetId::D};
  }
  return {};
}

std::vector<SetId> map_codomain(MapId id, std::uint32_t t) {
  switch (id) {
    case MapId::phi1: return {SetId::A1, SetId::C};
    case MapId::phi2: return {SetId::D};
    case MapId::phi3: return {SetId::E, SetId::A2};
    case MapId::zeta1: return {SetId::Ahat3};
    case MapId::zeta2: return {SetId::A1};
    case MapId::zeta3:
      if (t == 4) return {SetId::E, SetId::A2, SetId::Ahat4};
      return {SetId::E, SetId::A2};
  }
  return {};
}

Partition apply_part_map(PartMapKind kind, part_t part, std::uint32_t t) {
  if (part == 0) throw domain_error("parts must be positive");
  switch (kind) {
    case PartMapKind::descend_keep_2t2:
      if (part == 2 * t + 2) return Partition::from_blocks({{part, 1}});
      [[fallthrough]];
    case PartMapKind::descend: {
      part_t h = descended_value(part, t);
      return Partition::from_blocks({{h, 1}, {1, part - h}});
    }
    case PartMapKind::ascend_keep_2t:
      if (part == 2 * t) return Partition::from_blocks({{part, 1}});
      [[fallthrough]];
    case PartMapKind::ascend:
      return Partition::from_blocks({{part + static_cast<part_t>(lift_deficit(part, t)), 1}});
  }
  throw domain_error("unknown part map");
}

std::int64_t case_signature(const OpoOverpartition& x, std::uint32_t t) {
  return static_cast<std::int64_t>(x.base.multiplicity(1)) -
         total_lift_deficit(x.plain_parts(), t, 2 * t);
}

MapTrace apply_map(MapId id, std::uint32_t t, const OpoOverpartition& input) {
  require_regime(id, t);
  bool in_domain = false;
  for (SetId s : map_domain(id)) in_domain |= set_membership(s, t, input);
  if (!in_domain) {
    std::string names;
    for (SetId s : map_domain(id)) names += (names.empty() ? "" : " or ") + std::string(set_name(s));
    throw domain_error("(" + input.to_string() + ") is not in " + names + " for t=" + std::to_string(t));
  }
  Image img = forward(id, t, input);
  return MapTrace{input, std::string(map_name(id)) + "/Case " + std::to_string(img.case_number),
                  img.case_number, std::move(img.output), img.hit};
}

OpoOverpartition invert_map(MapId id, std::uint32_t t, const OpoOverpartition& image) {
  require_regime(id, t);
  OpoOverpartition pre = [&] {
    switch (id) {
      case MapId::phi1:
      case MapId::phi2:
        if (image.tagged) throw not_in_image_error("(" + image.to_string() + ") is tagged");
        return lift_everything(image, t);
      case MapId::phi3:
      case MapId::zeta3: return phi3_like_inverse(image, t);
      case MapId::zeta1: return zeta1_inverse(image, t);
      case MapId::zeta2: return zeta2_inverse(image, t);
    }
    throw domain_error("unknown map");
  }();
  bool in_domain = false;
  for (SetId s : map_domain(id)) in_domain |= set_membership(s, t, pre);
  if (!in_domain || pre.weight() != image.weight()) {
    throw not_in_image_error("(" + image.to_string() + ") pulls back to (" + pre.to_string() +
                             "), outside the domain of " + map_name(id));
  }
  return pre;
}

}  // namespace hookbias
