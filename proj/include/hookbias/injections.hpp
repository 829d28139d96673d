#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hookbias/opo.hpp"

namespace hookbias {

enum class MapId { phi1, phi2, phi3, zeta1, zeta2, zeta3 };

inline constexpr MapId kAllMaps[] = {MapId::phi1,  MapId::phi2,  MapId::phi3,
                                     MapId::zeta1, MapId::zeta2, MapId::zeta3};

const char* map_name(MapId id);
MapId parse_map_id(const std::string& text);
/// phi maps need odd t >= 3, zeta maps even t >= 4.
bool map_defined_for(MapId id, std::uint32_t t);
std::vector<SetId> map_domain(MapId id);
std::vector<SetId> map_codomain(MapId id, std::uint32_t t);

struct MapTrace {
  OpoOverpartition input;
  /// "phi3/Case 7" style label.
  std::string case_label;
  int case_number = 0;
  OpoOverpartition output;
  SetId codomain_hit;
};

enum class PartMapKind {
  /// c*(t+1)^k -> (c*t^k, 1^rest) for (t+1) not dividing c; weight-preserving.
  descend,
  /// As descend, but 2t+2 is left alone.
  descend_keep_2t2,
  /// m -> m + lift_deficit(m); the caller removes the surplus ones.
  ascend,
  /// As ascend, but 2t is left alone.
  ascend_keep_2t,
};

/// Image of a single non-overlined part, as a multiset fragment.
Partition apply_part_map(PartMapKind kind, part_t part, std::uint32_t t);

/// Forward map. Throws domain_error when t has the wrong parity or the input
/// is outside the map's domain.
MapTrace apply_map(MapId id, std::uint32_t t, const OpoOverpartition& input);

/// Inverse map, dispatched only from what is visible in `image`. Throws
/// not_in_image_error when no case of the forward map can produce it, and
/// domain_error on a parity mismatch.
OpoOverpartition invert_map(MapId id, std::uint32_t t, const OpoOverpartition& image);

/// f(1) minus the lift deficits of the non-overlined parts other than 2t.
/// This is the quantity the inverse of phi3/zeta3 dispatches on.
std::int64_t case_signature(const OpoOverpartition& x, std::uint32_t t);

}  // namespace hookbias
