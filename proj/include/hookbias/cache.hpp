#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace hookbias {

/// Identifies a cached vector of values indexed by n = 0..degree.
struct CacheKey {
  std::string kind;  // "series" or "cardinality"
  std::uint32_t t = 0;
  std::string id;    // series or set name
  std::uint32_t degree = 0;
};

/// One file per entry, named by a hash of the key and the code version.
/// Entries carry a checksum; unreadable or mismatching entries count as
/// misses. Writes go to a temporary file and are renamed into place, so
/// concurrent writers never expose a partial entry.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const noexcept { return dir_; }

  /// Exact hit, or the first degree+1 values of a longer entry for the same
  /// (kind, t, id).
  std::optional<std::vector<std::string>> load(const CacheKey& key) const;
  /// Longest valid entry for (kind, t, id), whatever its degree.
  std::optional<std::vector<std::string>> load_longest(const std::string& kind, std::uint32_t t,
                                                       const std::string& id) const;
  /// Best-effort: I/O failures are swallowed, the cache is an accelerator.
  void store(const CacheKey& key, const std::vector<std::string>& values) const;

  std::filesystem::path entry_path(const CacheKey& key) const;

 private:
  std::filesystem::path dir_;
};

/// Stamp mixed into every key; bump when any cached quantity changes meaning.
inline constexpr const char* kCacheVersion = "hookbias-cache-1";

}  // namespace hookbias
