#include "hookbias/cache.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

namespace hookbias {

namespace {

std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::uint64_t payload_checksum(const std::vector<std::string>& values) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& v : values) h = fnv1a(v + "\n", h);
  return h;
}

struct Entry {
  CacheKey key;
  std::vector<std::string> values;
};

std::optional<Entry> read_entry(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string magic, version, checksum;
  Entry e;
  std::string label;
  if (!std::getline(in, magic) || magic != "hookbias-cache") return std::nullopt;
  if (!(in >> label >> version) || label != "version" || version != kCacheVersion) return std::nullopt;
  if (!(in >> label >> e.key.kind) || label != "kind") return std::nullopt;
  if (!(in >> label >> e.key.t) || label != "t") return std::nullopt;
  if (!(in >> label >> e.key.id) || label != "id") return std::nullopt;
  if (!(in >> label >> e.key.degree) || label != "degree") return std::nullopt;
  if (!(in >> label >> checksum) || label != "checksum") return std::nullopt;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) e.values.push_back(line);
  if (e.values.size() != std::size_t{e.key.degree} + 1) return std::nullopt;
  if (hex(payload_checksum(e.values)) != checksum) return std::nullopt;
  return e;
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ResultCache::entry_path(const CacheKey& key) const {
  std::string k = key.kind + "|" + std::to_string(key.t) + "|" + key.id + "|" +
                  std::to_string(key.degree) + "|" + kCacheVersion;
  return dir_ / (hex(fnv1a(k)) + ".entry");
}

std::optional<std::vector<std::string>> ResultCache::load(const CacheKey& key) const {
  if (auto e = read_entry(entry_path(key));
      e && e->key.kind == key.kind && e->key.t == key.t && e->key.id == key.id && e->key.degree == key.degree) {
    return std::move(e->values);
  }
  auto longest = load_longest(key.kind, key.t, key.id);
  if (longest && longest->size() > key.degree) {
    longest->resize(std::size_t{key.degree} + 1);
    return longest;
  }
  return std::nullopt;
}

std::optional<std::vector<std::string>> ResultCache::load_longest(const std::string& kind, std::uint32_t t,
                                                                  const std::string& id) const {
  std::error_code ec;
  std::optional<std::vector<std::string>> best;
  for (std::filesystem::directory_iterator it(dir_, ec), end; !ec && it != end; it.increment(ec)) {
    if (it->path().extension() != ".entry") continue;
    auto e = read_entry(it->path());
    if (!e || e->key.kind != kind || e->key.t != t || e->key.id != id) continue;
    if (!best || e->values.size() > best->size()) best = std::move(e->values);
  }
  return best;
}

void ResultCache::store(const CacheKey& key, const std::vector<std::string>& values) const {
  static std::atomic<std::uint64_t> counter{0};
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const auto target = entry_path(key);
  std::ostringstream tmp_name;
  tmp_name << target.filename().string() << ".tmp." << ::getpid() << "." << std::hash<std::thread::id>{}(std::this_thread::get_id())
           << "." << counter++;
  const auto tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << "hookbias-cache\n"
        << "version " << kCacheVersion << "\n"
        << "kind " << key.kind << "\n"
        << "t " << key.t << "\n"
        << "id " << key.id << "\n"
        << "degree " << key.degree << "\n"
        << "checksum " << hex(payload_checksum(values)) << "\n";
    for (const auto& v : values) out << v << "\n";
    if (!out) {
      out.close();
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace hookbias
