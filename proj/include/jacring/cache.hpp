#ifndef JACRING_CACHE_HPP
#define JACRING_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace jacring::cache {

/// One computed slice: dimension and ideal rank of B_q(l) for an instance
/// identified by its content hash.  Entries are immutable once written; an
/// engine version mismatch invalidates them.
struct CacheEntry {
    std::string instance_hash;
    int q = 0;
    long l = 0;
    std::size_t dim = 0;
    std::size_t rank = 0;
    long long timestamp = 0;
    std::string engine_version;
};

/// One file per (hash, q, l) under the cache directory.  Writes go through a
/// temp file plus rename, so readers never observe partial entries.
class SliceCache {
  public:
    explicit SliceCache(std::filesystem::path dir);

    std::optional<CacheEntry> get(const std::string& instance_hash, int q, long l) const;
    void put(const CacheEntry& entry) const;

    const std::filesystem::path& dir() const { return dir_; }

  private:
    std::filesystem::path entry_path(const std::string& hash, int q, long l) const;
    std::filesystem::path dir_;
};

}  // namespace jacring::cache

#endif
