#include "jacring/cache.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <fstream>

#include "jacring/errors.hpp"
#include "jacring/version.hpp"

namespace jacring::cache {

using json = nlohmann::ordered_json;

SliceCache::SliceCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw ContractError("cannot create cache directory " + dir_.string() + ": " + ec.message());
}

std::filesystem::path SliceCache::entry_path(const std::string& hash, int q, long l) const {
    return dir_ / (hash + "_q" + std::to_string(q) + "_l" + std::to_string(l) + ".json");
}

std::optional<CacheEntry> SliceCache::get(const std::string& instance_hash, int q, long l) const {
    std::ifstream in(entry_path(instance_hash, q, l));
    if (!in) return std::nullopt;
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error&) {
        return std::nullopt;  // treat unparsable entries as misses
    }
    CacheEntry e;
    try {
        e.engine_version = j.at("engine_version").get<std::string>();
        if (e.engine_version != kEngineVersion) return std::nullopt;
        e.instance_hash = j.at("instance_hash").get<std::string>();
        e.q = j.at("q").get<int>();
        e.l = j.at("l").get<long>();
        e.dim = j.at("dim").get<std::size_t>();
        e.rank = j.at("rank").get<std::size_t>();
        e.timestamp = j.value("timestamp", 0LL);
    } catch (const json::exception&) {
        return std::nullopt;
    }
    if (e.instance_hash != instance_hash || e.q != q || e.l != l) return std::nullopt;
    return e;
}

void SliceCache::put(const CacheEntry& entry) const {
    json j;
    j["engine_version"] = entry.engine_version.empty() ? kEngineVersion : entry.engine_version;
    j["instance_hash"] = entry.instance_hash;
    j["q"] = entry.q;
    j["l"] = entry.l;
    j["dim"] = entry.dim;
    j["rank"] = entry.rank;
    j["timestamp"] = entry.timestamp
                         ? entry.timestamp
                         : static_cast<long long>(std::chrono::duration_cast<std::chrono::seconds>(
                                                      std::chrono::system_clock::now().time_since_epoch())
                                                      .count());

    static std::atomic<unsigned> counter{0};
    std::filesystem::path tmp =
        dir_ / ("tmp_" + std::to_string(::getpid()) + "_" + std::to_string(counter.fetch_add(1)) +
                "_" + entry.instance_hash);
    {
        std::ofstream out(tmp);
        if (!out) throw ContractError("cache directory not writable: " + dir_.string());
        out << j.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, entry_path(entry.instance_hash, entry.q, entry.l));
}

}  // namespace jacring::cache
