#include "tropcount/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace tropcount {

std::string cache_dir_from_env() {
    const char* v = std::getenv(kCacheEnvVar);
    return v ? std::string(v) : std::string();
}

std::string ResultCache::key(const LatticePolygon& polygon, int delta,
                             const PointConfiguration& config, Engine engine) const {
    std::string s = polygon.to_json().dump() + "#" + std::to_string(delta) + "#" +
                    config.canonical_string() + "#" +
                    std::to_string(static_cast<int>(engine)) + "#v" +
                    std::to_string(kCacheSchemaVersion);
    return hex64(fnv1a(s));
}

std::optional<EnumerationResult> ResultCache::load(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::filesystem::path p = std::filesystem::path(dir_) / (key + ".json");
    std::ifstream in(p);
    if (!in) return std::nullopt;
    try {
        Json j = Json::parse(in);
        if (j.value("schema_version", -1) != kCacheSchemaVersion) return std::nullopt;
        return EnumerationResult::from_json(j);
    } catch (...) {
        return std::nullopt;  // treat unreadable entries as misses
    }
}

void ResultCache::store(const std::string& key, const EnumerationResult& result) const {
    if (!enabled()) return;
    std::filesystem::create_directories(dir_);
    std::filesystem::path p = std::filesystem::path(dir_) / (key + ".json");
    std::ofstream out(p);
    out << result.to_json().dump(1) << "\n";
}

} // namespace tropcount
