#ifndef TROPCOUNT_CACHE_HPP
#define TROPCOUNT_CACHE_HPP

#include <optional>
#include <string>

#include "tropcount/enumerate.hpp"

namespace tropcount {

inline constexpr int kCacheSchemaVersion = 1;
inline constexpr const char* kCacheEnvVar = "TROPCOUNT_CACHE_DIR";

// Advisory result cache: one JSON file per (polygon, delta, configuration,
// engine) key. Disabled when `dir` is empty.
class ResultCache {
  public:
    explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}

    bool enabled() const { return !dir_.empty(); }
    std::string key(const LatticePolygon& polygon, int delta, const PointConfiguration& config,
                    Engine engine) const;
    std::optional<EnumerationResult> load(const std::string& key) const;
    void store(const std::string& key, const EnumerationResult& result) const;

  private:
    std::string dir_;
};

std::string cache_dir_from_env();

} // namespace tropcount

#endif
