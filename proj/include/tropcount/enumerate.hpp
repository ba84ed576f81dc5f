#ifndef TROPCOUNT_ENUMERATE_HPP
#define TROPCOUNT_ENUMERATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "tropcount/bruteforce.hpp"
#include "tropcount/latticepath.hpp"

namespace tropcount {

// Point configuration: either synthesized on a stretched line or explicit.
struct PointConfiguration {
    enum class Mode { stretched, explicit_points };
    Mode mode = Mode::stretched;
    IVec direction{1, 0};      // stretched: primitive line direction
    long long stretch = 1 << 14;  // stretched: spacing ratio between points
    QVec base;                 // stretched: line base point
    int count = 0;             // number of points (n - delta)
    std::vector<QVec> points;  // explicit mode; synthesized otherwise

    Json to_json() const;
    static PointConfiguration from_json(const Json& j);
    std::string canonical_string() const;
};

// Concrete points of a configuration (synthesizes stretched ones).
std::vector<QVec> configuration_points(const PointConfiguration& config);

// Default stretched configuration for a polygon.
PointConfiguration default_configuration(const LatticePolygon& polygon, int delta);

enum class Engine { automatic, lattice_path, brute_force };

struct EnumerateOptions {
    Engine engine = Engine::automatic;
    int jobs = 1;
    long long budget = 2'000'000;  // cap on expanded subdivisions / tilings
};

struct EnumerationResult {
    LatticePolygon polygon;
    int delta = 0;
    int genus = 0;  // of the enumerated curves: g - delta
    PointConfiguration configuration;
    std::vector<TropicalCurve> curves;

    Json to_json() const;
    static EnumerationResult from_json(const Json& j);
};

// Every simple tropical curve of degree `polygon` and genus g - delta
// through the configuration points, in canonical order.
EnumerationResult enumerate_curves(const LatticePolygon& polygon, int delta,
                                   const PointConfiguration& config,
                                   const EnumerateOptions& options = {});

// Wraps externally supplied curves after full validation. Throws a
// ValidationError carrying the per-curve report when any curve fails.
EnumerationResult ingest_curves(const LatticePolygon& polygon, int delta,
                                const std::vector<Json>& curve_jsons);

// Order functional matching a stretched direction.
OrderFunctional order_for_direction(IVec direction);

} // namespace tropcount

#endif
