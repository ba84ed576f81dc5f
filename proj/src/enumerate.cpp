#include "tropcount/enumerate.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tropcount/errors.hpp"

namespace tropcount {

Json PointConfiguration::to_json() const {
    Json j;
    j["mode"] = mode == Mode::stretched ? "stretched" : "explicit";
    if (mode == Mode::stretched) {
        j["direction"] = {direction.x, direction.y};
        j["stretch"] = stretch;
        j["base"] = {to_string(base.x), to_string(base.y)};
        j["count"] = count;
    } else {
        Json pts = Json::array();
        for (const auto& p : points) pts.push_back({to_string(p.x), to_string(p.y)});
        j["points"] = pts;
    }
    return j;
}

PointConfiguration PointConfiguration::from_json(const Json& j) {
    PointConfiguration c;
    std::string mode = j.value("mode", "stretched");
    if (mode == "stretched") {
        c.mode = Mode::stretched;
        if (j.contains("direction"))
            c.direction = IVec{j["direction"][0].get<long long>(), j["direction"][1].get<long long>()};
        if (!(primitive(c.direction) == c.direction) || (c.direction == IVec{0, 0}))
            throw ValidationError("stretched direction must be a primitive vector");
        c.stretch = j.value("stretch", (long long)(1 << 14));
        if (c.stretch < 2) throw ValidationError("stretch ratio must be at least 2");
        if (j.contains("base"))
            c.base = QVec(rat_from_string(j["base"][0].get<std::string>()),
                          rat_from_string(j["base"][1].get<std::string>()));
        if (j.contains("count")) c.count = j["count"].get<int>();
    } else if (mode == "explicit") {
        c.mode = Mode::explicit_points;
        if (!j.contains("points") || !j["points"].is_array())
            throw ValidationError("explicit configuration needs a points array");
        for (const auto& p : j["points"])
            c.points.push_back(QVec(rat_from_string(p[0].get<std::string>()),
                                    rat_from_string(p[1].get<std::string>())));
        c.count = (int)c.points.size();
    } else {
        throw ValidationError("configuration mode must be stretched or explicit");
    }
    return c;
}

std::string PointConfiguration::canonical_string() const { return to_json().dump(); }

std::vector<QVec> configuration_points(const PointConfiguration& config) {
    if (config.mode == PointConfiguration::Mode::explicit_points) return config.points;
    // Effective line direction stretch*d + rot90(d): the small rotation
    // plays the role of an irrational slope at every relevant scale.
    IVec d = config.direction;
    IVec r = rot90(d);
    Rat ratio = make_rat(config.stretch);
    QVec D(ratio * make_rat(d.x) + make_rat(r.x), ratio * make_rat(d.y) + make_rat(r.y));
    std::vector<QVec> pts;
    Rat t(1);
    for (int j = 0; j < config.count; ++j) {
        t *= ratio;
        pts.push_back(config.base + t * D);
    }
    return pts;
}

PointConfiguration default_configuration(const LatticePolygon& polygon, int delta) {
    PolygonStats st = polygon_stats(polygon);
    long long xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    for (IVec v : polygon.vertices()) {
        xmin = std::min(xmin, v.x); xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y); ymax = std::max(ymax, v.y);
    }
    PointConfiguration c;
    c.mode = PointConfiguration::Mode::stretched;
    c.direction = IVec{1, -(2 * (xmax - xmin + ymax - ymin) + 3)};
    c.base = QVec(Rat(1, 7), Rat(3, 11));
    c.base.x.canonicalize();
    c.base.y.canonicalize();
    c.count = (int)(st.total_points - 1 - delta);
    return c;
}

OrderFunctional order_for_direction(IVec direction) {
    // Lexicographic surrogate for the functional -(stretch*d + rot90(d)).
    return OrderFunctional{-direction, -rot90(direction)};
}

Json EnumerationResult::to_json() const {
    Json j;
    j["schema_version"] = 1;
    j["polygon"] = polygon.to_json();
    j["delta"] = delta;
    j["genus"] = genus;
    j["configuration"] = configuration.to_json();
    j["curve_count"] = curves.size();
    Json cs = Json::array();
    for (const auto& c : curves) cs.push_back(c.to_json());
    j["curves"] = cs;
    return j;
}

EnumerationResult EnumerationResult::from_json(const Json& j) {
    EnumerationResult r{LatticePolygon::from_json(j.at("polygon")), j.at("delta").get<int>(),
                        j.at("genus").get<int>(),
                        PointConfiguration::from_json(j.at("configuration")),
                        {}};
    for (const auto& cj : j.at("curves")) r.curves.push_back(TropicalCurve::from_json(cj));
    return r;
}

EnumerationResult enumerate_curves(const LatticePolygon& polygon, int delta,
                                   const PointConfiguration& config,
                                   const EnumerateOptions& options) {
    PolygonStats st = polygon_stats(polygon);
    if (delta < 0 || delta > st.interior_points)
        throw ValidationError("delta must lie between 0 and the interior point count");
    int r = (int)(st.total_points - 1 - delta);
    int target_genus = (int)st.interior_points - delta;
    if (config.count != r && !(config.mode == PointConfiguration::Mode::explicit_points &&
                               (int)config.points.size() == r))
        throw ValidationError("configuration must supply " + std::to_string(r) + " points");

    std::vector<QVec> points = configuration_points(config);
    if ((int)points.size() != r)
        throw ValidationError("configuration must supply " + std::to_string(r) + " points");

    Engine engine = options.engine;
    if (engine == Engine::automatic)
        engine = config.mode == PointConfiguration::Mode::stretched ? Engine::lattice_path
                                                                    : Engine::brute_force;
    if (engine == Engine::lattice_path && config.mode != PointConfiguration::Mode::stretched)
        throw ValidationError("the lattice path engine needs a stretched configuration");

    EnumerationResult result{polygon, delta, target_genus, config, {}};

    if (engine == Engine::brute_force) {
        auto bf = brute_force_curves(polygon, target_genus, points, options.budget, options.jobs);
        result.curves = std::move(bf.curves);
        return result;
    }

    OrderFunctional order = order_for_direction(config.direction);
    auto subs =
        lattice_path_subdivisions(polygon, r, order, options.budget, options.jobs);

    std::vector<const MarkedSubdivision*> eligible;
    for (const auto& ms : subs) {
        auto topo = dual_topology(ms.sub);
        if (topo.connected && topo.genus == target_genus) eligible.push_back(&ms);
    }

    std::vector<std::optional<TropicalCurve>> realized(eligible.size());
    std::vector<int> failed(eligible.size(), 0);
    std::exception_ptr failure = nullptr;
#ifdef _OPENMP
    omp_set_num_threads(std::max(1, options.jobs));
#endif
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < (int)eligible.size(); ++i) {
        try {
            auto res = realize(*eligible[i], points);
            if (res.status == RealizeStatus::realized)
                realized[i] = std::move(res.curve);
            else
                failed[i] = res.status == RealizeStatus::underdetermined ? 2 : 1;
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    for (int i = 0; i < (int)eligible.size(); ++i)
        if (failed[i])
            throw InternalError(
                "a lattice path type failed to realize; increase the stretch ratio");

    for (auto& c : realized)
        if (c) result.curves.push_back(std::move(*c));
    std::sort(result.curves.begin(), result.curves.end(),
              [](const TropicalCurve& a, const TropicalCurve& b) {
                  return a.canonical_key() < b.canonical_key();
              });
    return result;
}

EnumerationResult ingest_curves(const LatticePolygon& polygon, int delta,
                                const std::vector<Json>& curve_jsons) {
    PolygonStats st = polygon_stats(polygon);
    if (delta < 0 || delta > st.interior_points)
        throw ValidationError("delta must lie between 0 and the interior point count");

    EnumerationResult result{polygon, delta, (int)st.interior_points - delta, {}, {}};
    result.configuration.mode = PointConfiguration::Mode::explicit_points;
    result.configuration.count = (int)(st.total_points - 1 - delta);

    std::ostringstream report;
    bool any_bad = false;
    for (std::size_t i = 0; i < curve_jsons.size(); ++i) {
        std::vector<std::string> bad;
        std::optional<TropicalCurve> curve;
        try {
            curve = TropicalCurve::from_json(curve_jsons[i]);
            if (!(curve->polygon == polygon)) bad.push_back("polygon differs from the request");
            auto more = validate_curve(*curve);
            bad.insert(bad.end(), more.begin(), more.end());
        } catch (const std::exception& e) {
            bad.push_back(std::string("parse failure: ") + e.what());
        }
        if (bad.empty()) {
            result.curves.push_back(std::move(*curve));
        } else {
            any_bad = true;
            report << "curve " << i << ":";
            for (const auto& b : bad) report << "\n  - " << b;
            report << "\n";
        }
    }
    if (any_bad) throw ValidationError("curve validation failed:\n" + report.str());
    std::sort(result.curves.begin(), result.curves.end(),
              [](const TropicalCurve& a, const TropicalCurve& b) {
                  return a.canonical_key() < b.canonical_key();
              });
    return result;
}

} // namespace tropcount
