#include "tropcount/lattice.hpp"

#include <algorithm>

#include "tropcount/errors.hpp"

namespace tropcount {

LatticePolygon::LatticePolygon(std::vector<IVec> vertices) : verts_(std::move(vertices)) {
    if (verts_.size() < 3)
        throw PolygonError("polygon needs at least 3 vertices", -1);

    // Orientation from the signed area; flip clockwise input.
    long long area2 = 0;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        IVec a = verts_[i], b = verts_[(i + 1) % verts_.size()];
        area2 += cross(a, b);
    }
    if (area2 == 0) throw PolygonError("polygon is degenerate (zero area)", 0);
    if (area2 < 0) std::reverse(verts_.begin(), verts_.end());

    for (std::size_t i = 0; i < verts_.size(); ++i) {
        IVec a = verts_[i];
        IVec b = verts_[(i + 1) % verts_.size()];
        IVec c = verts_[(i + 2) % verts_.size()];
        long long turn = cross(b - a, c - b);
        if (turn < 0)
            throw PolygonError("polygon is not convex at vertex triple starting at index " +
                                   std::to_string(i),
                               (int)i);
        if (turn == 0)
            throw PolygonError("three consecutive collinear vertices starting at index " +
                                   std::to_string(i),
                               (int)i);
    }

    auto mn = std::min_element(verts_.begin(), verts_.end());
    std::rotate(verts_.begin(), mn, verts_.end());
}

long long LatticePolygon::doubled_area() const {
    long long area2 = 0;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        area2 += cross(verts_[i], verts_[(i + 1) % verts_.size()]);
    return area2;
}

long long LatticePolygon::boundary_length() const {
    long long len = 0;
    for (std::size_t i = 0; i < verts_.size(); ++i)
        len += lattice_gcd(verts_[(i + 1) % verts_.size()] - verts_[i]);
    return len;
}

bool LatticePolygon::contains(IVec p) const {
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        IVec a = verts_[i], b = verts_[(i + 1) % verts_.size()];
        if (cross(b - a, p - a) < 0) return false;
    }
    return true;
}

bool LatticePolygon::contains(const QVec& p) const {
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        QVec a(verts_[i]), b(verts_[(i + 1) % verts_.size()]);
        if (cross(b - a, p - a) < 0) return false;
    }
    return true;
}

const std::vector<IVec>& LatticePolygon::lattice_points() const {
    if (!points_cache_.empty()) return points_cache_;
    long long xmin = verts_[0].x, xmax = verts_[0].x;
    long long ymin = verts_[0].y, ymax = verts_[0].y;
    for (IVec v : verts_) {
        xmin = std::min(xmin, v.x); xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y); ymax = std::max(ymax, v.y);
    }
    for (long long x = xmin; x <= xmax; ++x)
        for (long long y = ymin; y <= ymax; ++y)
            if (contains(IVec{x, y})) points_cache_.push_back(IVec{x, y});
    std::sort(points_cache_.begin(), points_cache_.end());
    return points_cache_;
}

PolygonStats polygon_stats(const LatticePolygon& polygon) {
    PolygonStats s;
    s.doubled_area = polygon.doubled_area();
    s.boundary_length = polygon.boundary_length();
    s.total_points = (long long)polygon.lattice_points().size();
    s.interior_points = s.total_points - s.boundary_length;
    if (s.doubled_area != 2 * s.interior_points + s.boundary_length - 2)
        throw InternalError("Pick consistency failed for polygon");
    return s;
}

std::map<IVec, long long> degree_directions(const LatticePolygon& polygon) {
    std::map<IVec, long long> dirs;
    const auto& v = polygon.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        IVec e = v[(i + 1) % v.size()] - v[i];
        dirs[rot90(primitive(e))] += lattice_gcd(e);
    }
    return dirs;
}

Json LatticePolygon::to_json() const {
    Json j;
    j["vertices"] = Json::array();
    for (IVec v : verts_) j["vertices"].push_back({v.x, v.y});
    return j;
}

LatticePolygon LatticePolygon::from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw PolygonError("polygon JSON must be {\"vertices\": [[x,y], ...]}", -1);
    std::vector<IVec> vs;
    int idx = 0;
    for (const auto& e : j["vertices"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw PolygonError("polygon vertex " + std::to_string(idx) + " must be an integer pair",
                               idx);
        vs.push_back(IVec{e[0].get<long long>(), e[1].get<long long>()});
        ++idx;
    }
    return LatticePolygon(std::move(vs));
}

Json polygon_stats_json(const PolygonStats& s) {
    Json j;
    j["total_points"] = s.total_points;
    j["interior_points"] = s.interior_points;
    j["doubled_area"] = s.doubled_area;
    j["boundary_length"] = s.boundary_length;
    return j;
}

} // namespace tropcount
