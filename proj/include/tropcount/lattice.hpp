#ifndef TROPCOUNT_LATTICE_HPP
#define TROPCOUNT_LATTICE_HPP

#include <map>
#include <vector>

#include <json.hpp>

#include "tropcount/geom.hpp"

namespace tropcount {

using Json = nlohmann::ordered_json;

// Rejected polygon input; `at` is the offending vertex index (or -1).
struct PolygonError : ValidationError {
    int at;
    PolygonError(const std::string& msg, int index) : ValidationError(msg), at(index) {}
    Json to_json() const {
        Json j;
        j["error"] = what();
        j["at"] = at;
        return j;
    }
};

// Convex lattice polygon, counterclockwise, first vertex lexicographically
// minimal. Construction validates and normalizes.
class LatticePolygon {
  public:
    explicit LatticePolygon(std::vector<IVec> vertices);

    const std::vector<IVec>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }

    long long doubled_area() const;
    long long boundary_length() const;
    bool contains(IVec p) const;          // closed polygon
    bool contains(const QVec& p) const;
    const std::vector<IVec>& lattice_points() const;  // sorted lex

    bool operator==(const LatticePolygon& o) const { return verts_ == o.verts_; }

    Json to_json() const;
    static LatticePolygon from_json(const Json& j);

  private:
    std::vector<IVec> verts_;
    mutable std::vector<IVec> points_cache_;
};

struct PolygonStats {
    long long total_points = 0;     // n+1
    long long interior_points = 0;  // g
    long long doubled_area = 0;     // A
    long long boundary_length = 0;  // lattice perimeter
};

PolygonStats polygon_stats(const LatticePolygon& polygon);

// One entry per polygon edge: primitive inner normal with multiplicity the
// edge lattice length. Multiplicities sum to the boundary length.
std::map<IVec, long long> degree_directions(const LatticePolygon& polygon);

Json polygon_stats_json(const PolygonStats& s);

} // namespace tropcount

#endif
