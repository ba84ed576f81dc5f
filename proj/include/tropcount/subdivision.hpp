#ifndef TROPCOUNT_SUBDIVISION_HPP
#define TROPCOUNT_SUBDIVISION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropcount/lattice.hpp"

namespace tropcount {

// Convex cell of a subdivision: vertices counterclockwise, starting at the
// lexicographic minimum.
struct Cell {
    std::vector<IVec> verts;

    void canonicalize();
    long long doubled_area() const;
    bool is_triangle() const { return verts.size() == 3; }
    bool is_parallelogram() const;
    bool contains(IVec p) const;
    bool operator==(const Cell& o) const { return verts == o.verts; }
    bool operator<(const Cell& o) const { return verts < o.verts; }
};

// Undirected lattice segment with canonical endpoint order.
struct Seg {
    IVec a, b;
    Seg() = default;
    Seg(IVec p, IVec q) : a(p), b(q) {
        if (b < a) std::swap(a, b);
    }
    auto operator<=>(const Seg&) const = default;
    long long lattice_length() const { return lattice_gcd(b - a); }
};

using Lifting = std::map<IVec, Rat>;

// Newton subdivision of a lattice polygon: cells plus, when known, the
// lifting that induces it.
struct NewtonSubdivision {
    LatticePolygon polygon;
    std::vector<Cell> cells;  // sorted canonically
    Lifting lifting;          // defined on a superset of the cell vertices

    void canonicalize();
    std::string canonical_key() const;

    std::vector<IVec> subdivision_vertices() const;          // sorted lex
    // Edges of cells: interior ones carry their two incident cell indices,
    // boundary ones a single index.
    struct EdgeRecord {
        Seg seg;
        int cell_a = -1;
        int cell_b = -1;  // -1 on the boundary
        bool interior() const { return cell_b >= 0; }
    };
    std::vector<EdgeRecord> edge_records() const;

    Json to_json() const;
    static NewtonSubdivision from_json(const Json& j, const LatticePolygon& polygon);
};

// First Betti number and connectivity of the dual curve, computed on the
// parameterizing graph (parallelogram cells split into two strands).
struct DualTopology {
    int genus = 0;
    bool connected = true;
};
DualTopology dual_topology(const NewtonSubdivision& sub);

// Regular subdivision induced by a lifting: the maximal linearity domains
// of min_u(lift(u) + <u,v>). The lifting's domain must contain the polygon
// vertices.
std::vector<Cell> induced_subdivision(const LatticePolygon& polygon, const Lifting& lifting);

// Checks that `lifting` induces exactly `cells`; returns a description of
// the first violating pair on failure.
std::optional<std::string> regularity_violation(const NewtonSubdivision& sub);

} // namespace tropcount

#endif
