#ifndef TROPCOUNT_CURVE_HPP
#define TROPCOUNT_CURVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "tropcount/subdivision.hpp"

namespace tropcount {

// Embedded weighted balanced graph dual to a marked Newton subdivision.
// Vertices sit at exact rational positions; each edge knows the dual
// subdivision edge it is orthogonal to.
struct TropicalCurve {
    struct Edge {
        int a = -1;          // tail vertex index
        int b = -1;          // head vertex index, -1 for an unbounded ray
        IVec dir;            // primitive direction from a (toward b or to infinity)
        long long weight = 1;
        Seg dual;            // subdivision edge this one is orthogonal to
    };
    struct Marking {
        QVec point;
        int edge = -1;
        Rat param;  // position along the edge: a + param * dir
    };

    LatticePolygon polygon;
    NewtonSubdivision dual;
    std::vector<QVec> vertices;      // one per cell, same order as dual.cells
    std::vector<Edge> edges;
    std::vector<Marking> markings;

    int valence(int vertex) const;
    bool crossing(int vertex) const { return dual.cells[vertex].is_parallelogram(); }
    std::string canonical_key() const;

    Json to_json() const;
    static TropicalCurve from_json(const Json& j);
};

struct BalanceViolation {
    int vertex;
    IVec residual;
};

// Dual curve of a regular subdivision: one vertex per maximal cell at the
// gradient-dual position, weights the dual lattice lengths.
TropicalCurve curve_from_subdivision(const NewtonSubdivision& sub);

std::vector<BalanceViolation> check_balanced(const TropicalCurve& curve);

// Smallest first Betti number of the parameterizing graph. Requires a
// simple curve (trivalent plus transverse 4-valent crossings).
int curve_genus(const TropicalCurve& curve);

// Index of the lattice spanned by two weighted outgoing directions at a
// trivalent vertex; equals the doubled area of the dual triangle.
long long vertex_multiplicity(const TropicalCurve& curve, int vertex);

// Full validation for externally supplied curves; returns human-readable
// violations (empty when valid).
std::vector<std::string> validate_curve(const TropicalCurve& curve);

} // namespace tropcount

#endif
