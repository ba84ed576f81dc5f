#ifndef TROPCOUNT_REALIZATION_HPP
#define TROPCOUNT_REALIZATION_HPP

#include <optional>
#include <vector>

#include "tropcount/curve.hpp"

namespace tropcount {

// Marked subdivision: a subdivision plus an ordered list of marked edges,
// indexed into edge_records(). The j-th configuration point lies on the
// curve edge dual to the j-th marked edge.
struct MarkedSubdivision {
    NewtonSubdivision sub;
    std::vector<Seg> marked;  // in point order

    std::string canonical_key() const;
};

enum class RealizeStatus {
    realized,            // unique lifting, all strict inequalities hold
    infeasible,          // no curve of this type through the points
    underdetermined,     // positive-dimensional family through the points
};

struct RealizeResult {
    RealizeStatus status = RealizeStatus::infeasible;
    std::optional<TropicalCurve> curve;  // set when realized; markings filled
};

// Solves for the lifting pinning the dual curve of `ms` through `points`
// (point j on the open dual edge of marked[j]) and certifies the exact
// strict inequalities of the secondary cone.
RealizeResult realize(const MarkedSubdivision& ms, const std::vector<QVec>& points);

// Dense exact Gaussian elimination, Ax = b. Returns nullopt when
// inconsistent; `free_vars` reports the nullity.
struct LinearSolution {
    std::vector<Rat> x;      // one particular solution
    int free_vars = 0;
    std::vector<std::vector<Rat>> kernel;  // basis of the homogeneous space
};
std::optional<LinearSolution> solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b);

// Feasibility of a system of strict inequalities sum_i c_i t_i + d > 0 by
// Fourier-Motzkin elimination. Small dimensions only.
bool strict_system_feasible(std::vector<std::vector<Rat>> rows);

} // namespace tropcount

#endif
