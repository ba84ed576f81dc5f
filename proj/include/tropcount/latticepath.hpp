#ifndef TROPCOUNT_LATTICEPATH_HPP
#define TROPCOUNT_LATTICEPATH_HPP

#include <vector>

#include "tropcount/realization.hpp"

namespace tropcount {

// Strictly increasing order functional on lattice points: primary covector
// with a tie-breaking secondary one (together a basis, so injective).
struct OrderFunctional {
    IVec primary;
    IVec tiebreak;

    std::pair<long long, long long> operator()(IVec u) const {
        return {dot(primary, u), dot(tiebreak, u)};
    }
    bool less(IVec a, IVec b) const { return (*this)(a) < (*this)(b); }
};

// All marked subdivisions generated by monotone lattice paths of the given
// length, expanded by the two-sided compression recursion. `budget` caps
// the number of emitted subdivisions; exceeding it raises ResourceError.
std::vector<MarkedSubdivision> lattice_path_subdivisions(const LatticePolygon& polygon,
                                                         int path_length,
                                                         const OrderFunctional& order,
                                                         long long budget, int jobs);

} // namespace tropcount

#endif
