#ifndef TROPCOUNT_BRUTEFORCE_HPP
#define TROPCOUNT_BRUTEFORCE_HPP

#include <vector>

#include "tropcount/realization.hpp"

namespace tropcount {

// All subdivisions of the polygon into lattice triangles and
// parallelograms (cells are placed lexicographically, so each subdivision
// is produced exactly once). `budget` caps the number of tilings.
std::vector<NewtonSubdivision> enumerate_tilings(const LatticePolygon& polygon, long long budget);

struct BruteForceResult {
    std::vector<TropicalCurve> curves;  // realized, canonically sorted
};

// Reference enumerator: every simple tropical curve of the target genus
// through the given points, found by exhausting subdivisions and point-to-
// edge assignments with exact realization.
BruteForceResult brute_force_curves(const LatticePolygon& polygon, int target_genus,
                                    const std::vector<QVec>& points, long long budget, int jobs);

} // namespace tropcount

#endif
