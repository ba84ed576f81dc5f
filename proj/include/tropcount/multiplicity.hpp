#ifndef TROPCOUNT_MULTIPLICITY_HPP
#define TROPCOUNT_MULTIPLICITY_HPP

#include "tropcount/enumerate.hpp"
#include "tropcount/halflaurent.hpp"

namespace tropcount {

struct CountRecord {
    Int classical;          // n = product of vertex multiplicities
    HalfLaurent refined;    // N = product of quantum factors, integral
    Int welschinger;        // N at y = -1

    Json to_json() const;
};

// Balanced quantum integer [m]_y = y^((m-1)/2) + y^((m-3)/2) + ... ;
// specializes to m at y = 1.
HalfLaurent quantum_integer(long long m);

// Product over trivalent vertices (crossings contribute 1). The result is
// checked to be an integral Laurent polynomial.
CountRecord refined_multiplicity(const TropicalCurve& curve);

struct SeveriTotals {
    HalfLaurent refined_total;
    Int classical_total;
    Int welschinger_total;
    std::vector<CountRecord> per_curve;

    Json to_json() const;
};

SeveriTotals severi(const EnumerationResult& result, int jobs = 1);

} // namespace tropcount

#endif
