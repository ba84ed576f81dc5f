#ifndef TROPCOUNT_TESTS_CAPORASO_HARRIS_HPP
#define TROPCOUNT_TESTS_CAPORASO_HARRIS_HPP

#include "tropcount/halflaurent.hpp"

namespace tropcount::oracle {

// Classical Severi degree of degree-d plane curves with `delta` nodes
// through d(d+3)/2 - delta generic points, by the Caporaso-Harris
// recursion on tangency profiles with a fixed line. Counts reduced curves
// (irreducible and reducible alike), so it matches integral counts only
// while delta is small; the callers stay in that regime.
long long ch_severi(int d, int delta);

// Refined variant: tangency factors replaced by balanced quantum integers.
HalfLaurent ch_severi_refined(int d, int delta);

} // namespace tropcount::oracle

#endif
