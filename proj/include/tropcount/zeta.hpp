#ifndef TROPCOUNT_ZETA_HPP
#define TROPCOUNT_ZETA_HPP

#include <optional>
#include <vector>

#include "tropcount/series.hpp"

namespace tropcount {

enum class ZetaVariant { chi_y, euler };

// Coefficients chi(Hilb^i) for i = 0..order-1; the zeta series is
// sum_i hilb_chi[i] q^(i+1-g).
struct ZetaInput {
    long long g = 0;
    std::vector<HalfLaurent> hilb_chi;
    int order = 0;

    Json to_json() const;
    static ZetaInput from_json(const Json& j);
    void validate() const;  // order >= 2g+2 and matching coefficient count
};

struct ZetaCoefficients {
    std::vector<HalfLaurent> N;  // N_0 .. N_(determinable-1)
    int determinable = 0;        // how many N_r the truncation pins down

    Json to_json() const;
};

// Peels N_r off the series by leading exponents: the r-th summand
// N_r (q/((1-q)(1-qy)))^(r+1-g) starts at q^(r+1-g).
ZetaCoefficients invert_series(const ZetaInput& input, ZetaVariant variant);

// Truncated series sum_r N_r (q/((1-q)(1-qy)))^(r+1-g) with exponents in
// [1-g, order-g); the euler variant sets y = 1.
SeriesY forward_series(const std::vector<HalfLaurent>& N, long long g, int order,
                       ZetaVariant variant = ZetaVariant::chi_y);

struct FunctionalEquationReport {
    bool holds = false;
    // exponent pair (j, 2g-j) of the first violated coefficient relation,
    // or a degree bound violation at (j, -1)
    std::optional<std::pair<int, int>> violated;
};

// f(q) = q^(g-1)(1-q)(1-qy) Z(q) must be a polynomial of degree <= 2g with
// c_j = c_(2g-j) y^(j-g).
FunctionalEquationReport functional_equation_check(const std::vector<HalfLaurent>& N, long long g);

} // namespace tropcount

#endif
