#ifndef TROPCOUNT_MOTIVIC_HPP
#define TROPCOUNT_MOTIVIC_HPP

#include <map>
#include <string>
#include <tuple>

#include <json.hpp>

#include "tropcount/halflaurent.hpp"

namespace tropcount {

// Integer combination of atoms L^k and [C_h minus m points]*L^k, with an
// optional formal denominator (L-1)^loc_power. The curve atom keeps
// (genus, punctures) so classes that are not polynomials in L stay exact.
class MotivicClass {
  public:
    MotivicClass() = default;
    explicit MotivicClass(const Int& constant);
    explicit MotivicClass(long long constant) : MotivicClass(make_int(constant)) {}

    static MotivicClass L_power(int k, Int coeff = 1);
    static MotivicClass L() { return L_power(1); }
    // [C_h minus m points] * L^k
    static MotivicClass curve_atom(int genus, int punctures, int L_exp = 0, Int coeff = 1);

    bool is_zero() const { return poly_.empty() && curves_.empty(); }
    int loc_power() const { return loc_power_; }
    const std::map<int, Int>& poly() const { return poly_; }
    const std::map<std::tuple<int, int, int>, Int>& curve_terms() const { return curves_; }
    bool has_curve_terms() const { return !curves_.empty(); }

    MotivicClass operator-() const;
    MotivicClass& operator+=(const MotivicClass& o);
    MotivicClass& operator-=(const MotivicClass& o);
    friend MotivicClass operator+(MotivicClass a, const MotivicClass& b) { return a += b; }
    friend MotivicClass operator-(MotivicClass a, const MotivicClass& b) { return a -= b; }
    friend MotivicClass operator*(const MotivicClass& a, const MotivicClass& b);
    MotivicClass& operator*=(const MotivicClass& o) { return *this = *this * o; }

    MotivicClass scaled(const Int& k) const;
    MotivicClass scaled_by_L_power(int k) const;
    MotivicClass localized(int extra_loc) const;  // divide formally by (L-1)^extra

    // Cancel (L-1) factors against loc_power while the numerator divides
    // exactly; purely representational.
    MotivicClass reduced() const;
    bool operator==(const MotivicClass& o) const;

    // chi_{-y}: L -> y, [C_h minus m pts] -> (1-h)(1+y)-m, followed by exact
    // division by (y-1)^loc_power. Throws when the division is inexact.
    HalfLaurent chi_y() const;
    // Euler characteristic: chi_y followed by y=1 (division first when
    // localized).
    Int euler() const;

    std::string to_string() const;
    Json to_json() const;
    static MotivicClass from_json(const Json& j);

  private:
    std::map<int, Int> poly_;                           // L exponent -> coeff
    std::map<std::tuple<int, int, int>, Int> curves_;   // (h, m, L exp) -> coeff
    int loc_power_ = 0;

    void add_poly(int e, const Int& v);
    void add_curve(int h, int m, int k, const Int& v);
    // Divide the numerator by (L-1) exactly; false when not divisible.
    bool divide_numerator_once(MotivicClass& out) const;
};

// Polynomial in L from (L-1)^a * (L-b) style products; small helper used by
// the verification tables and tests.
MotivicClass L_poly(std::initializer_list<std::pair<int, long long>> exps_coeffs);

enum class MotivicOp { add, mul, scale_by_L_power };
MotivicClass motivic_arith(const MotivicClass& a, const MotivicClass& b, MotivicOp op,
                           int L_shift = 0);

enum class MotivicTarget { chi_y, euler };

} // namespace tropcount

#endif
