#ifndef TROPCOUNT_HALFLAURENT_HPP
#define TROPCOUNT_HALFLAURENT_HPP

#include <initializer_list>
#include <map>
#include <string>

#include <json.hpp>

#include "tropcount/numeric.hpp"

namespace tropcount {

using Json = nlohmann::ordered_json;

// Exact Laurent polynomial in y with exponents in (1/2)Z. Exponents are
// stored doubled so half-integers stay integral. Zero coefficients are
// never stored; the empty map is 0.
class HalfLaurent {
  public:
    HalfLaurent() = default;
    explicit HalfLaurent(const Int& constant);
    explicit HalfLaurent(long long constant) : HalfLaurent(make_int(constant)) {}

    // y^(doubled/2)
    static HalfLaurent half_power(int doubled, Int coeff = 1);
    // y^k
    static HalfLaurent power(int k, Int coeff = 1) { return half_power(2 * k, coeff); }

    bool is_zero() const { return c_.empty(); }
    bool integral() const;    // all exponents in Z
    bool palindromic() const; // invariant under y -> 1/y

    const std::map<int, Int>& coefficients() const { return c_; }
    Int coeff_doubled(int doubled) const;
    Int coeff(int k) const { return coeff_doubled(2 * k); }
    int min_doubled_exp() const;
    int max_doubled_exp() const;

    HalfLaurent operator-() const;
    HalfLaurent& operator+=(const HalfLaurent& o);
    HalfLaurent& operator-=(const HalfLaurent& o);
    friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
    friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
    friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
    HalfLaurent& operator*=(const HalfLaurent& o) { return *this = *this * o; }
    bool operator==(const HalfLaurent& o) const { return c_ == o.c_; }

    HalfLaurent scaled(const Int& k) const;
    HalfLaurent shifted_half(int doubled) const;  // multiply by y^(doubled/2)
    HalfLaurent reciprocal() const;               // y -> 1/y

    Int at_one() const;
    Int at_minus_one() const;  // requires integral()

    // Exact division by (y-1)^power; requires integral(). Throws on
    // nonzero remainder.
    HalfLaurent divide_by_y_minus_one(int power) const;

    std::string to_string() const;
    Json to_json() const;
    static HalfLaurent from_json(const Json& j);

  private:
    std::map<int, Int> c_;  // doubled exponent -> nonzero coefficient
    void set(int doubled, Int v);
};

// Convenience builder: {{doubled_exp, coeff}, ...}
HalfLaurent half_laurent(std::initializer_list<std::pair<int, long long>> terms);

enum class LaurentPoint { one, minus_one };

HalfLaurent laurent_arith_add(const HalfLaurent& a, const HalfLaurent& b);
HalfLaurent laurent_arith_mul(const HalfLaurent& a, const HalfLaurent& b);
Int laurent_specialize(const HalfLaurent& p, LaurentPoint point);

} // namespace tropcount

#endif
