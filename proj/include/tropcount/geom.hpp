#ifndef TROPCOUNT_GEOM_HPP
#define TROPCOUNT_GEOM_HPP

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>

#include "tropcount/numeric.hpp"

namespace tropcount {

// Lattice vector / point in Z^2. Polygon coordinates stay small; all
// potentially large arithmetic (positions, liftings) runs over Rat.
struct IVec {
    long long x = 0;
    long long y = 0;

    friend IVec operator+(IVec a, IVec b) { return {a.x + b.x, a.y + b.y}; }
    friend IVec operator-(IVec a, IVec b) { return {a.x - b.x, a.y - b.y}; }
    friend IVec operator*(long long k, IVec a) { return {k * a.x, k * a.y}; }
    IVec operator-() const { return {-x, -y}; }
    auto operator<=>(const IVec&) const = default;
};

inline long long cross(IVec a, IVec b) { return a.x * b.y - a.y * b.x; }
inline long long dot(IVec a, IVec b) { return a.x * b.x + a.y * b.y; }

inline long long lattice_gcd(IVec v) {
    return std::gcd(std::llabs(v.x), std::llabs(v.y));
}

inline IVec primitive(IVec v) {
    long long g = lattice_gcd(v);
    return g == 0 ? v : IVec{v.x / g, v.y / g};
}

// Left turn of 90 degrees.
inline IVec rot90(IVec v) { return {-v.y, v.x}; }

inline std::string to_string(IVec v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

// Rational point in Q^2.
struct QVec {
    Rat x;
    Rat y;

    QVec() = default;
    QVec(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}
    QVec(IVec v) : x(make_rat(v.x)), y(make_rat(v.y)) {}

    friend QVec operator+(const QVec& a, const QVec& b) { return {a.x + b.x, a.y + b.y}; }
    friend QVec operator-(const QVec& a, const QVec& b) { return {a.x - b.x, a.y - b.y}; }
    friend QVec operator*(const Rat& k, const QVec& a) { return {k * a.x, k * a.y}; }
    bool operator==(const QVec& o) const { return x == o.x && y == o.y; }
    bool operator<(const QVec& o) const {
        if (x != o.x) return x < o.x;
        return y < o.y;
    }
};

inline Rat cross(const QVec& a, const QVec& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const QVec& a, const QVec& b) { return a.x * b.x + a.y * b.y; }
inline Rat dot(IVec a, const QVec& b) { return make_rat(a.x) * b.x + make_rat(a.y) * b.y; }

inline std::string to_string(const QVec& v) {
    return "(" + to_string(v.x) + "," + to_string(v.y) + ")";
}

// Total counterclockwise order on nonzero directions, starting just above
// direction (1,0)... actually starting AT (1,0). Ties (parallel, same sense)
// compare equal.
inline int direction_half(IVec v) {
    // 0 for angle in [0,pi), 1 for [pi,2pi)
    if (v.y > 0) return 0;
    if (v.y < 0) return 1;
    return v.x > 0 ? 0 : 1;
}

inline bool direction_less(IVec a, IVec b) {
    int ha = direction_half(a), hb = direction_half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

inline bool direction_eq(IVec a, IVec b) {
    return cross(a, b) == 0 && dot(a, b) > 0;
}

} // namespace tropcount

#endif
