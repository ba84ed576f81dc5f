#ifndef TROPCOUNT_NUMERIC_HPP
#define TROPCOUNT_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "tropcount/errors.hpp"

namespace tropcount {

using Int = mpz_class;
using Rat = mpq_class;

static_assert(sizeof(long) == sizeof(long long), "LP64 assumed for GMP conversions");

inline Int make_int(long long v) { return Int((long)v); }
inline Rat make_rat(long long num, long long den = 1) {
    Rat r((long)num, (long)den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Int& z) { return z.get_str(); }

// Rationals print as "p" or "p/q", always canonical.
inline std::string to_string(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw ValidationError("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

// Fixed-point decimal with `digits` fractional digits, truncated toward zero.
// Used for byte-stable SVG output.
inline std::string decimal_string(const Rat& q, int digits) {
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Rat s = q * Rat(scale);
    Int t = s.get_num() / s.get_den();  // truncates toward zero
    bool neg = t < 0;
    Int a = abs(t);
    std::string d = a.get_str();
    while ((int)d.size() <= digits) d.insert(d.begin(), '0');
    std::string head = d.substr(0, d.size() - digits);
    std::string tail = d.substr(d.size() - digits);
    std::string out = (neg ? "-" : "") + head;
    if (digits > 0) out += "." + tail;
    return out;
}

// FNV-1a, used for cache keys and canonical curve ids.
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

} // namespace tropcount

#endif
