#include "caporaso_harris.hpp"

#include <functional>
#include <map>
#include <tuple>
#include <vector>

namespace tropcount::oracle {

namespace {

using Profile = std::vector<int>;  // profile[k-1] = tangencies of order k

int weighted_sum(const Profile& p) {
    int s = 0;
    for (std::size_t k = 0; k < p.size(); ++k) s += (int)(k + 1) * p[k];
    return s;
}

int total(const Profile& p) {
    int s = 0;
    for (int v : p) s += v;
    return s;
}

Profile trimmed(Profile p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Enumerate pairs (alpha', beta') with alpha' <= alpha, beta' >= beta and
// weighted_sum(alpha') + weighted_sum(beta') = d - 1.
template <class F>
void split_profiles(const Profile& alpha, const Profile& beta, int d, F&& visit) {
    const int maxk = d;  // tangency orders up to d-1 suffice, d is safe
    Profile ap(maxk, 0), bp(maxk, 0);
    std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == maxk) {
            if (left == 0) visit(ap, bp);
            return;
        }
        int amax = k < (int)alpha.size() ? alpha[k] : 0;
        for (int a = 0; a <= amax && a * (k + 1) <= left; ++a) {
            ap[k] = a;
            int bmin = k < (int)beta.size() ? beta[k] : 0;
            for (int b = bmin; (a + b) * (k + 1) <= left; ++b) {
                bp[k] = b;
                rec(k + 1, left - (a + b) * (k + 1));
            }
            bp[k] = 0;
        }
        ap[k] = 0;
    };
    rec(0, d - 1);
}

struct Key {
    int d, delta;
    Profile alpha, beta;
    bool operator<(const Key& o) const {
        return std::tie(d, delta, alpha, beta) < std::tie(o.d, o.delta, o.alpha, o.beta);
    }
};

// The recursion over a generic value type; Ring supplies the tangency
// weight, plus addition/multiplication/integer scaling.
template <class V, class Ring>
V ch_value(int d, int delta, Profile alpha, Profile beta, const Ring& ring,
           std::map<Key, V>& memo) {
    if (delta < 0) return ring.zero();
    if (delta > d * (d - 1) / 2) return ring.zero();  // more nodes than d lines carry
    alpha = trimmed(alpha);
    beta = trimmed(beta);
    if (d == 1) return delta == 0 ? ring.one() : ring.zero();

    Key key{d, delta, alpha, beta};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    V result = ring.zero();
    // move one free point onto the line
    for (int k = 0; k < (int)beta.size(); ++k) {
        if (beta[k] == 0) continue;
        Profile a2 = alpha, b2 = beta;
        if ((int)a2.size() <= k) a2.resize(k + 1, 0);
        a2[k] += 1;
        b2[k] -= 1;
        result = ring.add(result, ring.mul(ring.weight(k + 1),
                                           ch_value<V>(d, delta, a2, b2, ring, memo)));
    }
    // degenerate onto the line: residual curve of degree d-1
    split_profiles(alpha, beta, d, [&](const Profile& ap, const Profile& bp) {
        int dropped = total(bp) - total(beta);
        int delta2 = delta + dropped - d + 1;
        if (delta2 < 0) return;
        V term = ch_value<V>(d - 1, delta2, ap, bp, ring, memo);
        long long scale = 1;
        for (std::size_t k = 0; k < ap.size(); ++k) {
            int av = k < (std::size_t)alpha.size() ? alpha[k] : 0;
            scale *= binom(av, ap[k]);
        }
        for (std::size_t k = 0; k < bp.size(); ++k) {
            int bv = k < (std::size_t)beta.size() ? beta[k] : 0;
            scale *= binom(bp[k], bv);
        }
        if (scale == 0) return;
        V weights = ring.one();
        for (std::size_t k = 0; k < bp.size(); ++k) {
            int bv = k < (std::size_t)beta.size() ? beta[k] : 0;
            for (int i = 0; i < bp[k] - bv; ++i)
                weights = ring.mul(weights, ring.weight((int)k + 1));
        }
        result = ring.add(result, ring.scale(ring.mul(weights, term), scale));
    });

    memo[key] = result;
    return result;
}

struct ClassicalRing {
    long long zero() const { return 0; }
    long long one() const { return 1; }
    long long weight(int k) const { return k; }
    long long add(long long a, long long b) const { return a + b; }
    long long mul(long long a, long long b) const { return a * b; }
    long long scale(long long a, long long s) const { return a * s; }
};

struct RefinedRing {
    HalfLaurent zero() const { return HalfLaurent(); }
    HalfLaurent one() const { return HalfLaurent(1); }
    HalfLaurent weight(int k) const {
        HalfLaurent q;
        for (int e = k - 1; e >= -(k - 1); e -= 2) q += HalfLaurent::half_power(e);
        return q;
    }
    HalfLaurent add(const HalfLaurent& a, const HalfLaurent& b) const { return a + b; }
    HalfLaurent mul(const HalfLaurent& a, const HalfLaurent& b) const { return a * b; }
    HalfLaurent scale(const HalfLaurent& a, long long s) const { return a.scaled(make_int(s)); }
};

} // namespace

long long ch_severi(int d, int delta) {
    static std::map<Key, long long> memo;
    Profile beta(d, 0);
    beta[0] = d;
    return ch_value<long long>(d, delta, {}, beta, ClassicalRing{}, memo);
}

HalfLaurent ch_severi_refined(int d, int delta) {
    static std::map<Key, HalfLaurent> memo;
    Profile beta(d, 0);
    beta[0] = d;
    return ch_value<HalfLaurent>(d, delta, {}, beta, RefinedRing{}, memo);
}

} // namespace tropcount::oracle
