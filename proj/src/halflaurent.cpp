#include "tropcount/halflaurent.hpp"

#include <sstream>

#include "tropcount/errors.hpp"

namespace tropcount {

HalfLaurent::HalfLaurent(const Int& constant) {
    if (constant != 0) c_[0] = constant;
}

HalfLaurent HalfLaurent::half_power(int doubled, Int coeff) {
    HalfLaurent p;
    if (coeff != 0) p.c_[doubled] = std::move(coeff);
    return p;
}

void HalfLaurent::set(int doubled, Int v) {
    if (v == 0)
        c_.erase(doubled);
    else
        c_[doubled] = std::move(v);
}

bool HalfLaurent::integral() const {
    for (const auto& [e, v] : c_)
        if (e % 2 != 0) return false;
    return true;
}

bool HalfLaurent::palindromic() const {
    for (const auto& [e, v] : c_)
        if (coeff_doubled(-e) != v) return false;
    return true;
}

Int HalfLaurent::coeff_doubled(int doubled) const {
    auto it = c_.find(doubled);
    return it == c_.end() ? Int(0) : it->second;
}

int HalfLaurent::min_doubled_exp() const {
    if (c_.empty()) throw InternalError("min exponent of zero polynomial");
    return c_.begin()->first;
}

int HalfLaurent::max_doubled_exp() const {
    if (c_.empty()) throw InternalError("max exponent of zero polynomial");
    return c_.rbegin()->first;
}

HalfLaurent HalfLaurent::operator-() const {
    HalfLaurent r;
    for (const auto& [e, v] : c_) r.c_[e] = -v;
    return r;
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
    for (const auto& [e, v] : o.c_) set(e, coeff_doubled(e) + v);
    return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) {
    for (const auto& [e, v] : o.c_) set(e, coeff_doubled(e) - v);
    return *this;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
    HalfLaurent r;
    for (const auto& [ea, va] : a.c_)
        for (const auto& [eb, vb] : b.c_) r.set(ea + eb, r.coeff_doubled(ea + eb) + va * vb);
    return r;
}

HalfLaurent HalfLaurent::scaled(const Int& k) const {
    HalfLaurent r;
    if (k == 0) return r;
    for (const auto& [e, v] : c_) r.c_[e] = k * v;
    return r;
}

HalfLaurent HalfLaurent::shifted_half(int doubled) const {
    HalfLaurent r;
    for (const auto& [e, v] : c_) r.c_[e + doubled] = v;
    return r;
}

HalfLaurent HalfLaurent::reciprocal() const {
    HalfLaurent r;
    for (const auto& [e, v] : c_) r.c_[-e] = v;
    return r;
}

Int HalfLaurent::at_one() const {
    Int s = 0;
    for (const auto& [e, v] : c_) s += v;
    return s;
}

Int HalfLaurent::at_minus_one() const {
    if (!integral())
        throw ValidationError("evaluation at y=-1 requires integer exponents");
    Int s = 0;
    for (const auto& [e, v] : c_) s += (e / 2) % 2 == 0 ? v : -v;
    return s;
}

HalfLaurent HalfLaurent::divide_by_y_minus_one(int power) const {
    if (power == 0) return *this;
    if (!integral())
        throw ValidationError("division by (y-1) requires integer exponents");
    HalfLaurent q = *this;
    for (int step = 0; step < power; ++step) {
        if (q.is_zero()) continue;
        // Divide the Laurent polynomial sum v_e y^e by (y-1), highest
        // exponent first: quotient coefficient at e-1 accumulates.
        HalfLaurent out;
        Int carry = 0;
        int hi = q.max_doubled_exp() / 2;
        int lo = q.min_doubled_exp() / 2;
        for (int e = hi; e > lo; --e) {
            carry += q.coeff(e);
            out.set(2 * (e - 1), carry);
        }
        carry += q.coeff(lo);
        if (carry != 0)
            throw ValidationError("class not in the image of the unlocalized ring");
        q = out;
    }
    return q;
}

std::string HalfLaurent::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print descending exponents
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        Int v = it->second;
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        first = false;
        Int a = abs(v);
        int e = it->first;
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "y";
            if (e != 2) {
                if (e % 2 == 0)
                    os << "^" << e / 2;
                else
                    os << "^(" << e << "/2)";
            }
        }
    }
    return os.str();
}

Json HalfLaurent::to_json() const {
    Json m = Json::object();
    for (const auto& [e, v] : c_) {
        if (v.fits_slong_p())
            m[std::to_string(e)] = v.get_si();
        else
            m[std::to_string(e)] = v.get_str();
    }
    Json j;
    j["half_exps"] = m;
    return j;
}

HalfLaurent HalfLaurent::from_json(const Json& j) {
    if (!j.is_object() || !j.contains("half_exps") || !j["half_exps"].is_object())
        throw ValidationError("expected {\"half_exps\": {\"<doubled exp>\": coeff}}");
    HalfLaurent p;
    for (const auto& [k, v] : j["half_exps"].items()) {
        int e = 0;
        try {
            e = std::stoi(k);
        } catch (...) {
            throw ValidationError("bad doubled exponent key: " + k);
        }
        Int coeff;
        if (v.is_number_integer())
            coeff = make_int(v.get<long long>());
        else if (v.is_string())
            coeff = Int(v.get<std::string>());
        else
            throw ValidationError("coefficient must be integer or string");
        if (coeff != 0) p.set(e, coeff);
    }
    return p;
}

HalfLaurent half_laurent(std::initializer_list<std::pair<int, long long>> terms) {
    HalfLaurent p;
    for (const auto& [e, v] : terms) p += HalfLaurent::half_power(e, make_int(v));
    return p;
}

HalfLaurent laurent_arith_add(const HalfLaurent& a, const HalfLaurent& b) { return a + b; }
HalfLaurent laurent_arith_mul(const HalfLaurent& a, const HalfLaurent& b) { return a * b; }

Int laurent_specialize(const HalfLaurent& p, LaurentPoint point) {
    return point == LaurentPoint::one ? p.at_one() : p.at_minus_one();
}

} // namespace tropcount
