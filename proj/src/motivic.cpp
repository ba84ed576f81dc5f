#include "tropcount/motivic.hpp"

#include <sstream>

#include "tropcount/errors.hpp"

namespace tropcount {

MotivicClass::MotivicClass(const Int& constant) {
    if (constant != 0) poly_[0] = constant;
}

MotivicClass MotivicClass::L_power(int k, Int coeff) {
    MotivicClass c;
    if (coeff != 0) c.poly_[k] = std::move(coeff);
    return c;
}

MotivicClass MotivicClass::curve_atom(int genus, int punctures, int L_exp, Int coeff) {
    if (genus < 0 || punctures < 0)
        throw ValidationError("curve atom needs genus >= 0 and punctures >= 0");
    MotivicClass c;
    if (coeff != 0) c.curves_[{genus, punctures, L_exp}] = std::move(coeff);
    return c;
}

void MotivicClass::add_poly(int e, const Int& v) {
    auto it = poly_.find(e);
    if (it == poly_.end()) {
        if (v != 0) poly_[e] = v;
        return;
    }
    it->second += v;
    if (it->second == 0) poly_.erase(it);
}

void MotivicClass::add_curve(int h, int m, int k, const Int& v) {
    auto key = std::make_tuple(h, m, k);
    auto it = curves_.find(key);
    if (it == curves_.end()) {
        if (v != 0) curves_[key] = v;
        return;
    }
    it->second += v;
    if (it->second == 0) curves_.erase(it);
}

MotivicClass MotivicClass::operator-() const {
    MotivicClass r = *this;
    for (auto& [e, v] : r.poly_) v = -v;
    for (auto& [k, v] : r.curves_) v = -v;
    return r;
}

namespace {
// Align a to denominator power `target` by multiplying the numerator with
// (L-1)^(target - a.loc_power()).
MotivicClass align_loc(const MotivicClass& a, int target);
} // namespace

MotivicClass& MotivicClass::operator+=(const MotivicClass& o) {
    int target = std::max(loc_power_, o.loc_power_);
    MotivicClass lhs = align_loc(*this, target);
    MotivicClass rhs = align_loc(o, target);
    for (const auto& [e, v] : rhs.poly_) lhs.add_poly(e, v);
    for (const auto& [k, v] : rhs.curves_)
        lhs.add_curve(std::get<0>(k), std::get<1>(k), std::get<2>(k), v);
    lhs.loc_power_ = target;
    if (lhs.is_zero()) lhs.loc_power_ = 0;
    return *this = lhs;
}

MotivicClass& MotivicClass::operator-=(const MotivicClass& o) { return *this += -o; }

MotivicClass operator*(const MotivicClass& a, const MotivicClass& b) {
    if (a.has_curve_terms() && b.has_curve_terms())
        throw ValidationError("unsupported product of two curve-atom classes");
    MotivicClass r;
    r.loc_power_ = a.loc_power_ + b.loc_power_;
    for (const auto& [ea, va] : a.poly_)
        for (const auto& [eb, vb] : b.poly_) r.add_poly(ea + eb, va * vb);
    for (const auto& [k, v] : a.curves_)
        for (const auto& [eb, vb] : b.poly_)
            r.add_curve(std::get<0>(k), std::get<1>(k), std::get<2>(k) + eb, v * vb);
    for (const auto& [k, v] : b.curves_)
        for (const auto& [ea, va] : a.poly_)
            r.add_curve(std::get<0>(k), std::get<1>(k), std::get<2>(k) + ea, v * va);
    if (r.is_zero()) r.loc_power_ = 0;
    return r;
}

MotivicClass MotivicClass::scaled(const Int& k) const {
    MotivicClass r;
    if (k == 0) return r;
    r = *this;
    for (auto& [e, v] : r.poly_) v *= k;
    for (auto& [key, v] : r.curves_) v *= k;
    return r;
}

MotivicClass MotivicClass::scaled_by_L_power(int k) const {
    MotivicClass r;
    r.loc_power_ = loc_power_;
    for (const auto& [e, v] : poly_) r.poly_[e + k] = v;
    for (const auto& [key, v] : curves_)
        r.curves_[{std::get<0>(key), std::get<1>(key), std::get<2>(key) + k}] = v;
    return r;
}

MotivicClass MotivicClass::localized(int extra_loc) const {
    if (extra_loc < 0) throw ValidationError("localization power must be nonnegative");
    MotivicClass r = *this;
    if (!r.is_zero()) r.loc_power_ += extra_loc;
    return r;
}

namespace {
MotivicClass align_loc(const MotivicClass& a, int target) {
    int d = target - a.loc_power();
    if (d <= 0 || a.is_zero()) return a;
    MotivicClass Lm1 = MotivicClass::L_power(1) - MotivicClass(1);
    MotivicClass r = a;
    for (int i = 0; i < d; ++i) r = r * Lm1;
    return r.localized(d);
}
} // namespace

bool MotivicClass::divide_numerator_once(MotivicClass& out) const {
    // Divide poly part and each (h,m) group of curve terms by (L-1) as
    // univariate polynomials in L, allowing negative exponents.
    out = MotivicClass();
    out.loc_power_ = loc_power_;
    auto divide_group = [](const std::map<int, Int>& grp, std::map<int, Int>& q) -> bool {
        if (grp.empty()) return true;
        int lo = grp.begin()->first;
        int hi = grp.rbegin()->first;
        Int carry = 0;
        for (int e = hi; e > lo; --e) {
            auto it = grp.find(e);
            if (it != grp.end()) carry += it->second;
            if (carry != 0) q[e - 1] = carry;
        }
        auto it = grp.find(lo);
        if (it != grp.end()) carry += it->second;
        return carry == 0;
    };
    if (!divide_group(poly_, out.poly_)) return false;
    std::map<std::pair<int, int>, std::map<int, Int>> groups;
    for (const auto& [k, v] : curves_)
        groups[{std::get<0>(k), std::get<1>(k)}][std::get<2>(k)] = v;
    for (const auto& [hm, grp] : groups) {
        std::map<int, Int> q;
        if (!divide_group(grp, q)) return false;
        for (const auto& [e, v] : q) out.curves_[{hm.first, hm.second, e}] = v;
    }
    return true;
}

MotivicClass MotivicClass::reduced() const {
    MotivicClass r = *this;
    while (r.loc_power_ > 0) {
        MotivicClass q;
        if (!r.divide_numerator_once(q)) break;
        q.loc_power_ = r.loc_power_ - 1;
        r = q;
    }
    if (r.is_zero()) r.loc_power_ = 0;
    return r;
}

bool MotivicClass::operator==(const MotivicClass& o) const {
    MotivicClass a = reduced(), b = o.reduced();
    if (a.loc_power_ != b.loc_power_) {
        int target = std::max(a.loc_power_, b.loc_power_);
        a = align_loc(a, target);
        b = align_loc(b, target);
    }
    return a.poly_ == b.poly_ && a.curves_ == b.curves_;
}

HalfLaurent MotivicClass::chi_y() const {
    HalfLaurent num;
    for (const auto& [e, v] : poly_) num += HalfLaurent::power(e, v);
    for (const auto& [k, v] : curves_) {
        auto [h, m, e] = k;
        // chi_{-y}([C_h minus m pts]) = (1-h)(1+y) - m
        HalfLaurent atom = half_laurent({{0, 1 - h - m}, {2, 1 - h}});
        num += (atom * HalfLaurent::power(e)).scaled(v);
    }
    return num.divide_by_y_minus_one(loc_power_);
}

Int MotivicClass::euler() const { return chi_y().at_one(); }

std::string MotivicClass::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() {
        if (!first) os << " + ";
        first = false;
    };
    for (auto it = poly_.rbegin(); it != poly_.rend(); ++it) {
        sep();
        os << it->second.get_str();
        if (it->first != 0) os << "*L^" << it->first;
    }
    for (const auto& [k, v] : curves_) {
        sep();
        auto [h, m, e] = k;
        os << v.get_str() << "*[C" << h;
        if (m) os << "-" << m << "pt";
        os << "]";
        if (e != 0) os << "*L^" << e;
    }
    if (first) os << "0";
    if (loc_power_ > 0) os << " / (L-1)^" << loc_power_;
    return os.str();
}

Json MotivicClass::to_json() const {
    Json j;
    Json lp = Json::object();
    for (const auto& [e, v] : poly_) {
        if (v.fits_slong_p())
            lp[std::to_string(e)] = v.get_si();
        else
            lp[std::to_string(e)] = v.get_str();
    }
    j["L_poly"] = lp;
    Json ct = Json::array();
    for (const auto& [k, v] : curves_) {
        auto [h, m, e] = k;
        ct.push_back({h, m, e, v.get_si()});
    }
    j["curve_terms"] = ct;
    j["loc_power"] = loc_power_;
    return j;
}

MotivicClass MotivicClass::from_json(const Json& j) {
    MotivicClass c;
    if (j.contains("L_poly")) {
        for (const auto& [k, v] : j["L_poly"].items()) {
            Int coeff = v.is_string() ? Int(v.get<std::string>()) : make_int(v.get<long long>());
            c.add_poly(std::stoi(k), coeff);
        }
    }
    if (j.contains("curve_terms")) {
        for (const auto& t : j["curve_terms"]) {
            if (!t.is_array() || t.size() != 4)
                throw ValidationError("curve term must be [genus, punctures, L_exp, coeff]");
            c.add_curve(t[0].get<int>(), t[1].get<int>(), t[2].get<int>(),
                        make_int(t[3].get<long long>()));
        }
    }
    if (j.contains("loc_power")) {
        int lp = j["loc_power"].get<int>();
        if (lp < 0) throw ValidationError("loc_power must be >= 0");
        if (!c.is_zero()) c.loc_power_ = lp;
    }
    return c;
}

MotivicClass L_poly(std::initializer_list<std::pair<int, long long>> exps_coeffs) {
    MotivicClass c;
    for (const auto& [e, v] : exps_coeffs) c += MotivicClass::L_power(e, make_int(v));
    return c;
}

MotivicClass motivic_arith(const MotivicClass& a, const MotivicClass& b, MotivicOp op,
                           int L_shift) {
    switch (op) {
        case MotivicOp::add: return a + b;
        case MotivicOp::mul: return a * b;
        case MotivicOp::scale_by_L_power: return a.scaled_by_L_power(L_shift);
    }
    throw InternalError("unknown motivic op");
}

} // namespace tropcount
