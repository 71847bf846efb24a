#include "relgb/monomial.hpp"

#include <algorithm>

#include "relgb/error.hpp"

namespace relgb {

namespace {

void check_sizes(std::size_t a, std::size_t b) {
    if (a != b)
        throw DimensionError("exponent length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

void check_nonnegative(const std::vector<int>& v) {
    for (int x : v)
        if (x < 0) throw DimensionError("negative entry in exponent vector");
}

} // namespace

Exponent::Exponent(std::initializer_list<int> v) : v_(v) { check_nonnegative(v_); }

Exponent::Exponent(std::vector<int> v) : v_(std::move(v)) { check_nonnegative(v_); }

Exponent Exponent::unit(std::size_t n, std::size_t k, int power) {
    Exponent e(n);
    e.v_.at(k) = power;
    check_nonnegative(e.v_);
    return e;
}

long Exponent::total() const {
    long t = 0;
    for (int x : v_) t += x;
    return t;
}

bool Exponent::is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](int x) { return x == 0; });
}

bool Exponent::divides(const Exponent& o) const {
    check_sizes(size(), o.size());
    for (std::size_t i = 0; i < v_.size(); ++i)
        if (v_[i] > o.v_[i]) return false;
    return true;
}

Exponent& Exponent::operator+=(const Exponent& o) {
    check_sizes(size(), o.size());
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
}

Exponent operator-(const Exponent& a, const Exponent& b) {
    check_sizes(a.size(), b.size());
    Exponent r = a;
    for (std::size_t i = 0; i < r.v_.size(); ++i) {
        r.v_[i] -= b.v_[i];
        if (r.v_[i] < 0) throw DimensionError("exponent subtraction would go negative");
    }
    return r;
}

bool Degree::leq(const Degree& o) const {
    check_sizes(size(), o.size());
    for (std::size_t i = 0; i < v_.size(); ++i)
        if (v_[i] > o.v_[i]) return false;
    return true;
}

bool Degree::is_nonnegative() const {
    return std::all_of(v_.begin(), v_.end(), [](int x) { return x >= 0; });
}

Exponent Degree::to_exponent() const {
    if (!is_nonnegative()) throw DimensionError("degree " + to_string() + " has a negative entry");
    return Exponent(v_);
}

Degree& Degree::operator+=(const Degree& o) {
    check_sizes(size(), o.size());
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
}

Degree& Degree::operator-=(const Degree& o) {
    check_sizes(size(), o.size());
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
}

Degree Degree::operator-() const {
    Degree r = *this;
    for (int& x : r.v_) x = -x;
    return r;
}

std::string Degree::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v_[i]);
    }
    return s + ")";
}

Exponent mon_join(const Exponent& a, const Exponent& b) {
    check_sizes(a.size(), b.size());
    std::vector<int> r(a.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(a[i], b[i]);
    return Exponent(std::move(r));
}

Exponent mon_meet(const Exponent& a, const Exponent& b) {
    check_sizes(a.size(), b.size());
    std::vector<int> r(a.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(a[i], b[i]);
    return Exponent(std::move(r));
}

Degree mon_join(const Degree& a, const Degree& b) {
    check_sizes(a.size(), b.size());
    Degree r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Degree mon_meet(const Degree& a, const Degree& b) {
    check_sizes(a.size(), b.size());
    Degree r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

bool mon_divides(const ModuleMonomial& a, const ModuleMonomial& b) {
    return a.component == b.component && a.exp.divides(b.exp);
}

std::optional<ModuleMonomial> mon_lcm(const ModuleMonomial& a, const ModuleMonomial& b) {
    if (a.component != b.component) return std::nullopt;
    return ModuleMonomial{mon_join(a.exp, b.exp), a.component};
}

} // namespace relgb
