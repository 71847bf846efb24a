#include "relgb/scalar.hpp"

#include "relgb/error.hpp"

namespace relgb {

namespace {

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t mpz_mod_u(const mpz_class& z, std::uint32_t p) {
    mpz_class m;
    mpz_fdiv_r_ui(m.get_mpz_t(), z.get_mpz_t(), p);
    return m.get_ui();
}

std::uint32_t common_modulus(const Scalar& a, const Scalar& b) {
    if (a.modulus() == b.modulus()) return a.modulus();
    if (a.modulus() == 0) return b.modulus();
    if (b.modulus() == 0) return a.modulus();
    throw DimensionError("scalars from different fields F_" + std::to_string(a.modulus()) + " and F_" +
                         std::to_string(b.modulus()));
}

} // namespace

bool is_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

Scalar::Scalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Scalar Scalar::residue(long long v, std::uint32_t p) {
    Scalar s;
    s.p_ = p;
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += p;
    s.r_ = static_cast<std::uint64_t>(m);
    return s;
}

Scalar Scalar::to_field(std::uint32_t p) const {
    if (p_ == p) return *this;
    Scalar s;
    s.p_ = p;
    std::uint64_t num = mpz_mod_u(q_.get_num(), p);
    std::uint64_t den = mpz_mod_u(q_.get_den(), p);
    if (den == 0)
        throw DimensionError("denominator of " + q_.get_str() + " vanishes modulo " + std::to_string(p));
    s.r_ = num * mod_pow(den, p - 2, p) % p;
    return s;
}

bool Scalar::is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }

bool Scalar::is_one() const { return p_ ? r_ == 1 : q_ == 1; }

int Scalar::sign() const {
    if (p_) return r_ ? 1 : 0;
    return sgn(q_);
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (p_)
        s.r_ = r_ ? p_ - r_ : 0;
    else
        s.q_ = -q_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero scalar");
    Scalar s = *this;
    if (p_)
        s.r_ = mod_pow(r_, p_ - 2, p_);
    else
        s.q_ = 1 / q_;
    return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    std::uint32_t p = common_modulus(a, b);
    if (!p) return Scalar(mpq_class(a.q_ + b.q_));
    Scalar x = a.to_field(p), y = b.to_field(p);
    x.r_ = (x.r_ + y.r_) % p;
    return x;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    std::uint32_t p = common_modulus(a, b);
    if (!p) return Scalar(mpq_class(a.q_ * b.q_));
    Scalar x = a.to_field(p), y = b.to_field(p);
    x.r_ = x.r_ * y.r_ % p;
    return x;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.p_ == b.p_) return a.p_ ? a.r_ == b.r_ : a.q_ == b.q_;
    std::uint32_t p = common_modulus(a, b);
    return a.to_field(p).r_ == b.to_field(p).r_;
}

std::string Scalar::to_string() const { return p_ ? std::to_string(r_) : q_.get_str(); }

Scalar Field::make(const mpq_class& q) const {
    Scalar s(q);
    if (!p) return s;
    return s * Scalar::residue(1, p);
}

std::string Field::name() const { return p ? "fp:" + std::to_string(p) : "q"; }

Field Field::parse(const std::string& text) {
    if (text == "q" || text == "Q") return Field{};
    if (text.rfind("fp:", 0) == 0) {
        std::string digits = text.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
            throw InputError("bad field descriptor '" + text + "'");
        std::uint64_t p = std::stoull(digits);
        if (p >= (1ull << 31) || !is_odd_prime(p))
            throw InputError("field modulus must be an odd prime below 2^31, got " + digits);
        return Field{static_cast<std::uint32_t>(p)};
    }
    throw InputError("bad field descriptor '" + text + "' (expected q or fp:<p>)");
}

} // namespace relgb
