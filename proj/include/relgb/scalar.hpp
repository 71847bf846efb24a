#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace relgb {

// Exact field element: an arbitrary-precision rational (modulus 0) or a
// residue modulo an odd prime p < 2^31. Mixed arithmetic between a rational
// and a residue maps the rational into F_p first.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : q_(v) {}
    explicit Scalar(const mpq_class& q);

    static Scalar residue(long long v, std::uint32_t p);

    std::uint32_t modulus() const { return p_; }
    bool is_zero() const;
    bool is_one() const;
    // -1, 0 or 1; residues are never negative.
    int sign() const;

    const mpq_class& rational() const { return q_; }
    std::uint64_t residue_value() const { return r_; }

    Scalar operator-() const;
    Scalar inverse() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string to_string() const;

private:
    Scalar to_field(std::uint32_t p) const;

    mpq_class q_;
    std::uint64_t r_ = 0;
    std::uint32_t p_ = 0;
};

// Coefficient field of a session: Q (p = 0) or F_p.
struct Field {
    std::uint32_t p = 0;

    Scalar make(const mpq_class& q) const;
    Scalar make(long v) const { return make(mpq_class(v)); }
    std::string name() const;
    bool operator==(const Field& o) const { return p == o.p; }

    // Parses "q" or "fp:<p>"; p must be an odd prime below 2^31.
    static Field parse(const std::string& text);
};

bool is_odd_prime(std::uint64_t p);

} // namespace relgb
