#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace relgb {

// Exponent vector in N^n.
class Exponent {
public:
    Exponent() = default;
    explicit Exponent(std::size_t n) : v_(n, 0) {}
    Exponent(std::initializer_list<int> v);
    explicit Exponent(std::vector<int> v);

    static Exponent unit(std::size_t n, std::size_t k, int power = 1);

    std::size_t size() const { return v_.size(); }
    int operator[](std::size_t i) const { return v_[i]; }
    const std::vector<int>& values() const { return v_; }

    long total() const;
    bool is_zero() const;
    // this <= o componentwise
    bool divides(const Exponent& o) const;

    Exponent& operator+=(const Exponent& o);
    friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }
    // Requires b to divide a.
    friend Exponent operator-(const Exponent& a, const Exponent& b);

    friend bool operator==(const Exponent&, const Exponent&) = default;
    friend auto operator<=>(const Exponent& a, const Exponent& b) { return a.v_ <=> b.v_; }

private:
    std::vector<int> v_;
};

// Lattice point in Z^n, used for multidegrees and shifts.
class Degree {
public:
    Degree() = default;
    explicit Degree(std::size_t n) : v_(n, 0) {}
    Degree(std::initializer_list<int> v) : v_(v) {}
    explicit Degree(std::vector<int> v) : v_(std::move(v)) {}
    explicit Degree(const Exponent& e) : v_(e.values()) {}

    std::size_t size() const { return v_.size(); }
    int operator[](std::size_t i) const { return v_[i]; }
    int& operator[](std::size_t i) { return v_[i]; }
    const std::vector<int>& values() const { return v_; }

    bool leq(const Degree& o) const;
    bool is_nonnegative() const;
    // The exponent vector of this degree; throws if some entry is negative.
    Exponent to_exponent() const;

    Degree& operator+=(const Degree& o);
    Degree& operator-=(const Degree& o);
    friend Degree operator+(Degree a, const Degree& b) { return a += b; }
    friend Degree operator-(Degree a, const Degree& b) { return a -= b; }
    Degree operator-() const;

    friend bool operator==(const Degree&, const Degree&) = default;
    friend auto operator<=>(const Degree& a, const Degree& b) { return a.v_ <=> b.v_; }

    std::string to_string() const;

private:
    std::vector<int> v_;
};

Exponent mon_join(const Exponent& a, const Exponent& b);
Exponent mon_meet(const Exponent& a, const Exponent& b);
Degree mon_join(const Degree& a, const Degree& b);
Degree mon_meet(const Degree& a, const Degree& b);

// X^exp e_{component+1}; components are stored 0-based.
struct ModuleMonomial {
    Exponent exp;
    std::size_t component = 0;

    friend bool operator==(const ModuleMonomial&, const ModuleMonomial&) = default;
    // Canonical order: component ascending, then exponent lexicographic.
    friend std::strong_ordering operator<=>(const ModuleMonomial& a, const ModuleMonomial& b) {
        if (auto c = a.component <=> b.component; c != 0) return c;
        return a.exp <=> b.exp;
    }
};

bool mon_divides(const ModuleMonomial& a, const ModuleMonomial& b);
// Least common multiple of two monomials in the same component.
std::optional<ModuleMonomial> mon_lcm(const ModuleMonomial& a, const ModuleMonomial& b);

} // namespace relgb
