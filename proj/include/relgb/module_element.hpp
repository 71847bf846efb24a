#pragma once

#include <cstddef>
#include <vector>

#include "relgb/monomial.hpp"
#include "relgb/scalar.hpp"

namespace relgb {

struct Term {
    ModuleMonomial mono;
    Scalar coef;
};

// Sparse element of R^d, R = k[X1..Xn]. Terms are kept sorted in the
// canonical monomial order with no zero coefficients. A polynomial is an
// element of rank 1.
class ModuleElement {
public:
    ModuleElement() = default;
    ModuleElement(std::size_t nvars, std::size_t rank) : nvars_(nvars), rank_(rank) {}

    static ModuleElement monomial(std::size_t nvars, std::size_t rank, const ModuleMonomial& m,
                                  const Scalar& c = Scalar(1));
    // Standard basis vector e_{k+1}.
    static ModuleElement basis(std::size_t nvars, std::size_t rank, std::size_t k);
    static ModuleElement constant(std::size_t nvars, const Scalar& c);
    static ModuleElement from_terms(std::size_t nvars, std::size_t rank, std::vector<Term> terms);
    // Column vector whose k-th entry is the polynomial entries[k].
    static ModuleElement from_entries(std::size_t nvars, const std::vector<ModuleElement>& entries);

    std::size_t nvars() const { return nvars_; }
    std::size_t rank() const { return rank_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Scalar coefficient(const ModuleMonomial& m) const;
    // k-th coordinate as a polynomial.
    ModuleElement entry(std::size_t k) const;
    std::vector<ModuleElement> entries() const;
    // Constant polynomial? (rank 1, only the monomial 1 present)
    bool is_constant() const;

    ModuleElement operator-() const;
    ModuleElement& operator+=(const ModuleElement& g);
    ModuleElement& operator-=(const ModuleElement& g);
    friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
    friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }

    ModuleElement scaled(const Scalar& c) const;
    ModuleElement times_term(const Exponent& e, const Scalar& c) const;
    // Product with a polynomial p (rank 1).
    ModuleElement times(const ModuleElement& p) const;
    // this += c * X^e * g
    void add_scaled(const ModuleElement& g, const Scalar& c, const Exponent& e);

    // Drops coordinates >= t.
    ModuleElement truncated(std::size_t t) const;
    // Re-indexes coordinate k to map[k] in an ambient module of rank new_rank.
    ModuleElement reindexed(std::size_t new_rank, const std::vector<std::size_t>& map) const;

    friend bool operator==(const ModuleElement& a, const ModuleElement& b);
    friend bool operator!=(const ModuleElement& a, const ModuleElement& b) { return !(a == b); }

private:
    void check_compatible(const ModuleElement& g) const;

    std::size_t nvars_ = 0;
    std::size_t rank_ = 0;
    std::vector<Term> terms_;
};

using Polynomial = ModuleElement;

// Sum of coeffs[k] * gens[k]; coefficient vector given as an element of R^|gens|.
ModuleElement combine(const ModuleElement& coeffs, const std::vector<ModuleElement>& gens, std::size_t nvars,
                      std::size_t rank);

} // namespace relgb
