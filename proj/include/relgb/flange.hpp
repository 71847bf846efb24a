#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "relgb/linalg.hpp"
#include "relgb/multigraded.hpp"
#include "relgb/relative.hpp"

namespace relgb {

// Scalar s x t matrix of a map ⊕_j Σ^{β_j} R -> ⊕_i Σ^{α_i} E(k); an entry
// a_ij can only be nonzero when β_j <= α_i.
struct FreeInjectiveMatrix {
    std::size_t nvars = 0;
    std::vector<Degree> cogens;  // α_1..α_s, one per row
    std::vector<Degree> gens;    // β_1..β_t, one per column
    Matrix entries;

    FreeInjectiveMatrix() = default;
    FreeInjectiveMatrix(std::size_t n, std::vector<Degree> cogen_degrees, std::vector<Degree> gen_degrees,
                        Matrix values);

    std::size_t rows() const { return cogens.size(); }
    std::size_t cols() const { return gens.size(); }
    std::vector<Scalar> column(std::size_t j) const;
    bool satisfies_support() const;

    friend bool operator==(const FreeInjectiveMatrix& a, const FreeInjectiveMatrix& b);
};

// {X^{(α_ik + 1) ε_k} e_i}, ordered by row i, then variable k.
std::vector<ModuleElement> cofree_relations(const std::vector<Degree>& alpha, std::size_t nvars);

// Zeroes every entry with β_j not <= α_i.
FreeInjectiveMatrix fi_normalize(const FreeInjectiveMatrix& A);

// X^{β} sum_i v_i e_i
ModuleElement fi_column(const std::vector<Scalar>& v, const Degree& beta, std::size_t nvars);
// Monomialized columns of A (requires nonnegative generator degrees).
std::vector<ModuleElement> fi_columns(const FreeInjectiveMatrix& A);

// Relative division of X^{β} sum v_i e_i by the columns of A modulo the
// cofree relations of A's cogenerator degrees.
RelativeDivisionResult monomial_division(const std::vector<Scalar>& v, const Degree& beta,
                                         const FreeInjectiveMatrix& A, const OrderSpec& spec);

// S-polynomials handled by the flange algorithms: a pair of columns
// (j1 < j2), or column j against the cofree relation of row i and variable k.
struct FlangePairKey {
    int kind;  // 0: column pair, 1: column against cofree relation
    std::size_t a, b, c;
    friend auto operator<=>(const FlangePairKey&, const FlangePairKey&) = default;
};

// Division results shared between buchberger_flange and free_presentation.
// Quotients refer to the columns known when the entry was stored; a nonzero
// remainder that became a new column is recorded as that column's index.
struct FlangeDivisionCache {
    struct Entry {
        std::vector<Polynomial> quotients;
        std::optional<std::size_t> appended_column;
    };
    std::map<FlangePairKey, Entry> entries;
    std::size_t hits = 0;
};

// Relative Buchberger algorithm for free-injective matrices: returns a
// matrix in Groebner form with the same image, having A as its leading
// columns.
FreeInjectiveMatrix buchberger_flange(const FreeInjectiveMatrix& A, const OrderSpec& spec,
                                      FlangeDivisionCache* cache = nullptr);

// Whether the monomialized columns form a Groebner basis relative to the
// cofree relations. If not, names the first failing S-polynomial.
bool in_groebner_form(const FreeInjectiveMatrix& A, const OrderSpec& spec, std::string* failure = nullptr);

// Relative Schreyer presentation of im A for A in Groebner form: a graded
// matrix whose columns generate the syzygies of the columns of A modulo
// the cofree relations. Rows carry the generator degrees of A.
GradedMatrix free_presentation(const FreeInjectiveMatrix& A, const OrderSpec& spec,
                               FlangeDivisionCache* cache = nullptr);

// Transpose with negated degree data, shifted back into the positive orthant.
FreeInjectiveMatrix matlis_transpose(const FreeInjectiveMatrix& A);

// The subquotient V/U ⊆ R^s/U realizing im A after shift normalization:
// U = cofree relations, V = U + monomialized columns. gamma is the shift
// that was subtracted from every degree.
struct FlangeRealization {
    Degree gamma;
    std::vector<ModuleElement> U;
    std::vector<ModuleElement> V;
    Shifts ambient;  // zero shifts of R^s
};
FlangeRealization flange_realization(const FreeInjectiveMatrix& A);

} // namespace relgb
