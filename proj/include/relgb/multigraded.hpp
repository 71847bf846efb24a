#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "relgb/linalg.hpp"
#include "relgb/module_element.hpp"

namespace relgb {

// Degrees of the basis vectors of a graded free module ⊕ Σ^{β_j} R; the
// basis vector e_j has degree β_j.
using Shifts = std::vector<Degree>;

Shifts zero_shifts(std::size_t rank, std::size_t nvars);

// Multidegree of a nonzero homogeneous element; nullopt for zero or
// non-homogeneous elements.
std::optional<Degree> mdeg(const ModuleElement& f, const Shifts& shifts);
bool is_homogeneous(const ModuleElement& f, const Shifts& shifts);
// Multidegree, throwing ContractViolation for zero or non-homogeneous input.
Degree degree_of(const ModuleElement& f, const Shifts& shifts);

// Map between graded free modules, stored by columns. Column j is an
// element of R^{rows.size()}; entry (i,j) has degree cols[j] - rows[i].
struct GradedMatrix {
    std::size_t nvars = 0;
    Shifts rows;
    Shifts cols;
    std::vector<ModuleElement> columns;

    GradedMatrix() = default;
    GradedMatrix(std::size_t n, Shifts row_shifts, Shifts col_shifts, std::vector<ModuleElement> columns);

    std::size_t nrows() const { return rows.size(); }
    std::size_t ncols() const { return cols.size(); }
    Polynomial entry(std::size_t i, std::size_t j) const { return columns.at(j).entry(i); }

    // Builds a matrix from rows of polynomial entries.
    static GradedMatrix from_rows(std::size_t n, Shifts row_shifts, Shifts col_shifts,
                                  const std::vector<std::vector<Polynomial>>& rows);
};

// First entry (row, column) violating the degree condition, if any.
std::optional<std::pair<std::size_t, std::size_t>> inhomogeneous_entry(const GradedMatrix& M);
bool check_homogeneous(const GradedMatrix& M);

// Column shifts making every nonzero column homogeneous over the given row
// shifts; zero columns get the join of the row shifts.
Shifts column_degrees(const std::vector<ModuleElement>& columns, const Shifts& rows);

// Multiplies coordinate j by X^{shifts[j]} (shifts must be >= 0).
ModuleElement monomialize(const ModuleElement& f, const Shifts& shifts);
std::vector<ModuleElement> monomialize(const std::vector<ModuleElement>& F, const Shifts& shifts);

struct NormalizedShifts {
    Degree gamma;
    Shifts shifted;
};
// gamma = componentwise meet, shifted = degrees - gamma.
NormalizedShifts normalize_shifts(const Shifts& degrees);

// dim V_a - dim U_a for the submodules generated by homogeneous gens_V and
// gens_U of ⊕ Σ^{shifts_i} R, by exact elimination in the degree-a part.
std::size_t graded_dimension(const std::vector<ModuleElement>& gens_V, const std::vector<ModuleElement>& gens_U,
                             const Shifts& shifts, const Degree& a);

// dim of the degree-a part of the submodule generated by gens.
std::size_t submodule_dimension(const std::vector<ModuleElement>& gens, const Shifts& shifts, const Degree& a);

// Scalar matrix of the degree-a component of M.
Matrix degree_slice(const GradedMatrix& M, const Degree& a);

// All lattice points lo <= a <= hi, in lexicographic order.
std::vector<Degree> box_degrees(const Degree& lo, const Degree& hi);

// Product of a graded matrix with a column vector of polynomials.
ModuleElement apply(const GradedMatrix& M, const ModuleElement& v);
// Composite A*B.
GradedMatrix compose(const GradedMatrix& A, const GradedMatrix& B);

} // namespace relgb
