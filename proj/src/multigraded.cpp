#include "relgb/multigraded.hpp"

#include "relgb/error.hpp"

namespace relgb {

namespace {

void check_shift_count(const ModuleElement& f, const Shifts& shifts) {
    if (shifts.size() != f.rank())
        throw DimensionError("shift list has " + std::to_string(shifts.size()) + " entries for rank " +
                             std::to_string(f.rank()));
}

// Coordinates of a homogeneous element in the degree part containing it:
// one scalar per component.
std::vector<Scalar> coefficient_vector(const ModuleElement& f) {
    std::vector<Scalar> v(f.rank());
    for (const Term& t : f.terms()) v[t.mono.component] = t.coef;
    return v;
}

} // namespace

Shifts zero_shifts(std::size_t rank, std::size_t nvars) { return Shifts(rank, Degree(nvars)); }

std::optional<Degree> mdeg(const ModuleElement& f, const Shifts& shifts) {
    check_shift_count(f, shifts);
    if (f.is_zero()) return std::nullopt;
    std::optional<Degree> d;
    for (const Term& t : f.terms()) {
        Degree e = Degree(t.mono.exp) + shifts[t.mono.component];
        if (!d)
            d = e;
        else if (*d != e)
            return std::nullopt;
    }
    return d;
}

bool is_homogeneous(const ModuleElement& f, const Shifts& shifts) { return f.is_zero() || mdeg(f, shifts).has_value(); }

Degree degree_of(const ModuleElement& f, const Shifts& shifts) {
    auto d = mdeg(f, shifts);
    if (!d) throw ContractViolation(f.is_zero() ? "degree of the zero element" : "element is not homogeneous");
    return *d;
}

GradedMatrix::GradedMatrix(std::size_t n, Shifts row_shifts, Shifts col_shifts, std::vector<ModuleElement> cs)
    : nvars(n), rows(std::move(row_shifts)), cols(std::move(col_shifts)), columns(std::move(cs)) {
    if (columns.size() != cols.size()) throw DimensionError("column count differs from column shift count");
    for (const Degree& d : rows)
        if (d.size() != n) throw DimensionError("row shift has wrong length");
    for (const Degree& d : cols)
        if (d.size() != n) throw DimensionError("column shift has wrong length");
    for (const ModuleElement& c : columns)
        if (c.rank() != rows.size() || c.nvars() != n) throw DimensionError("column has wrong rank");
}

GradedMatrix GradedMatrix::from_rows(std::size_t n, Shifts row_shifts, Shifts col_shifts,
                                     const std::vector<std::vector<Polynomial>>& rws) {
    if (rws.size() != row_shifts.size()) throw DimensionError("row count differs from row shift count");
    std::vector<ModuleElement> columns;
    for (std::size_t j = 0; j < col_shifts.size(); ++j) {
        std::vector<Polynomial> entries;
        for (const auto& r : rws) {
            if (r.size() != col_shifts.size()) throw DimensionError("ragged matrix row");
            entries.push_back(r[j]);
        }
        columns.push_back(entries.empty() ? ModuleElement(n, 0) : ModuleElement::from_entries(n, entries));
    }
    return GradedMatrix(n, std::move(row_shifts), std::move(col_shifts), std::move(columns));
}

std::optional<std::pair<std::size_t, std::size_t>> inhomogeneous_entry(const GradedMatrix& M) {
    for (std::size_t j = 0; j < M.ncols(); ++j)
        for (const Term& t : M.columns[j].terms()) {
            std::size_t i = t.mono.component;
            if (Degree(t.mono.exp) != M.cols[j] - M.rows[i]) return std::make_pair(i, j);
        }
    return std::nullopt;
}

bool check_homogeneous(const GradedMatrix& M) { return !inhomogeneous_entry(M).has_value(); }

Shifts column_degrees(const std::vector<ModuleElement>& columns, const Shifts& rows) {
    Shifts out;
    for (const ModuleElement& c : columns) {
        if (c.is_zero()) {
            Degree j = rows.empty() ? Degree() : rows.front();
            for (const Degree& r : rows) j = mon_join(j, r);
            out.push_back(j);
        } else {
            out.push_back(degree_of(c, rows));
        }
    }
    return out;
}

ModuleElement monomialize(const ModuleElement& f, const Shifts& shifts) {
    check_shift_count(f, shifts);
    std::vector<Term> terms;
    for (const Term& t : f.terms()) {
        const Degree& s = shifts[t.mono.component];
        if (!s.is_nonnegative())
            throw InputError("monomialization needs nonnegative shifts; apply normalize_shifts first");
        terms.push_back({{t.mono.exp + s.to_exponent(), t.mono.component}, t.coef});
    }
    for (const Degree& s : shifts)
        if (!s.is_nonnegative())
            throw InputError("monomialization needs nonnegative shifts; apply normalize_shifts first");
    return ModuleElement::from_terms(f.nvars(), f.rank(), std::move(terms));
}

std::vector<ModuleElement> monomialize(const std::vector<ModuleElement>& F, const Shifts& shifts) {
    std::vector<ModuleElement> out;
    for (const ModuleElement& f : F) out.push_back(monomialize(f, shifts));
    return out;
}

NormalizedShifts normalize_shifts(const Shifts& degrees) {
    NormalizedShifts r;
    if (degrees.empty()) return r;
    r.gamma = degrees.front();
    for (const Degree& d : degrees) r.gamma = mon_meet(r.gamma, d);
    for (const Degree& d : degrees) r.shifted.push_back(d - r.gamma);
    return r;
}

std::size_t submodule_dimension(const std::vector<ModuleElement>& gens, const Shifts& shifts, const Degree& a) {
    // In the fine grading every degree part of a free module has at most one
    // monomial per coordinate, so X^b w has the coordinates of w itself.
    Matrix m;
    std::size_t cols = shifts.size();
    for (const ModuleElement& w : gens) {
        if (w.is_zero()) continue;
        auto d = mdeg(w, shifts);
        if (!d) throw ContractViolation("graded_dimension requires homogeneous generators");
        if (d->leq(a)) m.push_back(coefficient_vector(w));
    }
    return matrix_rank(std::move(m), cols);
}

std::size_t graded_dimension(const std::vector<ModuleElement>& gens_V, const std::vector<ModuleElement>& gens_U,
                             const Shifts& shifts, const Degree& a) {
    std::size_t v = submodule_dimension(gens_V, shifts, a);
    std::size_t u = submodule_dimension(gens_U, shifts, a);
    if (u > v) throw ContractViolation("U is not contained in V at degree " + a.to_string());
    return v - u;
}

Matrix degree_slice(const GradedMatrix& M, const Degree& a) {
    std::vector<std::size_t> row_index(M.nrows(), static_cast<std::size_t>(-1));
    std::size_t nr = 0;
    for (std::size_t i = 0; i < M.nrows(); ++i)
        if (M.rows[i].leq(a)) row_index[i] = nr++;
    std::vector<std::size_t> live_cols;
    for (std::size_t j = 0; j < M.ncols(); ++j)
        if (M.cols[j].leq(a)) live_cols.push_back(j);
    Matrix m = zero_matrix(nr, live_cols.size());
    for (std::size_t c = 0; c < live_cols.size(); ++c) {
        std::size_t j = live_cols[c];
        for (const Term& t : M.columns[j].terms()) {
            std::size_t i = t.mono.component;
            if (Degree(t.mono.exp) != M.cols[j] - M.rows[i])
                throw ContractViolation("degree slice of a non-homogeneous matrix");
            m[row_index[i]][c] = t.coef;
        }
    }
    return m;
}

std::vector<Degree> box_degrees(const Degree& lo, const Degree& hi) {
    if (lo.size() != hi.size()) throw DimensionError("box corners have different lengths");
    std::vector<Degree> out;
    if (!lo.leq(hi)) return out;
    Degree cur = lo;
    const std::size_t n = lo.size();
    while (true) {
        out.push_back(cur);
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (cur[k] < hi[k]) {
                ++cur[k];
                for (std::size_t l = k + 1; l < n; ++l) cur[l] = lo[l];
                break;
            }
            if (k == 0) return out;
        }
        if (n == 0) return out;
    }
}

ModuleElement apply(const GradedMatrix& M, const ModuleElement& v) {
    if (v.rank() != M.ncols()) throw DimensionError("vector length differs from matrix column count");
    return combine(v, M.columns, M.nvars, M.nrows());
}

GradedMatrix compose(const GradedMatrix& A, const GradedMatrix& B) {
    if (A.ncols() != B.nrows()) throw DimensionError("matrix sizes do not compose");
    std::vector<ModuleElement> cols;
    for (const ModuleElement& c : B.columns) cols.push_back(apply(A, c));
    return GradedMatrix(A.nvars, A.rows, B.cols, std::move(cols));
}

} // namespace relgb
