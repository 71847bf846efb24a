#include "relgb/homres.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "relgb/error.hpp"
#include "relgb/groebner.hpp"

namespace relgb {

namespace {

std::vector<Scalar> coefficient_vector(const ModuleElement& f) {
    std::vector<Scalar> v(f.rank());
    for (const Term& t : f.terms()) v[t.mono.component] = t.coef;
    return v;
}

// Deletes coordinate k of f.
ModuleElement drop_component(const ModuleElement& f, std::size_t k) {
    std::vector<Term> terms;
    for (const Term& t : f.terms()) {
        if (t.mono.component == k) continue;
        terms.push_back(t);
        if (t.mono.component > k) --terms.back().mono.component;
    }
    return ModuleElement::from_terms(f.nvars(), f.rank() - 1, std::move(terms));
}

Shifts element_degrees(const std::vector<ModuleElement>& F, const Shifts& shifts) {
    Shifts out;
    for (const ModuleElement& f : F) out.push_back(degree_of(f, shifts));
    return out;
}

std::size_t count_leq(const Shifts& s, const Degree& a) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](const Degree& d) { return d.leq(a); }));
}

std::size_t slice_rank(const GradedMatrix& M, const Degree& a) {
    Matrix m = degree_slice(M, a);
    std::size_t cols = m.empty() ? 0 : m[0].size();
    return matrix_rank(std::move(m), cols);
}

OrderSpec position_over_term(OrderSpec spec, std::size_t rank) {
    spec.extension = Extension::POT;
    spec.schreyer = nullptr;
    if (spec.priority == ComponentPriority::Explicit && spec.component_descending.size() != rank) {
        spec.priority = ComponentPriority::Desc;
        spec.component_descending.clear();
    }
    return spec;
}

std::size_t thread_count(std::size_t requested) {
    if (requested) return requested;
    if (const char* env = std::getenv("RELGB_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

} // namespace

std::vector<ModuleElement> kernel_of_free_map(const GradedMatrix& M, const OrderSpec& spec) {
    if (auto bad = inhomogeneous_entry(M))
        throw InputError("entry (" + std::to_string(bad->first + 1) + "," + std::to_string(bad->second + 1) +
                         ") is not homogeneous");
    const std::size_t n = M.nvars, m = M.ncols();
    TrackedBasis tb = buchberger_tracked(M.columns, spec);
    std::vector<ModuleElement> out;
    if (!tb.basis.empty()) {
        for (const ModuleElement& w : schreyer_syzygies(tb.basis, spec).syzygies) {
            ModuleElement v = combine(w, tb.transforms, n, m);
            if (!v.is_zero()) out.push_back(std::move(v));
        }
    }
    for (std::size_t j = 0; j < m; ++j) {
        ModuleElement col = ModuleElement::basis(n, m, j);
        if (!tb.basis.empty()) {
            DivisionResult d = divide(M.columns[j], tb.basis, spec);
            if (!d.remainder.is_zero()) throw std::logic_error("column not reduced to zero by its Groebner basis");
            for (std::size_t k = 0; k < d.quotients.size(); ++k)
                for (const Term& t : d.quotients[k].terms()) col.add_scaled(tb.transforms[k], -t.coef, t.mono.exp);
        }
        if (!col.is_zero()) out.push_back(std::move(col));
    }
    return out;
}

HomologyPresentation homology_presentation(const TorsionFreeComplexInput& in, const OrderSpec& spec) {
    for (const GradedMatrix* M : {&in.D1, &in.P, &in.D2})
        if (!check_homogeneous(*M)) throw InputError("complex input matrix is not homogeneous");
    if (in.D1.ncols() != in.P.ncols()) throw DimensionError("D1 and P must have the same domain");
    if (in.P.nrows() != in.D2.nrows()) throw DimensionError("P and D2 must have the same codomain");
    if (in.D1.cols != in.P.cols) throw DimensionError("D1 and P have different domain shifts");
    if (in.P.rows != in.D2.rows) throw DimensionError("P and D2 have different codomain shifts");

    HomologyPresentation hp;
    hp.ambient = in.P.rows;
    hp.kernel = kernel_of_free_map(in.D1, spec);
    hp.kernel_gb = reduced_basis(hp.kernel, spec);
    std::vector<ModuleElement> V;
    for (const ModuleElement& k : hp.kernel) {
        ModuleElement v = apply(in.P, k);
        if (!v.is_zero()) V.push_back(std::move(v));
    }
    std::vector<ModuleElement> G_U = reduced_basis(in.D2.columns, spec);
    hp.pair = reduce_relative(relative_buchberger(V, G_U, spec));
    SyzygyResult syz = relative_schreyer(hp.pair, false);
    Shifts rows = element_degrees(hp.pair.H, hp.ambient);
    Shifts cols = column_degrees(syz.syzygies, rows);
    hp.presentation = GradedMatrix(in.P.nvars, std::move(rows), std::move(cols), std::move(syz.syzygies));
    return hp;
}

const Shifts& Resolution::degrees(std::size_t i) const {
    if (i == 0) return F0;
    return differentials.at(i - 1).cols;
}

Resolution free_resolution(const std::vector<ModuleElement>& V_gens, const std::vector<ModuleElement>& U_gens,
                           const Shifts& shifts, const OrderSpec& spec, std::size_t length) {
    Resolution res;
    res.nvars = shifts.empty() ? 0 : shifts[0].size();
    for (const auto* F : {&V_gens, &U_gens})
        for (const ModuleElement& f : *F) {
            res.nvars = f.nvars();
            if (f.rank() != shifts.size()) throw DimensionError("generator rank differs from the number of shifts");
            if (!f.is_zero() && !is_homogeneous(f, shifts)) throw InputError("generators must be homogeneous");
        }
    if (length == 0) length = res.nvars + 1;
    res.ambient = shifts;
    res.spec = spec;
    for (const ModuleElement& u : U_gens)
        if (!u.is_zero()) res.U.push_back(u);
    // A Groebner basis is kept as given, so ∂_1 follows its order.
    if (!is_groebner(res.U, spec)) res.U = reduced_basis(U_gens, spec);
    RelativePair pair = reduce_relative(relative_buchberger(V_gens, res.U, spec));
    res.H = pair.H;
    res.F0 = element_degrees(res.H, shifts);
    if (res.H.empty()) return res;

    SyzygyResult cur = relative_schreyer(pair, true);
    Shifts prev = res.F0;
    while (!cur.syzygies.empty() && res.differentials.size() < length) {
        Shifts cols = column_degrees(cur.syzygies, prev);
        res.differentials.emplace_back(res.nvars, prev, cols, cur.syzygies);
        prev = cols;
        cur = schreyer_syzygies(cur.syzygies, cur.order, true);
    }
    res.complete = cur.syzygies.empty();
    return res;
}

Resolution resolution_from_presentation(const GradedMatrix& d1, const OrderSpec& spec) {
    if (!check_homogeneous(d1)) throw InputError("presentation matrix is not homogeneous");
    Resolution res;
    res.nvars = d1.nvars;
    res.ambient = d1.rows;
    res.spec = spec;
    res.F0 = d1.rows;
    for (std::size_t i = 0; i < d1.nrows(); ++i) res.H.push_back(ModuleElement::basis(d1.nvars, d1.nrows(), i));
    res.U = reduced_basis(d1.columns, spec);
    res.differentials.push_back(d1);
    res.complete = false;
    return res;
}

std::optional<std::pair<std::size_t, std::size_t>> first_constant(const GradedMatrix& M) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t j = 0; j < M.ncols(); ++j)
        for (const Term& t : M.columns[j].terms())
            if (t.mono.exp.is_zero()) {
                std::pair<std::size_t, std::size_t> p{t.mono.component, j};
                if (!best || p < *best) best = p;
            }
    return best;
}

Resolution prune_minimize(const Resolution& input) {
    Resolution res = input;
    const std::size_t n = res.nvars;
    for (std::size_t l = 0; l < res.differentials.size(); ++l) {
        while (auto pivot = first_constant(res.differentials[l])) {
            auto [i1, j1] = *pivot;
            GradedMatrix& D = res.differentials[l];
            const Scalar c = D.columns[j1].coefficient(ModuleMonomial{Exponent(n), i1});

            // Clear row i1 outside column j1; λ_j is the multiple of column j1 used.
            std::vector<Polynomial> lambda(D.ncols(), ModuleElement(n, 1));
            for (std::size_t j = 0; j < D.ncols(); ++j) {
                if (j == j1) continue;
                Polynomial a = D.columns[j].entry(i1);
                if (a.is_zero()) continue;
                lambda[j] = a.scaled(c.inverse());
                D.columns[j] -= D.columns[j1].times(lambda[j]);
            }

            if (l + 1 < res.differentials.size()) {
                GradedMatrix& N = res.differentials[l + 1];
                for (ModuleElement& col : N.columns) {
                    ModuleElement add(n, 1);
                    for (std::size_t j = 0; j < lambda.size(); ++j)
                        if (!lambda[j].is_zero()) add += lambda[j].times(col.entry(j));
                    Polynomial updated = col.entry(j1) + add;
                    if (!updated.is_zero())
                        throw ContractViolation("pruning left a nonzero row; the differentials do not compose to zero");
                    col = drop_component(col, j1);
                }
                N.rows.erase(N.rows.begin() + static_cast<long>(j1));
            }

            if (l == 0) {
                res.H.erase(res.H.begin() + static_cast<long>(i1));
                res.F0.erase(res.F0.begin() + static_cast<long>(i1));
            } else {
                GradedMatrix& P = res.differentials[l - 1];
                P.columns.erase(P.columns.begin() + static_cast<long>(i1));
                P.cols.erase(P.cols.begin() + static_cast<long>(i1));
            }

            D.columns.erase(D.columns.begin() + static_cast<long>(j1));
            D.cols.erase(D.cols.begin() + static_cast<long>(j1));
            for (ModuleElement& col : D.columns) col = drop_component(col, i1);
            D.rows.erase(D.rows.begin() + static_cast<long>(i1));
        }
    }
    // A level whose module vanished ends the resolution there.
    while (!res.differentials.empty() && res.differentials.back().ncols() == 0) res.differentials.pop_back();
    res.minimized = true;
    return res;
}

GradedMatrix minimize_columns(const GradedMatrix& M) {
    std::vector<std::size_t> order(M.ncols());
    for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return M.cols[a] < M.cols[b]; });
    std::vector<std::size_t> kept;
    for (std::size_t j : order) {
        if (M.columns[j].is_zero()) continue;
        std::vector<ModuleElement> gens;
        for (std::size_t k : kept) gens.push_back(M.columns[k]);
        std::size_t before = submodule_dimension(gens, M.rows, M.cols[j]);
        gens.push_back(M.columns[j]);
        if (submodule_dimension(gens, M.rows, M.cols[j]) > before) kept.push_back(j);
    }
    std::sort(kept.begin(), kept.end());
    Shifts cols;
    std::vector<ModuleElement> columns;
    for (std::size_t j : kept) {
        cols.push_back(M.cols[j]);
        columns.push_back(M.columns[j]);
    }
    return GradedMatrix(M.nvars, M.rows, std::move(cols), std::move(columns));
}

std::vector<std::size_t> BettiTable::totals() const {
    std::vector<std::size_t> out;
    for (const auto& level : levels) {
        std::size_t s = 0;
        for (const auto& [d, c] : level) s += c;
        out.push_back(s);
    }
    return out;
}

BettiTable betti_numbers(const Resolution& res) {
    if (!res.minimized) throw ContractViolation("Betti numbers need a minimized resolution");
    BettiTable t;
    for (std::size_t i = 0; i <= res.length(); ++i) {
        const Shifts& d = res.degrees(i);
        if (d.empty()) break;
        std::map<Degree, std::size_t> level;
        for (const Degree& a : d) ++level[a];
        t.levels.push_back(std::move(level));
    }
    return t;
}

std::size_t DiagramModule::dim(const Degree& a) const {
    auto it = dims.find(a);
    return it == dims.end() ? 0 : it->second;
}

Matrix DiagramModule::map(const Degree& a, std::size_t k) const {
    auto it = maps.find({a, k});
    if (it != maps.end()) return it->second;
    Degree b = a;
    ++b[k];
    return zero_matrix(dim(b), dim(a));
}

std::optional<std::pair<Degree, Degree>> DiagramModule::support_box() const {
    std::optional<std::pair<Degree, Degree>> box;
    for (const auto& [a, d] : dims) {
        if (d == 0) continue;
        if (!box)
            box = std::make_pair(a, a);
        else
            box = std::make_pair(mon_meet(box->first, a), mon_join(box->second, a));
    }
    return box;
}

std::optional<std::string> DiagramModule::commutation_failure() const {
    for (const auto& [key, m] : maps) {
        const auto& [a, k] = key;
        Degree b = a;
        ++b[k];
        if (m.size() != dim(b) || (!m.empty() && m[0].size() != dim(a)))
            return "map X" + std::to_string(k + 1) + " at " + a.to_string() + " has the wrong size";
    }
    for (const auto& [a, d] : dims) {
        if (d == 0) continue;
        for (std::size_t i = 0; i < nvars; ++i)
            for (std::size_t j = i + 1; j < nvars; ++j) {
                Degree ai = a, aj = a, aij = a;
                ++ai[i];
                ++aj[j];
                ++aij[i];
                ++aij[j];
                std::size_t top = dim(aij);
                Matrix p = multiply(map(ai, j), map(a, i), dim(ai), d);
                Matrix q = multiply(map(aj, i), map(a, j), dim(aj), d);
                if (top && p != q)
                    return "X" + std::to_string(i + 1) + " and X" + std::to_string(j + 1) + " do not commute at " +
                           a.to_string();
            }
    }
    return std::nullopt;
}

DiagramRealization module_from_diagram(const DiagramModule& D, const OrderSpec& spec) {
    if (auto failure = D.commutation_failure()) throw InputError(*failure);
    const std::size_t n = D.nvars;
    DiagramRealization out;
    out.gamma = Degree(n);
    auto box = D.support_box();
    if (!box) return out;
    const auto& [lo, hi] = *box;

    // Generators: a complement N_a of the incoming images O_a, from unit vectors.
    for (const Degree& a : box_degrees(lo, hi)) {
        const std::size_t da = D.dim(a);
        if (da == 0) continue;
        Matrix span;
        for (std::size_t k = 0; k < n; ++k) {
            Degree p = a;
            if (--p[k] < lo[k] || D.dim(p) == 0) continue;
            Matrix m = D.map(p, k);
            for (std::size_t c = 0; c < D.dim(p); ++c) {
                std::vector<Scalar> v(da);
                for (std::size_t r = 0; r < da; ++r) v[r] = m[r][c];
                span.push_back(std::move(v));
            }
        }
        std::size_t rank = matrix_rank(span, da);
        for (std::size_t r = 0; r < da && rank < da; ++r) {
            std::vector<Scalar> e(da);
            e[r] = Scalar(1);
            span.push_back(e);
            std::size_t next = matrix_rank(span, da);
            if (next == rank) {
                span.pop_back();
                continue;
            }
            rank = next;
            out.generator_degrees.push_back(a);
            out.generator_vectors.push_back(e);
        }
    }
    const std::size_t d = out.generator_degrees.size();
    for (const Degree& a : out.generator_degrees) out.gamma = mon_meet(out.gamma, a);
    for (const Degree& a : out.generator_degrees) out.shifts.push_back(a - out.gamma);

    // X^{a - α_g} v_g in M_a, built from the images one step lower.
    Degree top = hi;
    for (std::size_t k = 0; k < n; ++k) ++top[k];
    std::vector<std::map<Degree, std::vector<Scalar>>> image(d);
    auto image_at = [&](std::size_t g, const Degree& a) -> const std::vector<Scalar>& {
        auto& im = image[g];
        auto it = im.find(a);
        if (it != im.end()) return it->second;
        std::vector<Scalar> v(D.dim(a));
        if (!v.empty()) {
            for (std::size_t k = 0; k < n; ++k) {
                Degree p = a;
                --p[k];
                if (!out.generator_degrees[g].leq(p)) continue;
                const std::vector<Scalar>& w = im.at(p);
                if (!w.empty()) {
                    Matrix m = D.map(p, k);
                    for (std::size_t r = 0; r < v.size(); ++r)
                        for (std::size_t c = 0; c < w.size(); ++c) v[r] += m[r][c] * w[c];
                }
                break;
            }
        }
        return im.emplace(a, std::move(v)).first->second;
    };
    for (std::size_t g = 0; g < d; ++g) image[g][out.generator_degrees[g]] = out.generator_vectors[g];

    // Syzygies degree by degree, keeping those not generated by earlier ones.
    std::vector<std::pair<Degree, std::vector<Scalar>>> syz;
    for (const Degree& a : box_degrees(lo, top)) {
        std::vector<std::size_t> live;
        for (std::size_t g = 0; g < d; ++g)
            if (out.generator_degrees[g].leq(a)) live.push_back(g);
        if (live.empty()) continue;
        const std::size_t da = D.dim(a);
        Matrix psi = zero_matrix(da, live.size());
        for (std::size_t c = 0; c < live.size(); ++c) {
            const std::vector<Scalar>& v = image_at(live[c], a);
            for (std::size_t r = 0; r < da; ++r) psi[r][c] = v[r];
        }
        Matrix span;
        for (const auto& [b, s] : syz)
            if (b.leq(a)) span.push_back(s);
        std::size_t rank = matrix_rank(span, d);
        for (const std::vector<Scalar>& k : nullspace(psi, live.size())) {
            std::vector<Scalar> s(d);
            for (std::size_t c = 0; c < live.size(); ++c) s[live[c]] = k[c];
            span.push_back(s);
            std::size_t next = matrix_rank(span, d);
            if (next == rank) {
                span.pop_back();
                continue;
            }
            rank = next;
            syz.emplace_back(a, std::move(s));
        }
    }

    std::vector<ModuleElement> kernel;
    for (const auto& [a, s] : syz) {
        std::vector<Term> terms;
        for (std::size_t g = 0; g < d; ++g)
            if (!s[g].is_zero())
                terms.push_back({ModuleMonomial{(a - out.generator_degrees[g]).to_exponent(), g}, s[g]});
        kernel.push_back(ModuleElement::from_terms(n, d, std::move(terms)));
    }
    OrderSpec pot = position_over_term(spec, d);
    out.U = monomialize(reduced_basis(kernel, pot), out.shifts);
    for (std::size_t g = 0; g < d; ++g)
        out.V.push_back(ModuleElement::monomial(n, d, ModuleMonomial{out.shifts[g].to_exponent(), g}));
    out.pair = reduce_relative(relative_buchberger(out.V, out.U, pot));
    return out;
}

DiagramModule diagram_from_subquotient(const std::vector<ModuleElement>& V_gens,
                                       const std::vector<ModuleElement>& U_gens, const Shifts& shifts,
                                       const Degree& lo, const Degree& hi) {
    const std::size_t r = shifts.size();
    const std::size_t n = lo.size();
    DiagramModule D;
    D.nvars = n;
    struct Part {
        Matrix basis;  // U_a rows followed by representatives of V_a / U_a
        std::size_t u = 0;
    };
    std::map<Degree, Part> parts;
    auto rows_at = [&](const std::vector<ModuleElement>& F, const Degree& a) {
        Matrix m;
        for (const ModuleElement& f : F) {
            if (f.is_zero()) continue;
            if (degree_of(f, shifts).leq(a)) m.push_back(coefficient_vector(f));
        }
        return m;
    };
    for (const Degree& a : box_degrees(lo, hi)) {
        Part p;
        Matrix u = rows_at(U_gens, a);
        row_reduce(u, r);
        for (auto& row : u)
            if (std::any_of(row.begin(), row.end(), [](const Scalar& s) { return !s.is_zero(); }))
                p.basis.push_back(row);
        p.u = p.basis.size();
        std::size_t rank = p.u;
        for (auto& v : rows_at(V_gens, a)) {
            p.basis.push_back(v);
            std::size_t next = matrix_rank(p.basis, r);
            if (next == rank)
                p.basis.pop_back();
            else
                rank = next;
        }
        if (rank < p.u) throw ContractViolation("U is not contained in V at degree " + a.to_string());
        if (rank > p.u) D.dims[a] = rank - p.u;
        parts.emplace(a, std::move(p));
    }
    for (const auto& [a, p] : parts) {
        const std::size_t da = p.basis.size() - p.u;
        if (da == 0) continue;
        for (std::size_t k = 0; k < n; ++k) {
            Degree b = a;
            ++b[k];
            auto it = parts.find(b);
            if (it == parts.end()) continue;
            const Part& q = it->second;
            const std::size_t db = q.basis.size() - q.u;
            if (db == 0) continue;
            Matrix cols = zero_matrix(r, q.basis.size());
            for (std::size_t c = 0; c < q.basis.size(); ++c)
                for (std::size_t i = 0; i < r; ++i) cols[i][c] = q.basis[c][i];
            Matrix m = zero_matrix(db, da);
            for (std::size_t c = 0; c < da; ++c) {
                auto x = solve(cols, q.basis.size(), p.basis[p.u + c]);
                if (!x) throw std::logic_error("multiplication leaves V");
                for (std::size_t i = 0; i < db; ++i) m[i][c] = (*x)[q.u + i];
            }
            D.maps[{a, k}] = std::move(m);
        }
    }
    return D;
}

VerifyReport verify_complex(const Resolution& res, const Degree& lo, const Degree& hi, std::size_t threads) {
    VerifyReport report;
    const std::size_t n = res.nvars;
    const std::size_t L = res.length();

    if (L > 0) {
        const GradedMatrix& d1 = res.differentials[0];
        for (std::size_t j = 0; j < d1.ncols(); ++j) {
            ModuleElement image = combine(d1.columns[j], res.H, n, res.ambient.size());
            if (!normal_form(image, res.U, res.spec).is_zero())
                report.failures.push_back("level 1, column " + std::to_string(j + 1) + ": image not in U");
        }
    }
    for (std::size_t l = 0; l + 1 < L; ++l) {
        GradedMatrix c = compose(res.differentials[l], res.differentials[l + 1]);
        for (std::size_t j = 0; j < c.ncols(); ++j)
            if (!c.columns[j].is_zero())
                report.failures.push_back("d" + std::to_string(l + 1) + " * d" + std::to_string(l + 2) + ", column " +
                                          std::to_string(j + 1) + " is nonzero");
    }

    std::vector<ModuleElement> V = res.H;
    V.insert(V.end(), res.U.begin(), res.U.end());
    std::vector<Degree> degrees = box_degrees(lo, hi);
    std::mutex mu;
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        std::vector<std::string> local;
        for (std::size_t idx = next++; idx < degrees.size(); idx = next++) {
            const Degree& a = degrees[idx];
            std::vector<std::size_t> rank(L + 1, 0);  // rank[l] = rank of ∂_l at a
            for (std::size_t l = 1; l <= L; ++l) rank[l] = slice_rank(res.differentials[l - 1], a);
            std::size_t expected = graded_dimension(V, res.U, res.ambient, a);
            std::size_t got = count_leq(res.F0, a) - (L ? rank[1] : 0);
            if (got != expected)
                local.push_back("degree " + a.to_string() + ", level 0: cokernel dimension " + std::to_string(got) +
                                ", module dimension " + std::to_string(expected));
            for (std::size_t l = 1; l <= L; ++l) {
                std::size_t ker = count_leq(res.degrees(l), a) - rank[l];
                if (l == L && !res.complete) continue;
                std::size_t img = l < L ? rank[l + 1] : 0;
                if (ker != img)
                    local.push_back("degree " + a.to_string() + ", level " + std::to_string(l) + ": kernel dimension " +
                                    std::to_string(ker) + ", image dimension " + std::to_string(img));
            }
        }
        std::lock_guard<std::mutex> lock(mu);
        report.failures.insert(report.failures.end(), local.begin(), local.end());
    };
    std::size_t workers = std::min(thread_count(threads), std::max<std::size_t>(degrees.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    std::sort(report.failures.begin(), report.failures.end());
    report.degrees_checked = degrees.size();
    return report;
}

std::pair<Degree, Degree> default_box(const Resolution& res) {
    std::optional<Degree> lo, hi;
    auto see = [&](const Shifts& s) {
        for (const Degree& a : s) {
            lo = lo ? mon_meet(*lo, a) : a;
            hi = hi ? mon_join(*hi, a) : a;
        }
    };
    see(res.ambient);
    see(res.F0);
    for (const GradedMatrix& d : res.differentials) see(d.cols);
    if (!lo) return {Degree(res.nvars), Degree(res.nvars)};
    for (std::size_t k = 0; k < res.nvars; ++k) ++(*hi)[k];
    return {*lo, *hi};
}

} // namespace relgb
