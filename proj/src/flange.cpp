#include "relgb/flange.hpp"

#include <deque>

#include "relgb/error.hpp"

namespace relgb {

namespace {

// Degrees translated so that every α_i and β_j is nonnegative.
struct Frame {
    Degree gamma;
    std::vector<Degree> alpha, beta;
    std::vector<ModuleElement> GE, H;
};

Frame make_frame(const FreeInjectiveMatrix& A) {
    Frame f;
    f.gamma = Degree(A.nvars);
    for (const Degree& d : A.cogens) f.gamma = mon_meet(f.gamma, d);
    for (const Degree& d : A.gens) f.gamma = mon_meet(f.gamma, d);
    for (const Degree& d : A.cogens) f.alpha.push_back(d - f.gamma);
    for (const Degree& d : A.gens) f.beta.push_back(d - f.gamma);
    f.GE = cofree_relations(f.alpha, A.nvars);
    for (std::size_t j = 0; j < A.cols(); ++j) f.H.push_back(fi_column(A.column(j), f.beta[j], A.nvars));
    return f;
}

Exponent cofree_exponent(const Frame& f, std::size_t i, std::size_t k, std::size_t n) {
    return Exponent::unit(n, k, f.alpha[i][k] + 1);
}

// Multiplier X^m of column j in its S-polynomial with the cofree relation
// (i, k), and the polynomial itself: X^m h_j with its e_i coordinate removed.
std::pair<Exponent, ModuleElement> cofree_spoly(const Frame& f, std::size_t j, std::size_t i, std::size_t k,
                                                std::size_t n) {
    Exponent bj = f.beta[j].to_exponent();
    Exponent m = mon_join(bj, cofree_exponent(f, i, k, n)) - bj;
    ModuleElement s = f.H[j].times_term(m, Scalar(1));
    Scalar a = s.coefficient(ModuleMonomial{bj + m, i});
    if (!a.is_zero()) s -= ModuleElement::monomial(n, s.rank(), ModuleMonomial{bj + m, i}, a);
    return {m, s};
}

struct PairSpoly {
    bool defined = false;
    Scalar c1, c2;
    Exponent e1, e2;
    ModuleElement s;
};

PairSpoly column_spoly(const Frame& f, std::size_t j1, std::size_t j2, const OrderSpec& spec) {
    PairSpoly p;
    if (f.H[j1].is_zero() || f.H[j2].is_zero()) return p;
    Term l1 = leading(f.H[j1], spec), l2 = leading(f.H[j2], spec);
    auto l = mon_lcm(l1.mono, l2.mono);
    if (!l) return p;
    p.defined = true;
    p.c1 = l1.coef.inverse();
    p.c2 = l2.coef.inverse();
    p.e1 = l->exp - l1.mono.exp;
    p.e2 = l->exp - l2.mono.exp;
    p.s = ModuleElement(f.H[j1].nvars(), f.H[j1].rank());
    p.s.add_scaled(f.H[j1], p.c1, p.e1);
    p.s.add_scaled(f.H[j2], -p.c2, p.e2);
    return p;
}

// Relative division by the nonzero columns; zero columns get zero quotients.
RelativeDivisionResult divide_columns(const ModuleElement& S, const Frame& f, const OrderSpec& spec) {
    std::vector<ModuleElement> H;
    std::vector<std::size_t> index;
    for (std::size_t j = 0; j < f.H.size(); ++j)
        if (!f.H[j].is_zero()) {
            H.push_back(f.H[j]);
            index.push_back(j);
        }
    RelativeDivisionResult div = relative_division(S, H, f.GE, spec);
    std::vector<Polynomial> q(f.H.size(), ModuleElement(S.nvars(), 1));
    for (std::size_t l = 0; l < index.size(); ++l) q[index[l]] = std::move(div.quotients[l]);
    div.quotients = std::move(q);
    return div;
}

// Reads a homogeneous remainder X^δ sum v_i e_i back as a scalar column.
std::pair<std::vector<Scalar>, Degree> as_column(const ModuleElement& q, std::size_t s) {
    std::vector<Scalar> v(s);
    std::optional<Exponent> delta;
    for (const Term& t : q.terms()) {
        if (delta && *delta != t.mono.exp)
            throw std::logic_error("flange remainder is not of the form X^b times a scalar vector");
        delta = t.mono.exp;
        v[t.mono.component] = t.coef;
    }
    return {v, Degree(*delta)};
}

std::string describe_key(const FlangePairKey& key, const Frame& f, std::size_t n) {
    if (key.kind == 0) return "S(A_" + std::to_string(key.a + 1) + ", A_" + std::to_string(key.b + 1) + ")";
    return "S(A_" + std::to_string(key.a + 1) + ", X" + std::to_string(key.c + 1) + "^" +
           std::to_string(f.alpha[key.b][key.c] + 1) + "*e" + std::to_string(key.b + 1) + ")" +
           (n ? "" : "");
}

std::vector<Polynomial> padded(std::vector<Polynomial> q, std::size_t t, std::size_t n) {
    q.resize(t, ModuleElement(n, 1));
    return q;
}

} // namespace

FreeInjectiveMatrix::FreeInjectiveMatrix(std::size_t n, std::vector<Degree> cogen_degrees,
                                         std::vector<Degree> gen_degrees, Matrix values)
    : nvars(n), cogens(std::move(cogen_degrees)), gens(std::move(gen_degrees)), entries(std::move(values)) {
    if (entries.size() != cogens.size()) throw DimensionError("row count differs from cogenerator count");
    for (const auto& r : entries)
        if (r.size() != gens.size()) throw DimensionError("column count differs from generator count");
    for (const Degree& d : cogens)
        if (d.size() != n) throw DimensionError("cogenerator degree has wrong length");
    for (const Degree& d : gens)
        if (d.size() != n) throw DimensionError("generator degree has wrong length");
}

std::vector<Scalar> FreeInjectiveMatrix::column(std::size_t j) const {
    std::vector<Scalar> v;
    for (const auto& r : entries) v.push_back(r.at(j));
    return v;
}

bool FreeInjectiveMatrix::satisfies_support() const {
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j)
            if (!entries[i][j].is_zero() && !gens[j].leq(cogens[i])) return false;
    return true;
}

bool operator==(const FreeInjectiveMatrix& a, const FreeInjectiveMatrix& b) {
    return a.nvars == b.nvars && a.cogens == b.cogens && a.gens == b.gens && a.entries == b.entries;
}

std::vector<ModuleElement> cofree_relations(const std::vector<Degree>& alpha, std::size_t nvars) {
    std::vector<ModuleElement> out;
    const std::size_t s = alpha.size();
    for (std::size_t i = 0; i < s; ++i) {
        if (alpha[i].size() != nvars) throw DimensionError("cogenerator degree has wrong length");
        if (!alpha[i].is_nonnegative())
            throw InputError("cofree relations need nonnegative degrees; normalize shifts first");
        for (std::size_t k = 0; k < nvars; ++k)
            out.push_back(ModuleElement::monomial(nvars, s, ModuleMonomial{Exponent::unit(nvars, k, alpha[i][k] + 1), i}));
    }
    return out;
}

FreeInjectiveMatrix fi_normalize(const FreeInjectiveMatrix& A) {
    FreeInjectiveMatrix B = A;
    for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j)
            if (!B.gens[j].leq(B.cogens[i])) B.entries[i][j] = Scalar(0);
    return B;
}

ModuleElement fi_column(const std::vector<Scalar>& v, const Degree& beta, std::size_t nvars) {
    Exponent b = beta.to_exponent();
    std::vector<Term> terms;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) terms.push_back({ModuleMonomial{b, i}, v[i]});
    return ModuleElement::from_terms(nvars, v.size(), std::move(terms));
}

std::vector<ModuleElement> fi_columns(const FreeInjectiveMatrix& A) {
    std::vector<ModuleElement> out;
    for (std::size_t j = 0; j < A.cols(); ++j) out.push_back(fi_column(A.column(j), A.gens[j], A.nvars));
    return out;
}

RelativeDivisionResult monomial_division(const std::vector<Scalar>& v, const Degree& beta,
                                         const FreeInjectiveMatrix& A, const OrderSpec& spec) {
    if (v.size() != A.rows()) throw DimensionError("vector length differs from the number of cogenerators");
    if (beta.size() != A.nvars) throw DimensionError("degree has wrong length");
    FreeInjectiveMatrix B = A;
    B.gens.push_back(beta);
    for (std::size_t i = 0; i < B.rows(); ++i) B.entries[i].push_back(v[i]);
    Frame f = make_frame(B);
    ModuleElement target = f.H.back();
    f.H.pop_back();
    return divide_columns(target, f, spec);
}

FreeInjectiveMatrix buchberger_flange(const FreeInjectiveMatrix& input, const OrderSpec& spec,
                                      FlangeDivisionCache* cache) {
    FreeInjectiveMatrix A = fi_normalize(input);
    Frame f = make_frame(A);
    const std::size_t n = A.nvars, s = A.rows();

    std::deque<FlangePairKey> queue;
    auto push_new_column = [&](std::size_t j) {
        for (std::size_t l = 0; l < j; ++l) queue.push_back({0, l, j, 0});
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t k = 0; k < n; ++k) queue.push_back({1, j, i, k});
    };
    for (std::size_t j1 = 0; j1 < A.cols(); ++j1)
        for (std::size_t j2 = j1 + 1; j2 < A.cols(); ++j2) queue.push_back({0, j1, j2, 0});
    for (std::size_t j = 0; j < A.cols(); ++j)
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t k = 0; k < n; ++k) queue.push_back({1, j, i, k});

    while (!queue.empty()) {
        FlangePairKey key = queue.front();
        queue.pop_front();
        ModuleElement S;
        if (key.kind == 0) {
            PairSpoly p = column_spoly(f, key.a, key.b, spec);
            if (!p.defined) continue;
            S = p.s;
        } else {
            S = cofree_spoly(f, key.a, key.b, key.c, n).second;
        }
        RelativeDivisionResult div = divide_columns(S, f, spec);
        FlangeDivisionCache::Entry entry{div.quotients, std::nullopt};
        if (!div.remainder.is_zero()) {
            auto [v, delta] = as_column(div.remainder, s);
            f.H.push_back(div.remainder);
            f.beta.push_back(delta);
            A.gens.push_back(delta + f.gamma);
            for (std::size_t i = 0; i < s; ++i) A.entries[i].push_back(v[i]);
            entry.appended_column = A.cols() - 1;
            push_new_column(A.cols() - 1);
        }
        if (cache) cache->entries[key] = std::move(entry);
    }
    return A;
}

bool in_groebner_form(const FreeInjectiveMatrix& input, const OrderSpec& spec, std::string* failure) {
    FreeInjectiveMatrix A = fi_normalize(input);
    Frame f = make_frame(A);
    const std::size_t n = A.nvars;
    auto fail = [&](const FlangePairKey& key) {
        if (failure) *failure = describe_key(key, f, n);
        return false;
    };
    for (std::size_t j1 = 0; j1 < A.cols(); ++j1)
        for (std::size_t j2 = j1 + 1; j2 < A.cols(); ++j2) {
            PairSpoly p = column_spoly(f, j1, j2, spec);
            if (p.defined && !divide_columns(p.s, f, spec).remainder.is_zero()) return fail({0, j1, j2, 0});
        }
    for (std::size_t j = 0; j < A.cols(); ++j) {
        if (f.H[j].is_zero()) continue;
        std::size_t i = leading(f.H[j], spec).mono.component;
        for (std::size_t k = 0; k < n; ++k) {
            ModuleElement S = cofree_spoly(f, j, i, k, n).second;
            if (!divide_columns(S, f, spec).remainder.is_zero()) return fail({1, j, i, k});
        }
    }
    return true;
}

GradedMatrix free_presentation(const FreeInjectiveMatrix& input, const OrderSpec& spec, FlangeDivisionCache* cache) {
    FreeInjectiveMatrix A = fi_normalize(input);
    const std::size_t n = A.nvars, s = A.rows(), t = A.cols();
    std::string failure;
    if (!in_groebner_form(A, spec, &failure))
        throw ContractViolation("free-injective matrix is not in Groebner form: " + failure +
                                " has a nonzero remainder");
    Frame f = make_frame(A);

    // Standard representation of an S-polynomial, reusing stored results.
    auto quotients = [&](const FlangePairKey& key, const ModuleElement& S) {
        if (cache) {
            auto it = cache->entries.find(key);
            if (it != cache->entries.end()) {
                ++cache->hits;
                std::vector<Polynomial> q = padded(it->second.quotients, t, n);
                if (it->second.appended_column)
                    q[*it->second.appended_column] += ModuleElement::constant(n, Scalar(1));
                return q;
            }
        }
        RelativeDivisionResult div = divide_columns(S, f, spec);
        if (!div.remainder.is_zero())
            throw ContractViolation("free-injective matrix is not in Groebner form: " + describe_key(key, f, n) +
                                    " has a nonzero remainder");
        if (cache) cache->entries[key] = {div.quotients, std::nullopt};
        return div.quotients;
    };

    std::vector<ModuleElement> sigmas;
    Shifts degrees;
    auto subtract_quotients = [&](ModuleElement& sigma, const std::vector<Polynomial>& q) {
        for (std::size_t l = 0; l < t; ++l)
            for (const Term& term : q[l].terms())
                sigma.add_scaled(ModuleElement::basis(n, t, l), -term.coef, term.mono.exp);
    };

    for (std::size_t j1 = 0; j1 < t; ++j1)
        for (std::size_t j2 = j1 + 1; j2 < t; ++j2) {
            PairSpoly p = column_spoly(f, j1, j2, spec);
            if (!p.defined) continue;
            std::vector<Polynomial> q = quotients({0, j1, j2, 0}, p.s);
            ModuleElement sigma(n, t);
            sigma.add_scaled(ModuleElement::basis(n, t, j1), p.c1, p.e1);
            sigma.add_scaled(ModuleElement::basis(n, t, j2), -p.c2, p.e2);
            subtract_quotients(sigma, q);
            if (sigma.is_zero()) continue;
            sigmas.push_back(std::move(sigma));
            degrees.push_back(mon_join(f.beta[j1], f.beta[j2]) + f.gamma);
        }

    const std::size_t first_cofree = sigmas.size();
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < t; ++j)
            for (std::size_t k = 0; k < n && !f.H[j].is_zero(); ++k) {
                auto [m, S] = cofree_spoly(f, j, i, k, n);
                std::vector<Polynomial> q = quotients({1, j, i, k}, S);
                ModuleElement sigma = ModuleElement::monomial(n, t, ModuleMonomial{m, j});
                subtract_quotients(sigma, q);
                if (sigma.is_zero()) continue;
                bool repeated = false;
                for (std::size_t c = first_cofree; c < sigmas.size() && !repeated; ++c) repeated = sigmas[c] == sigma;
                if (repeated) continue;
                sigmas.push_back(std::move(sigma));
                degrees.push_back(f.beta[j] + Degree(m) + f.gamma);
            }
    // a zero column is its own syzygy
    for (std::size_t j = 0; j < t; ++j)
        if (f.H[j].is_zero()) {
            sigmas.push_back(ModuleElement::basis(n, t, j));
            degrees.push_back(A.gens[j]);
        }
    return GradedMatrix(n, A.gens, std::move(degrees), std::move(sigmas));
}

FreeInjectiveMatrix matlis_transpose(const FreeInjectiveMatrix& A) {
    Shifts all;
    for (const Degree& b : A.gens) all.push_back(-b);
    for (const Degree& a : A.cogens) all.push_back(-a);
    NormalizedShifts ns = normalize_shifts(all);
    std::vector<Degree> cogens(ns.shifted.begin(), ns.shifted.begin() + static_cast<long>(A.cols()));
    std::vector<Degree> gens(ns.shifted.begin() + static_cast<long>(A.cols()), ns.shifted.end());
    Matrix m = zero_matrix(A.cols(), A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) m[j][i] = A.entries[i][j];
    return FreeInjectiveMatrix(A.nvars, std::move(cogens), std::move(gens), std::move(m));
}

FlangeRealization flange_realization(const FreeInjectiveMatrix& input) {
    FreeInjectiveMatrix A = fi_normalize(input);
    Frame f = make_frame(A);
    FlangeRealization r;
    r.gamma = f.gamma;
    r.U = f.GE;
    r.V = f.GE;
    for (const ModuleElement& h : f.H)
        if (!h.is_zero()) r.V.push_back(h);
    r.ambient = zero_shifts(A.rows(), A.nvars);
    return r;
}

} // namespace relgb
