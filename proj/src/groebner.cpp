#include "relgb/groebner.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "relgb/error.hpp"

namespace relgb {

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

ModuleElement monomial_of(const ModuleElement& like, const ModuleMonomial& m, const Scalar& c) {
    return ModuleElement::monomial(like.nvars(), like.rank(), m, c);
}

// Coefficients of S(f, g) = cf * X^ef * f - cg * X^eg * g.
struct SPairData {
    Scalar cf, cg;
    Exponent ef, eg;
};

std::optional<SPairData> spair_data(const Term& a, const Term& b) {
    auto l = mon_lcm(a.mono, b.mono);
    if (!l) return std::nullopt;
    return SPairData{a.coef.inverse(), b.coef.inverse(), l->exp - a.mono.exp, l->exp - b.mono.exp};
}

ModuleElement normalized(const ModuleElement& f, const OrderSpec& spec) {
    return f.scaled(leading(f, spec).coef.inverse());
}

} // namespace

DivisionResult divide(const ModuleElement& f, const std::vector<ModuleElement>& G, const OrderSpec& spec) {
    std::vector<Term> lts;
    lts.reserve(G.size());
    for (const ModuleElement& g : G) {
        if (g.is_zero()) throw InputError("division by a zero element");
        if (g.rank() != f.rank() || g.nvars() != f.nvars()) throw DimensionError("divisor rank differs from dividend");
        lts.push_back(leading(g, spec));
    }
    DivisionResult res;
    res.quotients.assign(G.size(), ModuleElement(f.nvars(), 1));
    res.remainder = ModuleElement(f.nvars(), f.rank());
    ModuleElement p = f;
    const Exponent one(f.nvars());
    while (!p.is_zero()) {
        Term lt = leading(p, spec);
        bool divided = false;
        for (std::size_t i = 0; i < G.size(); ++i) {
            if (!mon_divides(lts[i].mono, lt.mono)) continue;
            Scalar c = lt.coef / lts[i].coef;
            Exponent e = lt.mono.exp - lts[i].mono.exp;
            p.add_scaled(G[i], -c, e);
            res.quotients[i].add_scaled(ModuleElement::constant(f.nvars(), Scalar(1)), c, e);
            divided = true;
            break;
        }
        if (!divided) {
            ModuleElement t = monomial_of(p, lt.mono, lt.coef);
            p -= t;
            res.remainder += t;
        }
    }
    return res;
}

ModuleElement normal_form(const ModuleElement& f, const std::vector<ModuleElement>& G, const OrderSpec& spec) {
    return divide(f, G, spec).remainder;
}

ModuleElement s_polynomial(const ModuleElement& f, const ModuleElement& g, const OrderSpec& spec) {
    if (f.is_zero() || g.is_zero()) throw InputError("S-polynomial of a zero element");
    auto d = spair_data(leading(f, spec), leading(g, spec));
    ModuleElement s(f.nvars(), f.rank());
    if (!d) return s;
    s.add_scaled(f, d->cf, d->ef);
    s.add_scaled(g, -d->cg, d->eg);
    return s;
}

std::vector<ModuleElement> buchberger(const std::vector<ModuleElement>& F, const OrderSpec& spec, bool naive) {
    std::vector<ModuleElement> G;
    for (const ModuleElement& f : F)
        if (!f.is_zero()) G.push_back(f);
    std::vector<ModuleMonomial> lms;
    for (const ModuleElement& g : G) lms.push_back(leading(g, spec).mono);

    std::deque<Pair> queue;
    std::set<Pair> pending;
    for (std::size_t j = 0; j < G.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            if (lms[i].component != lms[j].component) continue;
            queue.emplace_back(i, j);
            pending.emplace(i, j);
        }
    std::sort(queue.begin(), queue.end());

    auto chain_skip = [&](std::size_t i, std::size_t j) {
        ModuleMonomial l = *mon_lcm(lms[i], lms[j]);
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (k == i || k == j || !mon_divides(lms[k], l)) continue;
            if (pending.count({std::min(i, k), std::max(i, k)}) || pending.count({std::min(j, k), std::max(j, k)}))
                continue;
            return true;
        }
        return false;
    };

    while (!queue.empty()) {
        auto [i, j] = queue.front();
        queue.pop_front();
        pending.erase({i, j});
        if (!naive && chain_skip(i, j)) continue;
        ModuleElement r = normal_form(s_polynomial(G[i], G[j], spec), G, spec);
        if (r.is_zero()) continue;
        G.push_back(normalized(r, spec));
        lms.push_back(leading(G.back(), spec).mono);
        std::size_t k = G.size() - 1;
        for (std::size_t i2 = 0; i2 < k; ++i2) {
            if (lms[i2].component != lms[k].component) continue;
            queue.emplace_back(i2, k);
            pending.emplace(i2, k);
        }
    }
    return G;
}

std::vector<std::size_t> minimal_subset(const std::vector<ModuleElement>& G, const OrderSpec& spec) {
    std::vector<ModuleMonomial> lms;
    for (const ModuleElement& g : G) lms.push_back(leading(g, spec).mono);
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < G.size(); ++k) {
        bool redundant = false;
        for (std::size_t l = 0; l < G.size() && !redundant; ++l) {
            if (l == k || !mon_divides(lms[l], lms[k])) continue;
            redundant = lms[l] != lms[k] || l < k;
        }
        if (!redundant) keep.push_back(k);
    }
    return keep;
}

std::vector<ModuleElement> minimize_basis(const std::vector<ModuleElement>& G, const OrderSpec& spec) {
    std::vector<ModuleElement> out;
    for (std::size_t k : minimal_subset(G, spec)) out.push_back(G[k]);
    return out;
}

std::vector<ModuleElement> reduce_groebner(const std::vector<ModuleElement>& G, const OrderSpec& spec) {
    std::vector<ModuleElement> nz;
    for (const ModuleElement& g : G)
        if (!g.is_zero()) nz.push_back(g);
    std::vector<ModuleElement> M = minimize_basis(nz, spec);
    std::vector<ModuleElement> out;
    for (const ModuleElement& g : M) {
        Term lt = leading(g, spec);
        ModuleElement head = ModuleElement::monomial(g.nvars(), g.rank(), lt.mono, lt.coef);
        ModuleElement tail = normal_form(g - head, M, spec);
        out.push_back((head + tail).scaled(lt.coef.inverse()));
    }
    std::sort(out.begin(), out.end(), [&](const ModuleElement& a, const ModuleElement& b) {
        return spec.compare(leading(a, spec).mono, leading(b, spec).mono) > 0;
    });
    return out;
}

std::vector<ModuleElement> reduced_basis(const std::vector<ModuleElement>& F, const OrderSpec& spec) {
    return reduce_groebner(buchberger(F, spec), spec);
}

TrackedBasis buchberger_tracked(const std::vector<ModuleElement>& F, const OrderSpec& spec) {
    const std::size_t m = F.size();
    std::size_t nvars = 0, rank = 0;
    for (const ModuleElement& f : F) {
        nvars = f.nvars();
        rank = f.rank();
    }
    TrackedBasis tb;
    for (std::size_t j = 0; j < m; ++j) {
        if (F[j].is_zero()) continue;
        tb.basis.push_back(F[j]);
        tb.transforms.push_back(ModuleElement::basis(nvars, m, j));
    }
    auto& G = tb.basis;
    auto& T = tb.transforms;

    // Reduce v (with coordinates tv) by the current basis.
    auto reduce = [&](ModuleElement v, ModuleElement tv, std::size_t skip) {
        ModuleElement rem(nvars, rank);
        while (!v.is_zero()) {
            Term lt = leading(v, spec);
            bool divided = false;
            for (std::size_t i = 0; i < G.size(); ++i) {
                if (i == skip) continue;
                Term li = leading(G[i], spec);
                if (!mon_divides(li.mono, lt.mono)) continue;
                Scalar c = lt.coef / li.coef;
                Exponent e = lt.mono.exp - li.mono.exp;
                v.add_scaled(G[i], -c, e);
                tv.add_scaled(T[i], -c, e);
                divided = true;
                break;
            }
            if (!divided) {
                ModuleElement t = ModuleElement::monomial(nvars, rank, lt.mono, lt.coef);
                v -= t;
                rem += t;
            }
        }
        return std::make_pair(rem, tv);
    };

    std::deque<Pair> queue;
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) queue.emplace_back(i, j);
    while (!queue.empty()) {
        auto [i, j] = queue.front();
        queue.pop_front();
        auto d = spair_data(leading(G[i], spec), leading(G[j], spec));
        if (!d) continue;
        ModuleElement s(nvars, rank), ts(nvars, m);
        s.add_scaled(G[i], d->cf, d->ef);
        s.add_scaled(G[j], -d->cg, d->eg);
        ts.add_scaled(T[i], d->cf, d->ef);
        ts.add_scaled(T[j], -d->cg, d->eg);
        auto [r, tr] = reduce(s, ts, static_cast<std::size_t>(-1));
        if (r.is_zero()) continue;
        Scalar inv = leading(r, spec).coef.inverse();
        G.push_back(r.scaled(inv));
        T.push_back(tr.scaled(inv));
        for (std::size_t k = 0; k + 1 < G.size(); ++k) queue.emplace_back(k, G.size() - 1);
    }

    // Minimize, then tail-reduce each element against the others.
    std::vector<std::size_t> keep = minimal_subset(G, spec);
    TrackedBasis out;
    for (std::size_t k : keep) {
        out.basis.push_back(G[k]);
        out.transforms.push_back(T[k]);
    }
    G = std::move(out.basis);
    T = std::move(out.transforms);
    for (std::size_t k = 0; k < G.size(); ++k) {
        Term lt = leading(G[k], spec);
        ModuleElement head = ModuleElement::monomial(nvars, rank, lt.mono, lt.coef);
        auto [tail, tt] = reduce(G[k] - head, T[k], k);
        // tt tracks G[k] - (tail reductions); head part is unchanged.
        Scalar inv = lt.coef.inverse();
        G[k] = (head + tail).scaled(inv);
        T[k] = tt.scaled(inv);
    }
    return tb;
}

bool is_groebner(const std::vector<ModuleElement>& G, const OrderSpec& spec) {
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j)
            if (!normal_form(s_polynomial(G[i], G[j], spec), G, spec).is_zero()) return false;
    return true;
}

SyzygyResult schreyer_syzygies(const std::vector<ModuleElement>& G, const OrderSpec& spec, bool minimal) {
    SyzygyResult res;
    const std::size_t s = G.size();
    if (s == 0) return res;
    const std::size_t nvars = G.front().nvars();
    res.order = schreyer_order(G, spec);
    std::vector<Term> lts;
    for (const ModuleElement& g : G) lts.push_back(leading(g, spec));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j) {
            auto d = spair_data(lts[i], lts[j]);
            if (!d) continue;
            ModuleElement sp(nvars, G[i].rank());
            sp.add_scaled(G[i], d->cf, d->ef);
            sp.add_scaled(G[j], -d->cg, d->eg);
            DivisionResult div = divide(sp, G, spec);
            if (!div.remainder.is_zero())
                throw ContractViolation("Schreyer syzygies requested for a list that is not a Groebner basis (S(" +
                                        std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                        ") has nonzero remainder)");
            ModuleElement sigma(nvars, s);
            sigma.add_scaled(ModuleElement::basis(nvars, s, i), d->cf, d->ef);
            sigma.add_scaled(ModuleElement::basis(nvars, s, j), -d->cg, d->eg);
            for (std::size_t k = 0; k < s; ++k)
                for (const Term& t : div.quotients[k].terms())
                    sigma.add_scaled(ModuleElement::basis(nvars, s, k), -t.coef, t.mono.exp);
            if (!sigma.is_zero()) res.syzygies.push_back(std::move(sigma));
        }
    if (minimal) res.syzygies = minimize_basis(res.syzygies, res.order);
    return res;
}

} // namespace relgb
