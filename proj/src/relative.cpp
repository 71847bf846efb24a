#include "relgb/relative.hpp"

#include <algorithm>

#include "relgb/error.hpp"

namespace relgb {

RelativeDivisionResult relative_division(const ModuleElement& f, const std::vector<ModuleElement>& H,
                                         const std::vector<ModuleElement>& U, const OrderSpec& spec) {
    std::vector<Term> lu, lh;
    for (const ModuleElement& u : U) {
        if (u.is_zero()) throw InputError("zero element in basis of U");
        lu.push_back(leading(u, spec));
    }
    for (const ModuleElement& h : H) {
        if (h.is_zero()) throw InputError("zero element in relative basis");
        if (h.rank() != f.rank()) throw DimensionError("relative basis element rank differs from dividend");
        lh.push_back(leading(h, spec));
    }
    RelativeDivisionResult res;
    res.remainder = ModuleElement(f.nvars(), f.rank());
    res.quotients.assign(H.size(), ModuleElement(f.nvars(), 1));
    const ModuleElement one = ModuleElement::constant(f.nvars(), Scalar(1));
    ModuleElement p = f;
    while (!p.is_zero()) {
        Term lt = leading(p, spec);
        bool done = false;
        for (std::size_t i = 0; i < U.size() && !done; ++i) {
            if (!mon_divides(lu[i].mono, lt.mono)) continue;
            p.add_scaled(U[i], -(lt.coef / lu[i].coef), lt.mono.exp - lu[i].mono.exp);
            done = true;
        }
        for (std::size_t i = 0; i < H.size() && !done; ++i) {
            if (!mon_divides(lh[i].mono, lt.mono)) continue;
            Scalar c = lt.coef / lh[i].coef;
            Exponent e = lt.mono.exp - lh[i].mono.exp;
            p.add_scaled(H[i], -c, e);
            res.quotients[i].add_scaled(one, c, e);
            done = true;
        }
        if (!done) {
            ModuleElement t = ModuleElement::monomial(f.nvars(), f.rank(), lt.mono, lt.coef);
            p -= t;
            res.remainder += t;
        }
    }
    return res;
}

RelativePair relative_buchberger(const std::vector<ModuleElement>& F_V, const std::vector<ModuleElement>& G_U,
                                 const OrderSpec& spec) {
    std::vector<ModuleElement> input;
    for (const ModuleElement& f : F_V) {
        ModuleElement r = normal_form(f, G_U, spec);
        if (!r.is_zero()) input.push_back(std::move(r));
    }
    const std::size_t first_u = input.size();
    for (const ModuleElement& u : G_U)
        if (!u.is_zero()) input.push_back(u);
    const std::size_t u_count = input.size() - first_u;
    std::vector<ModuleElement> all = buchberger(input, spec, true);

    RelativePair pair;
    pair.spec = spec;
    pair.U = G_U;
    for (std::size_t k = 0; k < all.size(); ++k)
        if (k < first_u || k >= first_u + u_count) pair.H.push_back(std::move(all[k]));
    return pair;
}

RelativePair reduce_relative(const RelativePair& pair) {
    const OrderSpec& spec = pair.spec;
    std::vector<ModuleElement> H;
    for (const ModuleElement& h : pair.H) {
        ModuleElement r = normal_form(h, pair.U, spec);
        if (!r.is_zero()) H.push_back(std::move(r));
    }
    H = minimize_basis(H, spec);
    // H together with U is a Groebner basis of V; reduce tails against it.
    std::vector<ModuleElement> full = H;
    full.insert(full.end(), pair.U.begin(), pair.U.end());
    RelativePair out;
    out.spec = spec;
    out.U = pair.U;
    for (const ModuleElement& h : H) {
        Term lt = leading(h, spec);
        ModuleElement head = ModuleElement::monomial(h.nvars(), h.rank(), lt.mono, lt.coef);
        ModuleElement tail = normal_form(h - head, full, spec);
        out.H.push_back((head + tail).scaled(lt.coef.inverse()));
    }
    std::sort(out.H.begin(), out.H.end(), [&](const ModuleElement& a, const ModuleElement& b) {
        return spec.compare(leading(a, spec).mono, leading(b, spec).mono) > 0;
    });
    return out;
}

bool is_relative_gb(const RelativePair& pair) {
    std::vector<ModuleElement> all = pair.H;
    all.insert(all.end(), pair.U.begin(), pair.U.end());
    return is_groebner(all, pair.spec);
}

SyzygyResult relative_schreyer(const RelativePair& pair, bool minimal) {
    SyzygyResult res;
    const auto& H = pair.H;
    const auto& U = pair.U;
    const OrderSpec& spec = pair.spec;
    const std::size_t t = H.size();
    if (t == 0) return res;
    const std::size_t nvars = H.front().nvars();
    res.order = schreyer_order(H, spec);

    std::vector<ModuleElement> G = H;
    G.insert(G.end(), U.begin(), U.end());
    std::vector<Term> lts;
    for (const ModuleElement& g : G) lts.push_back(leading(g, spec));

    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            auto l = mon_lcm(lts[i].mono, lts[j].mono);
            if (!l) continue;
            Scalar ci = lts[i].coef.inverse(), cj = lts[j].coef.inverse();
            Exponent ei = l->exp - lts[i].mono.exp, ej = l->exp - lts[j].mono.exp;
            ModuleElement sp(nvars, G[i].rank());
            sp.add_scaled(G[i], ci, ei);
            sp.add_scaled(G[j], -cj, ej);
            RelativeDivisionResult div = relative_division(sp, H, U, spec);
            if (!div.remainder.is_zero())
                throw ContractViolation("relative Schreyer syzygies requested for a basis that is not a Groebner "
                                        "basis relative to U (S(" +
                                        std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                        ") leaves a nonzero remainder)");
            ModuleElement sigma(nvars, t);
            sigma.add_scaled(ModuleElement::basis(nvars, t, i), ci, ei);
            if (j < t) sigma.add_scaled(ModuleElement::basis(nvars, t, j), -cj, ej);
            for (std::size_t k = 0; k < t; ++k)
                for (const Term& q : div.quotients[k].terms())
                    sigma.add_scaled(ModuleElement::basis(nvars, t, k), -q.coef, q.mono.exp);
            if (!sigma.is_zero()) res.syzygies.push_back(std::move(sigma));
        }
    if (minimal) res.syzygies = minimize_basis(res.syzygies, res.order);
    return res;
}

} // namespace relgb
