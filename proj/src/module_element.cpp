#include "relgb/module_element.hpp"

#include <algorithm>

#include "relgb/error.hpp"

namespace relgb {

ModuleElement ModuleElement::monomial(std::size_t nvars, std::size_t rank, const ModuleMonomial& m,
                                      const Scalar& c) {
    if (m.exp.size() != nvars) throw DimensionError("monomial has wrong number of variables");
    if (m.component >= rank) throw DimensionError("component index out of range");
    ModuleElement f(nvars, rank);
    if (!c.is_zero()) f.terms_.push_back({m, c});
    return f;
}

ModuleElement ModuleElement::basis(std::size_t nvars, std::size_t rank, std::size_t k) {
    return monomial(nvars, rank, ModuleMonomial{Exponent(nvars), k});
}

ModuleElement ModuleElement::constant(std::size_t nvars, const Scalar& c) {
    return monomial(nvars, 1, ModuleMonomial{Exponent(nvars), 0}, c);
}

ModuleElement ModuleElement::from_terms(std::size_t nvars, std::size_t rank, std::vector<Term> terms) {
    for (const Term& t : terms) {
        if (t.mono.exp.size() != nvars) throw DimensionError("term has wrong number of variables");
        if (t.mono.component >= rank) throw DimensionError("component index out of range");
    }
    std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
    ModuleElement f(nvars, rank);
    for (Term& t : terms) {
        if (!f.terms_.empty() && f.terms_.back().mono == t.mono)
            f.terms_.back().coef += t.coef;
        else
            f.terms_.push_back(std::move(t));
        if (f.terms_.back().coef.is_zero()) f.terms_.pop_back();
    }
    return f;
}

ModuleElement ModuleElement::from_entries(std::size_t nvars, const std::vector<ModuleElement>& entries) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (entries[k].rank() != 1 && !entries[k].is_zero())
            throw DimensionError("matrix entry must be a polynomial");
        if (entries[k].nvars() != nvars && !entries[k].is_zero())
            throw DimensionError("matrix entry has wrong number of variables");
        for (const Term& t : entries[k].terms()) terms.push_back({{t.mono.exp, k}, t.coef});
    }
    return from_terms(nvars, entries.size(), std::move(terms));
}

Scalar ModuleElement::coefficient(const ModuleMonomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const ModuleMonomial& x) { return t.mono < x; });
    if (it != terms_.end() && it->mono == m) return it->coef;
    return Scalar(0);
}

ModuleElement ModuleElement::entry(std::size_t k) const {
    if (k >= rank_) throw DimensionError("coordinate index out of range");
    ModuleElement p(nvars_, 1);
    for (const Term& t : terms_)
        if (t.mono.component == k) p.terms_.push_back({{t.mono.exp, 0}, t.coef});
    return p;
}

std::vector<ModuleElement> ModuleElement::entries() const {
    std::vector<ModuleElement> out(rank_, ModuleElement(nvars_, 1));
    for (const Term& t : terms_) out[t.mono.component].terms_.push_back({{t.mono.exp, 0}, t.coef});
    return out;
}

bool ModuleElement::is_constant() const {
    return rank_ == 1 && (terms_.empty() || (terms_.size() == 1 && terms_[0].mono.exp.is_zero()));
}

ModuleElement ModuleElement::operator-() const {
    ModuleElement r = *this;
    for (Term& t : r.terms_) t.coef = -t.coef;
    return r;
}

void ModuleElement::check_compatible(const ModuleElement& g) const {
    if (g.nvars_ != nvars_ || g.rank_ != rank_)
        throw DimensionError("incompatible module elements: rank " + std::to_string(rank_) + " vs " +
                             std::to_string(g.rank_) + ", variables " + std::to_string(nvars_) + " vs " +
                             std::to_string(g.nvars_));
}

void ModuleElement::add_scaled(const ModuleElement& g, const Scalar& c, const Exponent& e) {
    check_compatible(g);
    if (c.is_zero() || g.is_zero()) return;
    bool shift = !e.is_zero();
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    auto a = terms_.begin();
    auto b = g.terms_.begin();
    auto shifted = [&](const Term& t) {
        return Term{ModuleMonomial{shift ? t.mono.exp + e : t.mono.exp, t.mono.component}, t.coef * c};
    };
    // Multiplying by X^e preserves the canonical order within a component.
    while (a != terms_.end() || b != g.terms_.end()) {
        if (b == g.terms_.end()) {
            out.push_back(std::move(*a++));
            continue;
        }
        Term tb = shifted(*b);
        if (a == terms_.end() || tb.mono < a->mono) {
            out.push_back(std::move(tb));
            ++b;
        } else if (a->mono < tb.mono) {
            out.push_back(std::move(*a++));
        } else {
            Scalar s = a->coef + tb.coef;
            if (!s.is_zero()) out.push_back({std::move(a->mono), s});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& g) {
    if (g.is_zero() && g.rank_ == 0) return *this;
    add_scaled(g, Scalar(1), Exponent(nvars_));
    return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& g) {
    if (g.is_zero() && g.rank_ == 0) return *this;
    add_scaled(g, Scalar(-1), Exponent(nvars_));
    return *this;
}

ModuleElement ModuleElement::scaled(const Scalar& c) const {
    if (c.is_zero()) return ModuleElement(nvars_, rank_);
    ModuleElement r = *this;
    for (Term& t : r.terms_) t.coef *= c;
    return r;
}

ModuleElement ModuleElement::times_term(const Exponent& e, const Scalar& c) const {
    if (e.size() != nvars_) throw DimensionError("multiplier has wrong number of variables");
    if (c.is_zero()) return ModuleElement(nvars_, rank_);
    ModuleElement r = *this;
    for (Term& t : r.terms_) {
        t.mono.exp += e;
        t.coef *= c;
    }
    return r;
}

ModuleElement ModuleElement::times(const ModuleElement& p) const {
    if (p.rank_ != 1 || p.nvars_ != nvars_) throw DimensionError("multiplier must be a polynomial over the same ring");
    ModuleElement r(nvars_, rank_);
    for (const Term& t : p.terms_) r.add_scaled(*this, t.coef, t.mono.exp);
    return r;
}

ModuleElement ModuleElement::truncated(std::size_t t) const {
    ModuleElement r(nvars_, t);
    for (const Term& x : terms_)
        if (x.mono.component < t) r.terms_.push_back(x);
    return r;
}

ModuleElement ModuleElement::reindexed(std::size_t new_rank, const std::vector<std::size_t>& map) const {
    if (map.size() != rank_) throw DimensionError("re-index map has wrong length");
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const Term& t : terms_) terms.push_back({{t.mono.exp, map[t.mono.component]}, t.coef});
    return from_terms(nvars_, new_rank, std::move(terms));
}

bool operator==(const ModuleElement& a, const ModuleElement& b) {
    if (a.nvars_ != b.nvars_ || a.rank_ != b.rank_) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
    return true;
}

ModuleElement combine(const ModuleElement& coeffs, const std::vector<ModuleElement>& gens, std::size_t nvars,
                      std::size_t rank) {
    if (coeffs.rank() != gens.size()) throw DimensionError("coefficient vector length differs from generator count");
    ModuleElement r(nvars, rank);
    for (const Term& t : coeffs.terms()) r.add_scaled(gens[t.mono.component], t.coef, t.mono.exp);
    return r;
}

} // namespace relgb
