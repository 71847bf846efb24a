#pragma once

#include <vector>

#include "relgb/module_element.hpp"
#include "relgb/order.hpp"

namespace relgb {

struct DivisionResult {
    std::vector<Polynomial> quotients;
    ModuleElement remainder;
};

// Multivariate division. Among divisors whose leading monomial divides the
// current leading term, the one with the smallest index is used.
DivisionResult divide(const ModuleElement& f, const std::vector<ModuleElement>& G, const OrderSpec& spec);

ModuleElement normal_form(const ModuleElement& f, const std::vector<ModuleElement>& G, const OrderSpec& spec);

// Zero when the leading components differ. Not normalized.
ModuleElement s_polynomial(const ModuleElement& f, const ModuleElement& g, const OrderSpec& spec);

// Groebner basis of <F>. Pairs are processed first-in first-out in
// lexicographic order, new elements appended with their pairs. With
// naive = true the nonzero elements of F form a prefix of the output and
// nothing is ever removed; otherwise the chain criterion skips pairs.
std::vector<ModuleElement> buchberger(const std::vector<ModuleElement>& F, const OrderSpec& spec, bool naive = true);

// A basis together with coordinates: basis[k] = sum_j transforms[k]_j * F[j].
struct TrackedBasis {
    std::vector<ModuleElement> basis;
    std::vector<ModuleElement> transforms;
};

// Reduced Groebner basis of <F> with transformation bookkeeping.
TrackedBasis buchberger_tracked(const std::vector<ModuleElement>& F, const OrderSpec& spec);

// Removes elements whose leading monomial is divisible by that of another
// element (for equal leading monomials the smaller index survives).
std::vector<ModuleElement> minimize_basis(const std::vector<ModuleElement>& G, const OrderSpec& spec);

// Unique reduced basis, sorted by decreasing leading monomial.
std::vector<ModuleElement> reduce_groebner(const std::vector<ModuleElement>& G, const OrderSpec& spec);

// Convenience: reduce_groebner(buchberger(F)).
std::vector<ModuleElement> reduced_basis(const std::vector<ModuleElement>& F, const OrderSpec& spec);

bool is_groebner(const std::vector<ModuleElement>& G, const OrderSpec& spec);

struct SyzygyResult {
    std::vector<ModuleElement> syzygies;
    OrderSpec order;
};

// Schreyer syzygies S_ij (i < j with equal leading components) of a Groebner
// basis; they form a Groebner basis of Syz(G) under schreyer_order(G).
// With minimal = true only a subset minimally generating the leading
// module is kept.
SyzygyResult schreyer_syzygies(const std::vector<ModuleElement>& G, const OrderSpec& spec, bool minimal = false);

// Indices of the elements kept by a minimal sub-basis selection.
std::vector<std::size_t> minimal_subset(const std::vector<ModuleElement>& G, const OrderSpec& spec);

} // namespace relgb
