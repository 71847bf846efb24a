#pragma once

#include <vector>

#include "relgb/groebner.hpp"

namespace relgb {

// U ⊆ V ⊆ R^d, with U given by a Groebner basis and V = <H> + U.
struct RelativePair {
    std::vector<ModuleElement> U;
    std::vector<ModuleElement> H;
    OrderSpec spec;
};

struct RelativeDivisionResult {
    ModuleElement remainder;
    std::vector<Polynomial> quotients;  // one per element of H
};

// Division of f by H modulo U: a leading term divisible by some lm(U) is
// absorbed into U first, otherwise one divisible by some lm(H) is reduced,
// otherwise it moves to the remainder. f - p - sum q_i h_i lies in U.
RelativeDivisionResult relative_division(const ModuleElement& f, const std::vector<ModuleElement>& H,
                                         const std::vector<ModuleElement>& U, const OrderSpec& spec);

// Completes F_V to a Groebner basis of V = <F_V> + U relative to U (naive
// Buchberger on the U-normal forms of F_V followed by G_U); the elements of
// G_U are then dropped.
RelativePair relative_buchberger(const std::vector<ModuleElement>& F_V, const std::vector<ModuleElement>& G_U,
                                 const OrderSpec& spec);

// The unique reduced relative basis, sorted by decreasing leading monomial.
RelativePair reduce_relative(const RelativePair& pair);

bool is_relative_gb(const RelativePair& pair);

// Projected Schreyer syzygies of H relative to U: for G = H followed by U,
// the S_ij with i < j, i among the H-indices and equal leading components,
// projected onto the first |H| coordinates; zero projections are omitted.
// The result is a Groebner basis of Syz(H mod U) under result.order.
SyzygyResult relative_schreyer(const RelativePair& pair, bool minimal = false);

} // namespace relgb
