#pragma once

#include <map>
#include <string>
#include <vector>

#include "relgb/linalg.hpp"
#include "relgb/multigraded.hpp"
#include "relgb/relative.hpp"

namespace relgb {

// Generators of ker M from a tracked Groebner basis G = M*A, M = G*B: the
// vectors A*w for Schreyer syzygies w of G, then the nonzero columns of
// I - A*B.
std::vector<ModuleElement> kernel_of_free_map(const GradedMatrix& M, const OrderSpec& spec);

// Free maps around a complex of free modules: D1 = ι0∘g∘π1, P = ι1∘π1 and
// D2 = ι1∘f∘π2. The homology ker g / im f is presented as V/U with
// V = P(ker D1) and U = im D2.
struct TorsionFreeComplexInput {
    GradedMatrix D1, P, D2;
};

struct HomologyPresentation {
    std::vector<ModuleElement> kernel;     // generators of ker D1
    std::vector<ModuleElement> kernel_gb;  // Groebner basis of ker D1
    RelativePair pair;                     // reduced relative basis of V/U
    Shifts ambient;                        // row shifts of P
    GradedMatrix presentation;             // relative Schreyer syzygies of pair.H
};

HomologyPresentation homology_presentation(const TorsionFreeComplexInput& input, const OrderSpec& spec);

// Free resolution F_L -> ... -> F_1 -> F_0 -> V/U -> 0 with U, V inside
// ⊕ Σ^{ambient_i} R. F_0 has one generator per element of H.
struct Resolution {
    std::size_t nvars = 0;
    Shifts ambient;
    OrderSpec spec;
    std::vector<ModuleElement> U;  // Groebner basis under spec
    std::vector<ModuleElement> H;  // images of the basis of F_0
    Shifts F0;                     // degrees of H
    std::vector<GradedMatrix> differentials;  // ∂_1, ∂_2, ...
    bool complete = true;  // false when cut off while the last kernel was nonzero
    bool minimized = false;

    std::size_t length() const { return differentials.size(); }
    // Degrees of the basis of F_i.
    const Shifts& degrees(std::size_t i) const;
};

// length 0 means nvars + 1 differentials at most.
Resolution free_resolution(const std::vector<ModuleElement>& V_gens, const std::vector<ModuleElement>& U_gens,
                           const Shifts& shifts, const OrderSpec& spec, std::size_t length = 0);

// Presentation of the module as the cokernel of ∂_1 (F_0 basis, U = im ∂_1)
// wrapped as a resolution with one differential.
Resolution resolution_from_presentation(const GradedMatrix& d1, const OrderSpec& spec = OrderSpec{});

// Entry (row, column) of the first nonzero constant in row-major order.
std::optional<std::pair<std::size_t, std::size_t>> first_constant(const GradedMatrix& M);

// Removes every nonzero constant entry by pruning, lowest level first.
Resolution prune_minimize(const Resolution& res);

// Drops columns lying in the submodule generated by the columns kept
// before them; columns are visited by increasing degree.
GradedMatrix minimize_columns(const GradedMatrix& M);

struct BettiTable {
    std::vector<std::map<Degree, std::size_t>> levels;
    std::vector<std::size_t> totals() const;
};

// Requires res.minimized.
BettiTable betti_numbers(const Resolution& res);

// Finite diagram of vector spaces: dim M_a and the maps X_k: M_a -> M_{a+ε_k}.
// Degrees without an entry in dims are zero; absent maps between nonzero
// spaces are zero maps.
struct DiagramModule {
    std::size_t nvars = 0;
    std::map<Degree, std::size_t> dims;
    std::map<std::pair<Degree, std::size_t>, Matrix> maps;

    std::size_t dim(const Degree& a) const;
    // dim(a + ε_k) x dim(a)
    Matrix map(const Degree& a, std::size_t k) const;
    // Smallest and largest corner of the support; nullopt for the zero module.
    std::optional<std::pair<Degree, Degree>> support_box() const;
    // First degree and variable pair where X_i X_j != X_j X_i, if any.
    std::optional<std::string> commutation_failure() const;
};

struct DiagramRealization {
    Degree gamma;                    // degrees a of M correspond to a - gamma
    Shifts shifts;                   // generator degrees, translated by -gamma
    std::vector<Degree> generator_degrees;           // original degrees
    std::vector<std::vector<Scalar>> generator_vectors;  // in M_{degree}
    std::vector<ModuleElement> V;    // X^{shift_g} e_g
    std::vector<ModuleElement> U;    // monomialized reduced POT basis of the syzygies
    RelativePair pair;               // reduced relative basis of V/U
};

// V/U inside R^d (unshifted) realizing M, with d minimal.
DiagramRealization module_from_diagram(const DiagramModule& D, const OrderSpec& spec);

// Diagram of V/U ⊆ ⊕ Σ^{shifts_i} R over the box lo..hi.
DiagramModule diagram_from_subquotient(const std::vector<ModuleElement>& V_gens,
                                       const std::vector<ModuleElement>& U_gens, const Shifts& shifts,
                                       const Degree& lo, const Degree& hi);

struct VerifyReport {
    std::vector<std::string> failures;
    std::size_t degrees_checked = 0;
    bool exact() const { return failures.empty(); }
};

// Composites vanish (modulo U at level 0) and every slice in lo..hi is
// exact. threads = 0 reads RELGB_THREADS, else uses the hardware count.
VerifyReport verify_complex(const Resolution& res, const Degree& lo, const Degree& hi, std::size_t threads = 0);

// Meet of all degrees occurring in res, and their join plus (1,...,1).
std::pair<Degree, Degree> default_box(const Resolution& res);

} // namespace relgb
