#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "relgb/homres.hpp"

namespace testing {

struct CheckTally {
    std::size_t total = 0;
    std::size_t failed = 0;
    std::string first_failure;

    void record(bool ok, const std::string& what);
    bool ok() const { return failed == 0 && total > 0; }
};

// Random polynomial data: n <= 3 variables, rank <= 3, degrees <= 4.
class Generator {
public:
    explicit Generator(std::uint32_t seed) : rng_(seed) {}

    int uniform(int lo, int hi);
    relgb::ModuleElement element(std::size_t nvars, std::size_t rank, int max_degree, std::size_t max_terms);
    // Homogeneous element of the given degree in ⊕ Σ^{shifts_i} R.
    relgb::ModuleElement homogeneous(const relgb::Shifts& shifts, const relgb::Degree& d);
    relgb::Degree degree(std::size_t nvars, int lo, int hi);
    template <class T>
    void shuffle(std::vector<T>& v) {
        std::shuffle(v.begin(), v.end(), rng_);
    }

private:
    std::mt19937 rng_;
};

// Outputs of buchberger and relative_buchberger satisfy the S-polynomial
// criterion and generate the input.
CheckTally check_buchberger_outputs(std::size_t instances, std::uint32_t seed);
// The reduced relative basis does not depend on generator order.
CheckTally check_shuffle_invariance(std::size_t trials, std::uint32_t seed);
// Random homogeneous subquotients U ⊆ V ⊆ ⊕ Σ^{β_i} R over k[X1,X2].
struct RandomSubquotient {
    std::vector<relgb::ModuleElement> V, U;
    relgb::Shifts shifts;
};
RandomSubquotient random_subquotient(Generator& gen);
// Presentation matrix over k[X1,X2] whose columns may contain constants.
relgb::GradedMatrix random_presentation(Generator& gen);
// prune_minimize keeps the Hilbert function of the presented module and the
// Euler characteristic of the complex on the default box, and leaves no
// constant entries. Half of the random instances are presentations.
CheckTally check_pruning(const std::vector<relgb::Resolution>& resolutions);
CheckTally check_random_pruning(std::size_t instances, std::uint32_t seed);
// verify_complex accepts every resolution.
CheckTally check_verify(const std::vector<relgb::Resolution>& resolutions);
// monomialize keeps degrees and is injective.
CheckTally check_monomialization(std::size_t samples, std::uint32_t seed);

} // namespace testing
