#pragma once

#include <string>
#include <vector>

#include "relgb/flange.hpp"
#include "relgb/homres.hpp"
#include "support.hpp"

namespace testing {

// Subquotient V/U of a free module, read from the files <name>_U.txt and
// <name>_V.txt (or a single generator list with U = 0).
struct Subquotient {
    Ring ring;
    OrderSpec spec;
    std::vector<ModuleElement> V, U;
    Shifts shifts;
};

Subquotient load_subquotient(const std::string& v_file, const std::string& u_file, const std::string& order);

// X^5, ..., Y^5 and {Y^3, XY^2 + X^3} over k[X,Y].
Subquotient fifth_power_pair();
// The ideal (XY, YZ, XZ).
Subquotient monomial_triangle();
// Rank 6 and rank 2 realizations of the same module.
Subquotient realization_R6();
Subquotient realization_R2();

FreeInjectiveMatrix load_fim(const std::string& file);
OrderSpec flange_order();
TorsionFreeComplexInput bifiltration(Ring* ring = nullptr);
DiagramModule flange_diagram();

// Resolutions of the finely graded data files, with a label.
struct NamedResolution {
    std::string name;
    Resolution res;
};
std::vector<NamedResolution> reference_resolutions();

} // namespace testing
