#pragma once

#include <memory>
#include <string>
#include <vector>

#include "relgb/module_element.hpp"

namespace relgb {

enum class BaseOrder { Lex, Grlex, Grevlex };
enum class Extension { POT, TOP };
// Desc: e1 > e2 > ...; Asc: e1 < e2 < ...; Explicit: listed greatest first.
enum class ComponentPriority { Desc, Asc, Explicit };

struct SchreyerContext;

// Monomial order on R^d. Variables are ranked by var_ascending (smallest
// first; empty means x1 < x2 < ... < xn).
class OrderSpec {
public:
    BaseOrder base = BaseOrder::Grevlex;
    std::vector<std::size_t> var_ascending;
    Extension extension = Extension::POT;
    ComponentPriority priority = ComponentPriority::Desc;
    std::vector<std::size_t> component_descending;
    std::shared_ptr<const SchreyerContext> schreyer;

    // Returns -1, 0 or 1.
    int compare_exponents(const Exponent& a, const Exponent& b) const;
    int compare_components(std::size_t i, std::size_t j) const;
    int compare(const ModuleMonomial& a, const ModuleMonomial& b) const;

    bool is_schreyer() const { return schreyer != nullptr; }

    // Descriptor "grevlex|grlex|lex [x1<x2<...] ; pot|top [desc|asc|e2>e1>...]".
    static OrderSpec parse(const std::string& text, const std::vector<std::string>& var_names);
    std::string describe(const std::vector<std::string>& var_names) const;

private:
    int compare_plain(const ModuleMonomial& a, const ModuleMonomial& b) const;
};

// Data of the order induced by a Groebner basis G: X^a e_i < X^b e_j iff
// lt(X^a g_i) < lt(X^b g_j), or they coincide and i > j.
struct SchreyerContext {
    std::vector<ModuleMonomial> leading;
    OrderSpec ambient;
};

Term leading(const ModuleElement& f, const OrderSpec& spec);
inline ModuleMonomial leading_monomial(const ModuleElement& f, const OrderSpec& spec) {
    return leading(f, spec).mono;
}

OrderSpec schreyer_order(const std::vector<ModuleElement>& G, const OrderSpec& ambient);

// Terms of f sorted from largest to smallest.
std::vector<Term> sorted_terms(const ModuleElement& f, const OrderSpec& spec);

} // namespace relgb
