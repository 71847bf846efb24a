#pragma once

#include <string>
#include <vector>

#include "relgb/module_element.hpp"
#include "relgb/order.hpp"

namespace relgb {

// Variable names and coefficient field shared by all objects of a session.
struct Ring {
    std::vector<std::string> vars;
    Field field;

    Ring() = default;
    explicit Ring(std::vector<std::string> names, Field f = Field{});
    // x1..xn
    static Ring standard(std::size_t n, Field f = Field{});

    std::size_t nvars() const { return vars.size(); }
    // Index of a variable name, or -1.
    long index_of(const std::string& name) const;
};

// Grammar: element = term {("+"|"-") term}; term = [coef "*"] factor {"*" factor}
// or a bare coefficient; coef = int | int "/" int; factor = var ["^" nat] | "e" nat.
// A term without an e-factor lies in e1. line/column_offset only affect
// error positions.
ModuleElement parse_element(const std::string& text, const Ring& ring, std::size_t rank, std::size_t line = 1,
                            std::size_t column_offset = 0);

// Terms are listed from largest to smallest under spec; rank-1 elements omit e1.
std::string format_element(const ModuleElement& f, const Ring& ring, const OrderSpec& spec = OrderSpec{});

// "(d1,...,dn)"
Degree parse_degree(const std::string& text, std::size_t line = 1, std::size_t column_offset = 0);
// Whitespace separated degree literals.
std::vector<Degree> parse_degree_list(const std::string& text, std::size_t line = 1, std::size_t column_offset = 0);
std::string format_degree_list(const std::vector<Degree>& degrees);

// Rational literal "a" or "a/b" mapped into the field.
Scalar parse_scalar(const std::string& text, const Field& field, std::size_t line = 1, std::size_t column = 1);

} // namespace relgb
