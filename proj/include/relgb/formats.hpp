#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relgb/flange.hpp"
#include "relgb/homres.hpp"
#include "relgb/io.hpp"

namespace relgb {

// Text files are line based; '#' starts a comment and blank lines are
// skipped. A line "key: value" is a header, anything else is data. All
// formats accept the headers "vars: x, y, ..." and "field: q|fp:<p>".

// A non-comment line with its 1-based number.
struct SourceLine {
    std::size_t number;
    std::string text;
};

struct Header {
    std::string key;
    std::string value;
    std::size_t value_column;  // 1-based column where value starts
};

std::vector<SourceLine> source_lines(const std::string& text);
std::optional<Header> header_of(const SourceLine& line);

// Command line replacements for the vars and field headers.
struct RingOverride {
    std::optional<std::vector<std::string>> vars;
    std::optional<Field> field;
};

// Ring from the vars/field headers, overridden where given. fallback_n
// gives x1..xn when no variables are declared; 0 means that is an error.
Ring file_ring(const std::vector<SourceLine>& lines, const RingOverride& override, std::size_t fallback_n = 0);

// Headers: vars, field, rank (default 1), shifts (optional, sets rank).
// Data: one element per line. Zero elements are dropped; a file whose only
// element is "0" is the empty list.
struct ElementList {
    Ring ring;
    std::size_t rank = 1;
    std::optional<Shifts> shifts;
    std::vector<ModuleElement> elements;

    Shifts shifts_or_zero() const;
};

ElementList parse_element_list(const std::string& text, const RingOverride& override = {});
std::string format_element_list(const ElementList& list, const OrderSpec& spec);

// Block: "rows: <degrees>", "cols: <degrees>", then one line per row with
// comma-separated polynomial entries.
GradedMatrix parse_graded_matrix_block(const std::vector<SourceLine>& lines, std::size_t& pos, const Ring& ring);
std::string format_graded_matrix(const GradedMatrix& M, const Ring& ring, const OrderSpec& spec);
GradedMatrix parse_graded_matrix(const std::string& text, const RingOverride& override = {},
                                 Ring* ring_out = nullptr);

// "cogens: ...", "gens: ...", then s rows of t whitespace separated scalars.
FreeInjectiveMatrix parse_fim(const std::string& text, const RingOverride& override = {},
                              Ring* ring_out = nullptr);
std::string format_fim(const FreeInjectiveMatrix& A, const Ring& ring);

// "D1:", "P:", "D2:" each followed by a graded matrix block.
TorsionFreeComplexInput parse_complex(const std::string& text, const RingOverride& override = {},
                                      Ring* ring_out = nullptr);
std::string format_complex(const TorsionFreeComplexInput& in, const Ring& ring, const OrderSpec& spec);

// Headers order, ambient, minimized, complete; sections "U:" and "H:"
// with one element per line, then "D1:", "D2:", ... graded matrix blocks.
Resolution parse_resolution(const std::string& text, const RingOverride& override = {},
                            Ring* ring_out = nullptr);
std::string format_resolution(const Resolution& res, const Ring& ring);

// "nvars: n" (or vars), then lines "dim (a) d" and "map (a) k: row; row; ..."
// with k a 1-based variable index or a variable name.
DiagramModule parse_diagram(const std::string& text, const RingOverride& override = {}, Ring* ring_out = nullptr);
std::string format_diagram(const DiagramModule& D);

} // namespace relgb
