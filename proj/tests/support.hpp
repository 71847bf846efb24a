#pragma once

#include <string>
#include <vector>

#include "relgb/formats.hpp"
#include "relgb/io.hpp"

namespace testing {

using namespace relgb;

inline Degree deg(int a, int b) { return Degree{a, b}; }

inline ModuleElement el(const std::string& s, const Ring& r, std::size_t rank = 1) {
    return parse_element(s, r, rank);
}

inline std::vector<ModuleElement> els(const std::vector<std::string>& ss, const Ring& r, std::size_t rank = 1) {
    std::vector<ModuleElement> out;
    for (const auto& s : ss) out.push_back(el(s, r, rank));
    return out;
}

// Columns of a matrix written row by row.
inline std::vector<ModuleElement> columns_of(const std::vector<std::vector<std::string>>& rows, const Ring& r) {
    std::vector<ModuleElement> out;
    for (std::size_t j = 0; j < rows.at(0).size(); ++j) {
        std::vector<ModuleElement> entries;
        for (const auto& row : rows) entries.push_back(el(row.at(j), r));
        out.push_back(ModuleElement::from_entries(r.nvars(), entries));
    }
    return out;
}

inline Matrix scalars(const std::vector<std::vector<long>>& rows) {
    Matrix m;
    for (const auto& row : rows) {
        std::vector<Scalar> v;
        for (long x : row) v.push_back(Scalar(x));
        m.push_back(v);
    }
    return m;
}

inline std::string show(const ModuleElement& f, const Ring& r, const OrderSpec& spec = {}) {
    return format_element(f, r, spec);
}

std::string read_data(const std::string& name);

} // namespace testing
