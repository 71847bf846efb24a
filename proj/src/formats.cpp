#include "relgb/formats.hpp"

#include <regex>
#include <sstream>

#include "relgb/error.hpp"

namespace relgb {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

const Header* find_header(const std::vector<Header>& hs, const std::string& key) {
    for (const Header& h : hs)
        if (h.key == key) return &h;
    return nullptr;
}

std::size_t parse_count(const std::string& text, std::size_t line, std::size_t column) {
    static const std::regex digits("[0-9]+");
    if (!std::regex_match(text, digits)) throw ParseError("expected a nonnegative integer", line, column);
    return std::stoul(text);
}

bool parse_flag(const std::string& text, std::size_t line, std::size_t column) {
    if (text == "yes" || text == "true") return true;
    if (text == "no" || text == "false") return false;
    throw ParseError("expected yes or no", line, column);
}

Shifts checked_degrees(const std::string& text, std::size_t n, std::size_t line, std::size_t column) {
    Shifts d = parse_degree_list(text, line, column - 1);
    for (const Degree& a : d)
        if (a.size() != n)
            throw ParseError("degree " + a.to_string() + " should have " + std::to_string(n) + " entries", line, column);
    return d;
}

std::string ring_headers(const Ring& ring) {
    std::string s = "vars: ";
    for (std::size_t i = 0; i < ring.vars.size(); ++i) s += (i ? ", " : "") + ring.vars[i];
    s += "\n";
    if (ring.field.p) s += "field: " + ring.field.name() + "\n";
    return s;
}

std::vector<Header> all_headers(const std::vector<SourceLine>& lines) {
    std::vector<Header> out;
    for (const SourceLine& l : lines)
        if (auto h = header_of(l)) out.push_back(*h);
    return out;
}

std::string data_error_context(const SourceLine& l) { return "'" + trim(l.text) + "'"; }

} // namespace

std::vector<SourceLine> source_lines(const std::string& text) {
    std::vector<SourceLine> out;
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) line.pop_back();
        if (trim(line).empty()) continue;
        out.push_back({number, line});
    }
    return out;
}

std::optional<Header> header_of(const SourceLine& line) {
    static const std::regex key_re("[A-Za-z][A-Za-z0-9_]*");
    auto colon = line.text.find(':');
    if (colon == std::string::npos) return std::nullopt;
    std::string key = trim(line.text.substr(0, colon));
    if (!std::regex_match(key, key_re)) return std::nullopt;
    std::size_t start = colon + 1;
    while (start < line.text.size() && (line.text[start] == ' ' || line.text[start] == '\t')) ++start;
    return Header{key, trim(line.text.substr(colon + 1)), start + 1};
}

Ring file_ring(const std::vector<SourceLine>& lines, const RingOverride& override, std::size_t fallback_n) {
    std::optional<std::vector<std::string>> vars = override.vars;
    std::optional<Field> field = override.field;
    for (const SourceLine& l : lines) {
        auto h = header_of(l);
        if (!h) continue;
        try {
            if (h->key == "vars" && !vars) vars = split_names(h->value);
            if (h->key == "field" && !field) field = Field::parse(h->value);
        } catch (const ParseError&) {
            throw;
        } catch (const InputError& e) {
            throw ParseError(e.what(), l.number, h->value_column);
        }
    }
    Field f = field.value_or(Field{});
    if (vars) return Ring(*vars, f);
    if (fallback_n) return Ring::standard(fallback_n, f);
    throw InputError("no variables declared; add a 'vars:' header or pass --vars");
}

Shifts ElementList::shifts_or_zero() const { return shifts ? *shifts : zero_shifts(rank, ring.nvars()); }

ElementList parse_element_list(const std::string& text, const RingOverride& override) {
    std::vector<SourceLine> lines = source_lines(text);
    ElementList out;
    out.ring = file_ring(lines, override);
    std::optional<std::size_t> rank;
    for (const SourceLine& l : lines) {
        auto h = header_of(l);
        if (!h) continue;
        if (h->key == "rank") rank = parse_count(h->value, l.number, h->value_column);
        else if (h->key == "shifts") out.shifts = checked_degrees(h->value, out.ring.nvars(), l.number, h->value_column);
        else if (h->key != "vars" && h->key != "field")
            throw ParseError("unknown header '" + h->key + "'", l.number, 1);
    }
    if (out.shifts && rank && *rank != out.shifts->size())
        throw DimensionError("rank " + std::to_string(*rank) + " differs from the " +
                             std::to_string(out.shifts->size()) + " shifts");
    out.rank = out.shifts ? out.shifts->size() : rank.value_or(1);
    for (const SourceLine& l : lines) {
        if (header_of(l)) continue;
        ModuleElement f = parse_element(l.text, out.ring, out.rank, l.number);
        if (!f.is_zero()) out.elements.push_back(std::move(f));
    }
    return out;
}

std::string format_element_list(const ElementList& list, const OrderSpec& spec) {
    std::string s = ring_headers(list.ring);
    if (list.shifts)
        s += "shifts: " + format_degree_list(*list.shifts) + "\n";
    else if (list.rank != 1)
        s += "rank: " + std::to_string(list.rank) + "\n";
    if (list.elements.empty()) s += "0\n";
    for (const ModuleElement& f : list.elements) s += format_element(f, list.ring, spec) + "\n";
    return s;
}

GradedMatrix parse_graded_matrix_block(const std::vector<SourceLine>& lines, std::size_t& pos, const Ring& ring) {
    const std::size_t n = ring.nvars();
    auto expect = [&](const std::string& key) {
        if (pos >= lines.size()) throw InputError("unexpected end of input, expected '" + key + ":'");
        auto h = header_of(lines[pos]);
        if (!h || h->key != key) throw ParseError("expected '" + key + ":'", lines[pos].number, 1);
        Shifts d = checked_degrees(h->value, n, lines[pos].number, h->value_column);
        ++pos;
        return d;
    };
    Shifts rows = expect("rows");
    Shifts cols = expect("cols");
    std::vector<std::vector<ModuleElement>> entries(cols.size());
    if (!cols.empty()) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (pos >= lines.size() || header_of(lines[pos]))
                throw InputError("matrix has fewer rows than its 'rows:' header lists");
            const SourceLine& l = lines[pos++];
            std::size_t start = 0;
            for (std::size_t j = 0; j < cols.size(); ++j) {
                std::size_t comma = l.text.find(',', start);
                bool last = j + 1 == cols.size();
                if (last != (comma == std::string::npos))
                    throw ParseError("row " + std::to_string(i + 1) + " should have " + std::to_string(cols.size()) +
                                         " comma separated entries",
                                     l.number, start + 1);
                std::string cell = l.text.substr(start, last ? std::string::npos : comma - start);
                entries[j].push_back(parse_element(cell, ring, 1, l.number, start));
                start = comma + 1;
            }
        }
    }
    std::vector<ModuleElement> columns;
    for (std::size_t j = 0; j < cols.size(); ++j) columns.push_back(ModuleElement::from_entries(n, entries[j]));
    for (ModuleElement& c : columns)
        if (rows.empty()) c = ModuleElement(n, 0);
    return GradedMatrix(n, std::move(rows), std::move(cols), std::move(columns));
}

std::string format_graded_matrix(const GradedMatrix& M, const Ring& ring, const OrderSpec& spec) {
    std::string s = "rows: " + format_degree_list(M.rows) + "\n";
    s += "cols: " + format_degree_list(M.cols) + "\n";
    if (M.ncols() == 0) return s;
    for (std::size_t i = 0; i < M.nrows(); ++i) {
        for (std::size_t j = 0; j < M.ncols(); ++j) s += (j ? ", " : "") + format_element(M.entry(i, j), ring, spec);
        s += "\n";
    }
    return s;
}

GradedMatrix parse_graded_matrix(const std::string& text, const RingOverride& override, Ring* ring_out) {
    std::vector<SourceLine> lines = source_lines(text);
    Ring ring = file_ring(lines, override);
    std::size_t pos = 0;
    while (pos < lines.size()) {
        auto h = header_of(lines[pos]);
        if (h && (h->key == "vars" || h->key == "field")) ++pos;
        else break;
    }
    GradedMatrix M = parse_graded_matrix_block(lines, pos, ring);
    if (pos < lines.size()) throw ParseError("unexpected content after the matrix", lines[pos].number, 1);
    if (ring_out) *ring_out = ring;
    return M;
}

FreeInjectiveMatrix parse_fim(const std::string& text, const RingOverride& override, Ring* ring_out) {
    std::vector<SourceLine> lines = source_lines(text);
    std::vector<Header> hs = all_headers(lines);
    const Header* cg = find_header(hs, "cogens");
    const Header* g = find_header(hs, "gens");
    if (!cg || !g) throw InputError("free-injective matrix needs 'cogens:' and 'gens:' headers");
    std::size_t n = 0;
    std::size_t cg_line = 0, g_line = 0;
    for (const SourceLine& l : lines)
        if (auto h = header_of(l)) {
            if (h->key == "cogens") cg_line = l.number;
            if (h->key == "gens") g_line = l.number;
        }
    for (const Degree& d : parse_degree_list(cg->value, cg_line, cg->value_column - 1)) n = d.size();
    for (const Degree& d : parse_degree_list(g->value, g_line, g->value_column - 1)) n = d.size();
    Ring ring = file_ring(lines, override, n ? n : 1);
    n = ring.nvars();
    Shifts cogens = checked_degrees(cg->value, n, cg_line, cg->value_column);
    Shifts gens = checked_degrees(g->value, n, g_line, g->value_column);
    Matrix m;
    for (const SourceLine& l : lines) {
        if (auto h = header_of(l)) {
            if (h->key != "vars" && h->key != "field" && h->key != "cogens" && h->key != "gens")
                throw ParseError("unknown header '" + h->key + "'", l.number, 1);
            continue;
        }
        std::vector<Scalar> row;
        std::size_t p = 0;
        while (p < l.text.size()) {
            while (p < l.text.size() && (l.text[p] == ' ' || l.text[p] == '\t')) ++p;
            if (p >= l.text.size()) break;
            std::size_t q = p;
            while (q < l.text.size() && l.text[q] != ' ' && l.text[q] != '\t') ++q;
            row.push_back(parse_scalar(l.text.substr(p, q - p), ring.field, l.number, p + 1));
            p = q;
        }
        if (row.size() != gens.size())
            throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(gens.size()),
                             l.number, 1);
        m.push_back(std::move(row));
    }
    if (m.size() != cogens.size())
        throw DimensionError("matrix has " + std::to_string(m.size()) + " rows, expected " +
                             std::to_string(cogens.size()));
    if (ring_out) *ring_out = ring;
    return FreeInjectiveMatrix(n, std::move(cogens), std::move(gens), std::move(m));
}

std::string format_fim(const FreeInjectiveMatrix& A, const Ring& ring) {
    std::string s = ring_headers(ring);
    s += "cogens: " + format_degree_list(A.cogens) + "\n";
    s += "gens: " + format_degree_list(A.gens) + "\n";
    for (const auto& row : A.entries) {
        for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + row[j].to_string();
        s += "\n";
    }
    return s;
}

TorsionFreeComplexInput parse_complex(const std::string& text, const RingOverride& override, Ring* ring_out) {
    std::vector<SourceLine> lines = source_lines(text);
    Ring ring = file_ring(lines, override);
    std::optional<GradedMatrix> d1, p, d2;
    std::size_t pos = 0;
    while (pos < lines.size()) {
        auto h = header_of(lines[pos]);
        if (!h) throw ParseError("expected 'D1:', 'P:' or 'D2:'", lines[pos].number, 1);
        ++pos;
        if (h->key == "vars" || h->key == "field") continue;
        std::optional<GradedMatrix>* slot = h->key == "D1" ? &d1 : h->key == "P" ? &p : h->key == "D2" ? &d2 : nullptr;
        if (!slot) throw ParseError("unknown section '" + h->key + "'", lines[pos - 1].number, 1);
        if (*slot) throw ParseError("section '" + h->key + "' given twice", lines[pos - 1].number, 1);
        *slot = parse_graded_matrix_block(lines, pos, ring);
    }
    if (!d1 || !p || !d2) throw InputError("complex file needs the sections D1, P and D2");
    if (ring_out) *ring_out = ring;
    return {*d1, *p, *d2};
}

std::string format_complex(const TorsionFreeComplexInput& in, const Ring& ring, const OrderSpec& spec) {
    return ring_headers(ring) + "D1:\n" + format_graded_matrix(in.D1, ring, spec) + "P:\n" +
           format_graded_matrix(in.P, ring, spec) + "D2:\n" + format_graded_matrix(in.D2, ring, spec);
}

Resolution parse_resolution(const std::string& text, const RingOverride& override, Ring* ring_out) {
    static const std::regex diff_re("D([1-9][0-9]*)");
    std::vector<SourceLine> lines = source_lines(text);
    Ring ring = file_ring(lines, override);
    const std::size_t n = ring.nvars();
    Resolution res;
    res.nvars = n;
    bool have_ambient = false;
    for (const SourceLine& l : lines) {
        auto h = header_of(l);
        if (!h) continue;
        if (h->key == "order") {
            res.spec = OrderSpec::parse(h->value, ring.vars);
        } else if (h->key == "ambient") {
            res.ambient = checked_degrees(h->value, n, l.number, h->value_column);
            have_ambient = true;
        } else if (h->key == "minimized") {
            res.minimized = parse_flag(h->value, l.number, h->value_column);
        } else if (h->key == "complete") {
            res.complete = parse_flag(h->value, l.number, h->value_column);
        }
    }
    if (!have_ambient) throw InputError("resolution file needs an 'ambient:' header");

    std::size_t pos = 0;
    std::vector<ModuleElement>* section = nullptr;
    while (pos < lines.size()) {
        const SourceLine& l = lines[pos];
        auto h = header_of(l);
        ++pos;
        if (!h) {
            if (!section) throw ParseError("data outside the U or H section", l.number, 1);
            ModuleElement f = parse_element(l.text, ring, res.ambient.size(), l.number);
            if (!f.is_zero()) section->push_back(std::move(f));
            continue;
        }
        std::smatch m;
        if (h->key == "U") {
            section = &res.U;
        } else if (h->key == "H") {
            section = &res.H;
        } else if (std::regex_match(h->key, m, diff_re)) {
            section = nullptr;
            std::size_t index = std::stoul(m[1]);
            if (index != res.differentials.size() + 1)
                throw ParseError("expected D" + std::to_string(res.differentials.size() + 1), l.number, 1);
            res.differentials.push_back(parse_graded_matrix_block(lines, pos, ring));
        } else if (h->key == "vars" || h->key == "field" || h->key == "order" || h->key == "ambient" ||
                   h->key == "minimized" || h->key == "complete") {
            section = nullptr;
        } else {
            throw ParseError("unknown header '" + h->key + "'", l.number, 1);
        }
    }
    for (const ModuleElement& h : res.H) res.F0.push_back(degree_of(h, res.ambient));
    for (std::size_t l = 0; l < res.differentials.size(); ++l) {
        const Shifts& expected = res.degrees(l);
        if (res.differentials[l].rows != expected)
            throw DimensionError("row shifts of D" + std::to_string(l + 1) + " do not match the previous level");
        if (auto bad = inhomogeneous_entry(res.differentials[l]))
            throw InputError("entry (" + std::to_string(bad->first + 1) + ", " + std::to_string(bad->second + 1) +
                             ") of D" + std::to_string(l + 1) + " is not homogeneous");
    }
    if (ring_out) *ring_out = ring;
    return res;
}

std::string format_resolution(const Resolution& res, const Ring& ring) {
    std::string s = ring_headers(ring);
    s += "order: " + res.spec.describe(ring.vars) + "\n";
    s += "ambient: " + format_degree_list(res.ambient) + "\n";
    s += std::string("minimized: ") + (res.minimized ? "yes" : "no") + "\n";
    s += std::string("complete: ") + (res.complete ? "yes" : "no") + "\n";
    s += "U:\n";
    for (const ModuleElement& u : res.U) s += format_element(u, ring, res.spec) + "\n";
    s += "H:\n";
    for (const ModuleElement& h : res.H) s += format_element(h, ring, res.spec) + "\n";
    for (std::size_t l = 0; l < res.differentials.size(); ++l)
        s += "D" + std::to_string(l + 1) + ":\n" + format_graded_matrix(res.differentials[l], ring, res.spec);
    return s;
}

DiagramModule parse_diagram(const std::string& text, const RingOverride& override, Ring* ring_out) {
    static const std::regex dim_re(R"(\s*dim\s+(\([^)]*\))\s+([0-9]+)\s*)");
    static const std::regex map_re(R"(\s*map\s+(\([^)]*\))\s+([A-Za-z0-9_]+)\s*:(.*))");
    std::vector<SourceLine> lines = source_lines(text);
    std::size_t n = 0;
    for (const SourceLine& l : lines)
        if (auto h = header_of(l); h && h->key == "nvars") n = parse_count(h->value, l.number, h->value_column);
    Ring ring = file_ring(lines, override, n);
    if (n && n != ring.nvars()) throw DimensionError("nvars differs from the number of variables");
    n = ring.nvars();
    DiagramModule D;
    D.nvars = n;
    for (const SourceLine& l : lines) {
        if (auto h = header_of(l)) {
            if (h->key != "vars" && h->key != "field" && h->key != "nvars")
                throw ParseError("unknown header '" + h->key + "'", l.number, 1);
            continue;
        }
        std::smatch m;
        if (std::regex_match(l.text, m, dim_re)) {
            Degree a = parse_degree(m[1], l.number, static_cast<std::size_t>(m.position(1)));
            if (a.size() != n) throw ParseError("degree has wrong length", l.number, m.position(1) + 1);
            if (D.dims.count(a)) throw ParseError("dimension given twice", l.number, 1);
            std::size_t d = std::stoul(m[2]);
            if (d) D.dims[a] = d;
            continue;
        }
        if (std::regex_match(l.text, m, map_re)) {
            Degree a = parse_degree(m[1], l.number, static_cast<std::size_t>(m.position(1)));
            if (a.size() != n) throw ParseError("degree has wrong length", l.number, m.position(1) + 1);
            std::string var = m[2];
            long k = ring.index_of(var);
            if (k < 0) {
                static const std::regex idx("[0-9]+");
                if (!std::regex_match(var, idx) || std::stoul(var) == 0 || std::stoul(var) > n)
                    throw ParseError("unknown variable '" + var + "'", l.number, m.position(2) + 1);
                k = static_cast<long>(std::stoul(var)) - 1;
            }
            Matrix mat;
            std::string body = m[3];
            std::size_t body_col = static_cast<std::size_t>(m.position(3));
            std::size_t start = 0;
            while (start <= body.size()) {
                std::size_t semi = body.find(';', start);
                std::string row_text = body.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
                std::vector<Scalar> row;
                std::istringstream rs(row_text);
                std::string tok;
                while (rs >> tok) row.push_back(parse_scalar(tok, ring.field, l.number, body_col + start + 1));
                if (!row.empty()) mat.push_back(std::move(row));
                if (semi == std::string::npos) break;
                start = semi + 1;
            }
            for (const auto& row : mat)
                if (row.size() != mat[0].size()) throw ParseError("ragged matrix rows", l.number, body_col + 1);
            auto key = std::make_pair(a, static_cast<std::size_t>(k));
            if (D.maps.count(key)) throw ParseError("map given twice", l.number, 1);
            D.maps[key] = std::move(mat);
            continue;
        }
        throw ParseError("expected 'dim (a) d' or 'map (a) k: rows' but got " + data_error_context(l), l.number, 1);
    }
    for (auto& [key, mat] : D.maps) {
        Degree b = key.first;
        ++b[key.second];
        std::size_t rows = D.dim(b), cols = D.dim(key.first);
        if (mat.empty() && (rows == 0 || cols == 0)) {
            mat = zero_matrix(rows, cols);
            continue;
        }
        if (mat.size() != rows || mat[0].size() != cols)
            throw DimensionError("map X" + std::to_string(key.second + 1) + " at " + key.first.to_string() +
                                 " should be " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    if (ring_out) *ring_out = ring;
    return D;
}

std::string format_diagram(const DiagramModule& D) {
    std::string s = "nvars: " + std::to_string(D.nvars) + "\n";
    for (const auto& [a, d] : D.dims)
        if (d) s += "dim " + a.to_string() + " " + std::to_string(d) + "\n";
    for (const auto& [key, mat] : D.maps) {
        if (mat.empty() || mat[0].empty()) continue;
        s += "map " + key.first.to_string() + " " + std::to_string(key.second + 1) + ":";
        for (std::size_t r = 0; r < mat.size(); ++r) {
            s += r ? " ;" : "";
            for (const Scalar& x : mat[r]) s += " " + x.to_string();
        }
        s += "\n";
    }
    return s;
}

} // namespace relgb
