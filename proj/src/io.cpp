#include "relgb/io.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

#include "relgb/error.hpp"

namespace relgb {

namespace {

bool is_component_name(const std::string& s) {
    return s.size() >= 2 && s[0] == 'e' &&
           std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

class Cursor {
public:
    Cursor(const std::string& text, std::size_t line, std::size_t offset)
        : text_(text), line_(line), offset_(offset) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return text_.substr(start, pos_ - start);
    }
    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
        }
        if (start == pos_) fail("expected a variable or basis vector");
        return text_.substr(start, pos_ - start);
    }
    std::size_t position() const { return pos_; }
    [[noreturn]] void fail(const std::string& msg, std::size_t at = std::string::npos) const {
        std::size_t p = at == std::string::npos ? pos_ : at;
        throw ParseError(msg, line_, offset_ + p + 1);
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t offset_;
};

} // namespace

Ring::Ring(std::vector<std::string> names, Field f) : vars(std::move(names)), field(f) {
    static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (!std::regex_match(vars[i], ident)) throw InputError("invalid variable name '" + vars[i] + "'");
        if (is_component_name(vars[i]))
            throw InputError("variable name '" + vars[i] + "' clashes with basis vector notation");
        for (std::size_t j = 0; j < i; ++j)
            if (vars[i] == vars[j]) throw InputError("duplicate variable name '" + vars[i] + "'");
    }
}

Ring Ring::standard(std::size_t n, Field f) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return Ring(std::move(names), f);
}

long Ring::index_of(const std::string& name) const {
    auto it = std::find(vars.begin(), vars.end(), name);
    return it == vars.end() ? -1 : static_cast<long>(it - vars.begin());
}

Scalar parse_scalar(const std::string& text, const Field& field, std::size_t line, std::size_t column) {
    static const std::regex lit("\\s*([+-]?[0-9]+)(\\s*/\\s*([0-9]+))?\\s*");
    std::smatch m;
    if (!std::regex_match(text, m, lit)) throw ParseError("bad scalar '" + text + "'", line, column);
    mpq_class q;
    mpz_class num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
    mpz_class den(1);
    if (m[3].matched) den = mpz_class(m[3].str());
    if (den == 0) throw ParseError("zero denominator", line, column);
    q = mpq_class(num, den);
    q.canonicalize();
    try {
        return field.make(q);
    } catch (const DimensionError& e) {
        throw ParseError(e.what(), line, column);
    }
}

ModuleElement parse_element(const std::string& text, const Ring& ring, std::size_t rank, std::size_t line,
                            std::size_t column_offset) {
    const std::size_t n = ring.nvars();
    if (rank == 0) throw DimensionError("module rank must be positive");
    Cursor cur(text, line, column_offset);
    std::vector<Term> terms;
    if (cur.at_end()) cur.fail("empty element");
    bool first = true;
    while (!cur.at_end()) {
        bool negative = false;
        if (cur.accept('+')) {
        } else if (cur.accept('-')) {
            negative = true;
        } else if (!first) {
            cur.fail("expected '+' or '-'");
        }
        first = false;

        std::size_t term_start = cur.position();
        mpq_class coef(1);
        bool have_factor = false;
        std::vector<int> exps(n, 0);
        std::size_t comp = 0;
        bool have_comp = false;

        auto parse_factor = [&]() {
            std::size_t at = cur.position();
            std::string id = cur.identifier();
            long v = ring.index_of(id);
            if (v >= 0) {
                int power = 1;
                if (cur.accept('^')) {
                    std::string d = cur.digits();
                    if (d.size() > 6) cur.fail("exponent too large");
                    power = std::stoi(d);
                }
                exps[static_cast<std::size_t>(v)] += power;
            } else if (is_component_name(id)) {
                if (have_comp) cur.fail("two basis vectors in one term", at);
                std::size_t k = std::stoul(id.substr(1));
                if (k == 0 || k > rank)
                    cur.fail("component index " + id + " out of range for rank " + std::to_string(rank), at);
                comp = k - 1;
                have_comp = true;
            } else {
                cur.fail("unknown variable '" + id + "'", at);
            }
            have_factor = true;
        };

        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            mpz_class num(cur.digits());
            mpz_class den(1);
            if (cur.accept('/')) {
                den = mpz_class(cur.digits());
                if (den == 0) cur.fail("zero denominator");
            }
            coef = mpq_class(num, den);
            coef.canonicalize();
            if (cur.accept('*')) parse_factor();
        } else {
            parse_factor();
        }
        while (have_factor && cur.accept('*')) parse_factor();
        if (negative) coef = -coef;
        Scalar c;
        try {
            c = ring.field.make(coef);
        } catch (const DimensionError& e) {
            cur.fail(e.what(), term_start);
        }
        terms.push_back({ModuleMonomial{Exponent(std::move(exps)), comp}, c});
    }
    return ModuleElement::from_terms(n, rank, std::move(terms));
}

std::string format_element(const ModuleElement& f, const Ring& ring, const OrderSpec& spec) {
    if (f.is_zero()) return "0";
    if (f.nvars() != ring.nvars()) throw DimensionError("element and ring have different variable counts");
    std::string out;
    bool first = true;
    for (const Term& t : sorted_terms(f, spec)) {
        bool negative = t.coef.sign() < 0;
        Scalar mag = negative ? -t.coef : t.coef;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        std::vector<std::string> factors;
        for (std::size_t v = 0; v < f.nvars(); ++v) {
            int e = t.mono.exp[v];
            if (e == 0) continue;
            factors.push_back(e == 1 ? ring.vars[v] : ring.vars[v] + "^" + std::to_string(e));
        }
        if (f.rank() > 1) factors.push_back("e" + std::to_string(t.mono.component + 1));
        std::string body;
        for (std::size_t k = 0; k < factors.size(); ++k) body += (k ? "*" : "") + factors[k];
        if (body.empty())
            out += mag.to_string();
        else if (mag.is_one())
            out += body;
        else
            out += mag.to_string() + "*" + body;
    }
    return out;
}

Degree parse_degree(const std::string& text, std::size_t line, std::size_t column_offset) {
    Cursor cur(text, line, column_offset);
    cur.expect('(');
    std::vector<int> v;
    if (!cur.accept(')')) {
        do {
            bool neg = false;
            if (cur.accept('-'))
                neg = true;
            else
                cur.accept('+');
            std::string d = cur.digits();
            if (d.size() > 9) cur.fail("degree entry too large");
            v.push_back(neg ? -std::stoi(d) : std::stoi(d));
        } while (cur.accept(','));
        cur.expect(')');
    }
    if (!cur.at_end()) cur.fail("trailing characters after degree");
    return Degree(std::move(v));
}

std::vector<Degree> parse_degree_list(const std::string& text, std::size_t line, std::size_t column_offset) {
    std::vector<Degree> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t open = text.find_first_not_of(" \t\r\n", pos);
        if (open == std::string::npos) break;
        if (text[open] != '(') throw ParseError("expected '('", line, column_offset + open + 1);
        std::size_t close = text.find(')', open);
        if (close == std::string::npos) throw ParseError("unterminated degree", line, column_offset + open + 1);
        out.push_back(parse_degree(text.substr(open, close - open + 1), line, column_offset + open));
        pos = close + 1;
    }
    return out;
}

std::string format_degree_list(const std::vector<Degree>& degrees) {
    std::string s;
    for (std::size_t k = 0; k < degrees.size(); ++k) s += (k ? " " : "") + degrees[k].to_string();
    return s;
}

} // namespace relgb
