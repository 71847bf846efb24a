#include "relgb/order.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "relgb/error.hpp"

namespace relgb {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

// Parses "a<b<c" or "a>b>c" into a list ordered smallest first.
std::vector<std::string> parse_chain(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    bool has_lt = s.find('<') != std::string::npos;
    bool has_gt = s.find('>') != std::string::npos;
    if (has_lt && has_gt) throw InputError("order chain '" + text + "' mixes '<' and '>'");
    char sep = has_gt ? '>' : '<';
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        std::string item = s.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
        if (item.empty()) throw InputError("empty entry in order chain '" + text + "'");
        out.push_back(item);
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    if (has_gt) std::reverse(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> check_permutation(const std::vector<std::size_t>& v, std::size_t n, const char* what) {
    std::vector<bool> seen(n, false);
    for (std::size_t x : v) {
        if (x >= n || seen[x]) throw InputError(std::string("invalid ") + what + " permutation");
        seen[x] = true;
    }
    return v;
}

} // namespace

int OrderSpec::compare_exponents(const Exponent& a, const Exponent& b) const {
    const std::size_t n = a.size();
    auto var_at = [&](std::size_t k) { return var_ascending.empty() ? k : var_ascending[k]; };
    auto lex = [&]() {
        for (std::size_t k = n; k-- > 0;) {
            std::size_t v = var_at(k);
            if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
        }
        return 0;
    };
    if (base == BaseOrder::Lex) return lex();
    long da = a.total(), db = b.total();
    if (da != db) return da > db ? 1 : -1;
    if (base == BaseOrder::Grlex) return lex();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t v = var_at(k);
        if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
    }
    return 0;
}

int OrderSpec::compare_components(std::size_t i, std::size_t j) const {
    if (i == j) return 0;
    switch (priority) {
    case ComponentPriority::Desc:
        return i < j ? 1 : -1;
    case ComponentPriority::Asc:
        return i > j ? 1 : -1;
    case ComponentPriority::Explicit: {
        auto pos = [&](std::size_t c) {
            auto it = std::find(component_descending.begin(), component_descending.end(), c);
            return it == component_descending.end() ? component_descending.size() + c
                                                    : static_cast<std::size_t>(it - component_descending.begin());
        };
        return pos(i) < pos(j) ? 1 : -1;
    }
    }
    return 0;
}

int OrderSpec::compare_plain(const ModuleMonomial& a, const ModuleMonomial& b) const {
    if (extension == Extension::POT) {
        if (int c = compare_components(a.component, b.component)) return c;
        return compare_exponents(a.exp, b.exp);
    }
    if (int c = compare_exponents(a.exp, b.exp)) return c;
    return compare_components(a.component, b.component);
}

int OrderSpec::compare(const ModuleMonomial& a, const ModuleMonomial& b) const {
    if (!schreyer) return compare_plain(a, b);
    const auto& lt = schreyer->leading;
    if (a.component >= lt.size() || b.component >= lt.size())
        throw DimensionError("component outside the Schreyer order's range");
    ModuleMonomial ma{a.exp + lt[a.component].exp, lt[a.component].component};
    ModuleMonomial mb{b.exp + lt[b.component].exp, lt[b.component].component};
    if (int c = schreyer->ambient.compare(ma, mb)) return c;
    if (a.component == b.component) return 0;
    return a.component > b.component ? -1 : 1;
}

OrderSpec OrderSpec::parse(const std::string& text, const std::vector<std::string>& var_names) {
    OrderSpec spec;
    std::string base_part = text, ext_part;
    if (auto semi = text.find(';'); semi != std::string::npos) {
        base_part = text.substr(0, semi);
        ext_part = text.substr(semi + 1);
    }
    base_part = trim(base_part);
    ext_part = trim(ext_part);

    if (!base_part.empty()) {
        std::size_t sp = base_part.find_first_of(" \t");
        std::string name = lower(base_part.substr(0, sp));
        std::string rest = sp == std::string::npos ? "" : trim(base_part.substr(sp));
        if (name == "lex")
            spec.base = BaseOrder::Lex;
        else if (name == "grlex" || name == "deglex")
            spec.base = BaseOrder::Grlex;
        else if (name == "grevlex" || name == "degrevlex")
            spec.base = BaseOrder::Grevlex;
        else
            throw InputError("unknown base order '" + name + "'");
        if (!rest.empty()) {
            std::vector<std::size_t> perm;
            for (const std::string& v : parse_chain(rest)) {
                auto it = std::find(var_names.begin(), var_names.end(), v);
                if (it == var_names.end()) throw InputError("unknown variable '" + v + "' in order descriptor");
                perm.push_back(static_cast<std::size_t>(it - var_names.begin()));
            }
            if (perm.size() != var_names.size())
                throw InputError("variable permutation must list every variable exactly once");
            spec.var_ascending = check_permutation(perm, var_names.size(), "variable");
        }
    }

    if (!ext_part.empty()) {
        std::size_t sp = ext_part.find_first_of(" \t");
        std::string name = lower(ext_part.substr(0, sp));
        std::string rest = sp == std::string::npos ? "" : trim(ext_part.substr(sp));
        if (name == "pot")
            spec.extension = Extension::POT;
        else if (name == "top")
            spec.extension = Extension::TOP;
        else
            throw InputError("unknown module extension '" + name + "'");
        std::string r = lower(rest);
        if (r.empty() || r == "desc") {
            spec.priority = ComponentPriority::Desc;
        } else if (r == "asc") {
            spec.priority = ComponentPriority::Asc;
        } else {
            std::vector<std::size_t> perm;
            for (const std::string& c : parse_chain(rest)) {
                if (c.size() < 2 || (c[0] != 'e' && c[0] != 'E') ||
                    c.find_first_not_of("0123456789", 1) != std::string::npos)
                    throw InputError("bad component name '" + c + "' in order descriptor");
                std::size_t k = std::stoul(c.substr(1));
                if (k == 0) throw InputError("components are numbered from e1");
                perm.push_back(k - 1);
            }
            std::reverse(perm.begin(), perm.end());
            std::vector<std::size_t> sorted = perm;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw InputError("component listed twice in order descriptor");
            spec.priority = ComponentPriority::Explicit;
            spec.component_descending = perm;
        }
    }
    return spec;
}

std::string OrderSpec::describe(const std::vector<std::string>& var_names) const {
    std::ostringstream os;
    os << (base == BaseOrder::Lex ? "lex" : base == BaseOrder::Grlex ? "grlex" : "grevlex");
    if (!var_ascending.empty()) {
        os << ' ';
        for (std::size_t k = 0; k < var_ascending.size(); ++k) {
            if (k) os << '<';
            os << var_names.at(var_ascending[k]);
        }
    }
    os << "; " << (extension == Extension::POT ? "pot" : "top") << ' ';
    switch (priority) {
    case ComponentPriority::Desc:
        os << "desc";
        break;
    case ComponentPriority::Asc:
        os << "asc";
        break;
    case ComponentPriority::Explicit:
        for (std::size_t k = 0; k < component_descending.size(); ++k) {
            if (k) os << '>';
            os << 'e' << component_descending[k] + 1;
        }
        break;
    }
    if (schreyer) os << " [schreyer, " << schreyer->leading.size() << " components]";
    return os.str();
}

Term leading(const ModuleElement& f, const OrderSpec& spec) {
    if (f.is_zero()) throw std::invalid_argument("leading term of zero element");
    const Term* best = &f.terms().front();
    for (const Term& t : f.terms())
        if (spec.compare(t.mono, best->mono) > 0) best = &t;
    return *best;
}

OrderSpec schreyer_order(const std::vector<ModuleElement>& G, const OrderSpec& ambient) {
    auto ctx = std::make_shared<SchreyerContext>();
    ctx->ambient = ambient;
    for (const ModuleElement& g : G) {
        if (g.is_zero()) throw InputError("Schreyer order of a list containing zero");
        ctx->leading.push_back(leading(g, ambient).mono);
    }
    OrderSpec spec;
    spec.schreyer = std::move(ctx);
    return spec;
}

std::vector<Term> sorted_terms(const ModuleElement& f, const OrderSpec& spec) {
    std::vector<Term> t = f.terms();
    std::stable_sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return spec.compare(a.mono, b.mono) > 0; });
    return t;
}

} // namespace relgb
