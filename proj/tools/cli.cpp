#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <regex>
#include <sstream>

#include "relgb/error.hpp"
#include "relgb/flange.hpp"
#include "relgb/formats.hpp"
#include "relgb/groebner.hpp"
#include "relgb/homres.hpp"

namespace relgb::cli {

namespace {

struct Options {
    std::string field;
    std::string order = "grevlex; pot desc";
    std::string vars;
    std::string box;
    std::string output;
    std::size_t length = 0;
    bool naive = false;
    bool reduced = false;
    bool minimize = false;
    bool resolve = false;
    bool complete_first = false;
    std::vector<std::string> files;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Writes to a sibling temporary file first so readers never see partial output.
void write_file(const std::string& path, const std::string& text) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write '" + path + "'");
        out << text;
        if (!out) throw InputError("cannot write '" + path + "'");
    }
    std::filesystem::rename(tmp, path);
}

RingOverride ring_override(const Options& o) {
    RingOverride r;
    if (!o.vars.empty()) {
        std::vector<std::string> names;
        std::string cur;
        for (char c : o.vars + ",") {
            if (c == ',' || c == ' ') {
                if (!cur.empty()) names.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        r.vars = names;
    }
    if (!o.field.empty()) r.field = Field::parse(o.field);
    return r;
}

std::pair<Degree, Degree> parse_box(const std::string& text, std::size_t n) {
    static const std::regex re(R"(\s*(\([^)]*\))\s*\.\.\s*(\([^)]*\))\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw InputError("--box must look like \"(0,0)..(4,3)\"");
    Degree lo = parse_degree(m[1]), hi = parse_degree(m[2]);
    if (lo.size() != n || hi.size() != n) throw DimensionError("--box corners need " + std::to_string(n) + " entries");
    return {lo, hi};
}

struct Pair {
    ElementList U, V;
    Shifts shifts;
};

// U and V files over the same ring; shifts come from whichever file declares them.
Pair read_pair(const Options& o) {
    RingOverride ro = ring_override(o);
    Pair p;
    p.U = parse_element_list(read_file(o.files.at(0)), ro);
    p.V = parse_element_list(read_file(o.files.at(1)), ro);
    if (p.U.ring.vars != p.V.ring.vars) throw InputError("U and V declare different variables");
    if (p.U.rank != p.V.rank) throw DimensionError("U and V have different ranks");
    if (p.U.shifts && p.V.shifts && *p.U.shifts != *p.V.shifts) throw DimensionError("U and V declare different shifts");
    p.shifts = p.V.shifts ? *p.V.shifts : p.U.shifts_or_zero();
    return p;
}

OrderSpec order_for(const Options& o, const Ring& ring) { return OrderSpec::parse(o.order, ring.vars); }

ElementList list_like(const ElementList& base, std::vector<ModuleElement> elements) {
    ElementList out;
    out.ring = base.ring;
    out.rank = base.rank;
    out.shifts = base.shifts;
    out.elements = std::move(elements);
    return out;
}

Resolution minimized_if(const Resolution& res, bool minimize) { return minimize ? prune_minimize(res) : res; }

std::string betti_text(const BettiTable& t) {
    std::string s;
    for (std::size_t i = 0; i < t.levels.size(); ++i)
        for (const auto& [d, c] : t.levels[i]) s += std::to_string(i) + " " + d.to_string() + " " + std::to_string(c) + "\n";
    s += "total:";
    for (std::size_t c : t.totals()) s += " " + std::to_string(c);
    return s + "\n";
}

std::string cmd_gb(const Options& o) {
    ElementList F = parse_element_list(read_file(o.files.at(0)), ring_override(o));
    OrderSpec spec = order_for(o, F.ring);
    std::vector<ModuleElement> G = o.naive ? buchberger(F.elements, spec, true) : reduced_basis(F.elements, spec);
    return format_element_list(list_like(F, G), spec);
}

std::string cmd_relgb(const Options& o) {
    Pair p = read_pair(o);
    OrderSpec spec = order_for(o, p.V.ring);
    RelativePair r = reduce_relative(relative_buchberger(p.V.elements, reduced_basis(p.U.elements, spec), spec));
    return format_element_list(list_like(p.V, r.H), spec);
}

std::string cmd_syz(const Options& o) {
    ElementList G = parse_element_list(read_file(o.files.at(0)), ring_override(o));
    OrderSpec spec = order_for(o, G.ring);
    if (!is_groebner(G.elements, spec)) throw ContractViolation("input is not a Groebner basis under the given order");
    SyzygyResult s = schreyer_syzygies(G.elements, spec);
    std::vector<ModuleElement> out = o.reduced ? reduce_groebner(s.syzygies, s.order) : s.syzygies;
    ElementList list;
    list.ring = G.ring;
    list.rank = G.elements.size();
    list.elements = out;
    return format_element_list(list, s.order);
}

RelativePair reduced_pair(const Pair& p, const OrderSpec& spec) {
    return reduce_relative(relative_buchberger(p.V.elements, reduced_basis(p.U.elements, spec), spec));
}

std::string cmd_relsyz(const Options& o) {
    Pair p = read_pair(o);
    OrderSpec spec = order_for(o, p.V.ring);
    RelativePair r = reduced_pair(p, spec);
    SyzygyResult s = relative_schreyer(r, o.reduced);
    ElementList list;
    list.ring = p.V.ring;
    list.rank = r.H.size();
    list.elements = s.syzygies;
    return "# generators\n" + format_element_list(list_like(p.V, r.H), spec) + "# syzygies\n" +
           format_element_list(list, s.order);
}

std::string cmd_respres(const Options& o) {
    Pair p = read_pair(o);
    OrderSpec spec = order_for(o, p.V.ring);
    RelativePair r = reduced_pair(p, spec);
    SyzygyResult s = relative_schreyer(r, o.reduced);
    Shifts rows;
    for (const ModuleElement& h : r.H) rows.push_back(degree_of(h, p.shifts));
    Shifts cols = column_degrees(s.syzygies, rows);
    GradedMatrix M(p.V.ring.nvars(), rows, cols, s.syzygies);
    std::string head = "vars: ";
    for (std::size_t i = 0; i < p.V.ring.vars.size(); ++i) head += (i ? ", " : "") + p.V.ring.vars[i];
    return head + "\n" + format_graded_matrix(M, p.V.ring, spec);
}

std::string cmd_resolution(const Options& o) {
    Pair p = read_pair(o);
    OrderSpec spec = order_for(o, p.V.ring);
    Resolution res = free_resolution(p.V.elements, p.U.elements, p.shifts, spec, o.length);
    return format_resolution(minimized_if(res, o.minimize), p.V.ring);
}

Resolution read_resolution(const Options& o, Ring& ring) {
    return parse_resolution(read_file(o.files.at(0)), ring_override(o), &ring);
}

std::string cmd_minimize(const Options& o) {
    Ring ring;
    Resolution res = read_resolution(o, ring);
    return format_resolution(prune_minimize(res), ring);
}

std::string cmd_betti(const Options& o) {
    Ring ring;
    Resolution res = read_resolution(o, ring);
    return betti_text(betti_numbers(minimized_if(res, o.minimize)));
}

std::string cmd_hilbert(const Options& o) {
    Pair p = read_pair(o);
    const std::size_t n = p.V.ring.nvars();
    std::pair<Degree, Degree> box;
    if (!o.box.empty()) {
        box = parse_box(o.box, n);
    } else {
        Degree lo(n), hi(n);
        bool first = true;
        auto see = [&](const Degree& a) {
            lo = first ? a : mon_meet(lo, a);
            hi = first ? a : mon_join(hi, a);
            first = false;
        };
        for (const Degree& s : p.shifts) see(s);
        for (const auto* F : {&p.U.elements, &p.V.elements})
            for (const ModuleElement& f : *F) see(degree_of(f, p.shifts));
        for (std::size_t k = 0; k < n; ++k) ++hi[k];
        box = {lo, hi};
    }
    std::string s;
    for (const Degree& a : box_degrees(box.first, box.second))
        s += a.to_string() + " " + std::to_string(graded_dimension(p.V.elements, p.U.elements, p.shifts, a)) + "\n";
    return s;
}

std::string cmd_flange_gb(const Options& o) {
    Ring ring;
    FreeInjectiveMatrix A = parse_fim(read_file(o.files.at(0)), ring_override(o), &ring);
    return format_fim(buchberger_flange(A, order_for(o, ring)), ring);
}

std::string cmd_flange_pres(const Options& o) {
    Ring ring;
    FreeInjectiveMatrix A = parse_fim(read_file(o.files.at(0)), ring_override(o), &ring);
    OrderSpec spec = order_for(o, ring);
    FlangeDivisionCache cache;
    if (o.complete_first) A = buchberger_flange(A, spec, &cache);
    GradedMatrix P = free_presentation(A, spec, &cache);
    std::string head = "vars: ";
    for (std::size_t i = 0; i < ring.vars.size(); ++i) head += (i ? ", " : "") + ring.vars[i];
    return head + "\n" + format_graded_matrix(P, ring, spec);
}

std::string cmd_homology(const Options& o) {
    Ring ring;
    TorsionFreeComplexInput in = parse_complex(read_file(o.files.at(0)), ring_override(o), &ring);
    OrderSpec spec = order_for(o, ring);
    HomologyPresentation hp = homology_presentation(in, spec);
    if (o.minimize) {
        Resolution res = free_resolution(hp.pair.H, hp.pair.U, hp.ambient, spec, o.length);
        return format_resolution(prune_minimize(res), ring);
    }
    Resolution res;
    res.nvars = ring.nvars();
    res.ambient = hp.ambient;
    res.spec = spec;
    res.U = hp.pair.U;
    res.H = hp.pair.H;
    res.F0 = hp.presentation.rows;
    res.differentials.push_back(hp.presentation);
    res.complete = false;
    return format_resolution(res, ring);
}

std::string cmd_from_diagram(const Options& o) {
    RingOverride ro = ring_override(o);
    Ring ring;
    DiagramModule D = parse_diagram(read_file(o.files.at(0)), ro, &ring);
    OrderSpec spec = order_for(o, ring);
    DiagramRealization r = module_from_diagram(D, spec);
    Resolution res;
    if (o.resolve) {
        res = prune_minimize(free_resolution(r.V, r.U, zero_shifts(r.V.size(), D.nvars), spec, o.length));
    } else {
        res.nvars = D.nvars;
        res.ambient = zero_shifts(r.V.size(), D.nvars);
        res.spec = r.pair.spec;
        res.U = r.U;
        res.H = r.pair.H;
        res.complete = false;
    }
    std::string s = "# generator degrees: " + format_degree_list(r.generator_degrees) + "\n";
    s += "# degree shift: " + r.gamma.to_string() + "\n";
    return s + format_resolution(res, ring);
}

std::string cmd_verify(const Options& o, int& status) {
    Ring ring;
    Resolution res = read_resolution(o, ring);
    auto box = o.box.empty() ? default_box(res) : parse_box(o.box, ring.nvars());
    VerifyReport rep = verify_complex(res, box.first, box.second);
    std::string s;
    if (rep.exact()) {
        s = "exact (" + std::to_string(rep.degrees_checked) + " degrees)\n";
    } else {
        for (const std::string& f : rep.failures) s += f + "\n";
        s += "not exact: " + std::to_string(rep.failures.size()) + " failures\n";
        status = 2;
    }
    return s;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Relative Groebner bases, syzygies and free resolutions over k[x1..xn]", "relgb"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--field", o.field, "q (default) or fp:<p>");
    app.add_option("--order", o.order, "e.g. \"grevlex x1<x2 ; pot desc\"")->capture_default_str();
    app.add_option("--vars", o.vars, "comma separated variable names, overriding the files");
    app.add_option("--box", o.box, "degree box \"(lo)..(hi)\"");
    app.add_option("-o,--output", o.output, "output file (default stdout)");

    int status = 0;
    std::function<std::string()> action;
    auto command = [&](const std::string& name, const std::string& help, std::size_t nfiles,
                       std::function<std::string()> fn) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("files", o.files, nfiles == 2 ? "U file, V file" : "input file")->required()->expected(
            static_cast<int>(nfiles));
        sub->callback([&action, fn] { action = fn; });
        return sub;
    };
    command("gb", "reduced Groebner basis", 1, [&] { return cmd_gb(o); })
        ->add_flag("--naive", o.naive, "plain Buchberger output without reduction");
    command("relgb", "reduced Groebner basis of V relative to U", 2, [&] { return cmd_relgb(o); });
    command("syz", "Schreyer syzygies of a Groebner basis", 1, [&] { return cmd_syz(o); })
        ->add_flag("--reduced", o.reduced, "reduce under the Schreyer order");
    command("relsyz", "relative Schreyer syzygies of the reduced relative basis", 2, [&] { return cmd_relsyz(o); })
        ->add_flag("--minimal", o.reduced, "keep a subset with minimal leading terms");
    command("respres", "relative Schreyer presentation as a graded matrix", 2, [&] { return cmd_respres(o); })
        ->add_flag("--minimal", o.reduced, "keep a subset with minimal leading terms");
    CLI::App* resolution = command("resolution", "free resolution of V/U", 2, [&] { return cmd_resolution(o); });
    resolution->add_option("--length", o.length, "maximal number of differentials (default n+1)");
    resolution->add_flag("--minimize", o.minimize, "prune to a minimal resolution");
    command("minimize", "prune a resolution file", 1, [&] { return cmd_minimize(o); });
    command("betti", "Betti numbers of a minimized resolution file", 1, [&] { return cmd_betti(o); })
        ->add_flag("--minimize", o.minimize, "prune first");
    command("hilbert", "graded dimensions of V/U over the box", 2, [&] { return cmd_hilbert(o); });
    command("flange-gb", "bring a free-injective matrix into Groebner form", 1, [&] { return cmd_flange_gb(o); });
    command("flange-pres", "free presentation of a free-injective matrix in Groebner form", 1,
            [&] { return cmd_flange_pres(o); })
        ->add_flag("--gb", o.complete_first, "bring the matrix into Groebner form first");
    CLI::App* homology = command("homology", "presentation of the homology of a complex file", 1,
                                 [&] { return cmd_homology(o); });
    homology->add_flag("--minimize", o.minimize, "minimal resolution instead of the raw presentation");
    homology->add_option("--length", o.length, "maximal number of differentials with --minimize");
    CLI::App* diagram = command("from-diagram", "realize a diagram of vector spaces as V/U", 1,
                                [&] { return cmd_from_diagram(o); });
    diagram->add_flag("--resolve", o.resolve, "output a minimal free resolution");
    diagram->add_option("--length", o.length, "maximal number of differentials with --resolve");
    command("verify", "check that a resolution file is exact over the box", 1, [&] { return cmd_verify(o, status); });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        std::string text = action();
        if (o.output.empty())
            out << text;
        else
            write_file(o.output, text);
    } catch (const ContractViolation& e) {
        err << "contract violation: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "input error: " << e.what() << "\n";
        return 1;
    }
    return status;
}

} // namespace relgb::cli
