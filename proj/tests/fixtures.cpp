#include "fixtures.hpp"

namespace testing {

Subquotient load_subquotient(const std::string& v_file, const std::string& u_file, const std::string& order) {
    ElementList v = parse_element_list(read_data(v_file));
    Subquotient s;
    s.ring = v.ring;
    s.spec = OrderSpec::parse(order, s.ring.vars);
    s.V = v.elements;
    s.shifts = v.shifts_or_zero();
    if (!u_file.empty()) s.U = parse_element_list(read_data(u_file)).elements;
    return s;
}

Subquotient fifth_power_pair() { return load_subquotient("relgb_V.txt", "relgb_U.txt", "grevlex X<Y; pot desc"); }

Subquotient monomial_triangle() { return load_subquotient("schreyer_H.txt", "", "grevlex; pot desc"); }

Subquotient realization_R6() {
    return load_subquotient("resolution_R6_V.txt", "resolution_R6_U.txt", "grevlex; pot desc");
}

Subquotient realization_R2() {
    return load_subquotient("resolution_R2_V.txt", "resolution_R2_U.txt", "grevlex; pot desc");
}

FreeInjectiveMatrix load_fim(const std::string& file) { return parse_fim(read_data(file)); }

OrderSpec flange_order() { return OrderSpec::parse("grlex; pot asc", {"X1", "X2"}); }

TorsionFreeComplexInput bifiltration(Ring* ring) { return parse_complex(read_data("bifiltration.complex"), {}, ring); }

DiagramModule flange_diagram() { return parse_diagram(read_data("flange_module.diagram")); }

std::vector<NamedResolution> reference_resolutions() {
    std::vector<NamedResolution> out;
    for (auto [name, s] : {std::pair{"monomial triangle", monomial_triangle()},
                           std::pair{"R6 realization", realization_R6()},
                           std::pair{"R2 realization", realization_R2()}})
        out.push_back({name, free_resolution(s.V, s.U, s.shifts, s.spec)});

    OrderSpec pot = OrderSpec::parse("grevlex; pot desc", {"X1", "X2"});
    auto hp = homology_presentation(bifiltration(), pot);
    out.push_back({"bifiltration homology", free_resolution(hp.pair.H, hp.pair.U, hp.ambient, pot)});
    out.push_back({"bifiltration presentation", resolution_from_presentation(hp.presentation, pot)});

    auto gb = buchberger_flange(load_fim("flange_Atilde.fim"), flange_order());
    out.push_back({"flange presentation", resolution_from_presentation(free_presentation(gb, flange_order()),
                                                                        flange_order())});
    auto fr = flange_realization(load_fim("flange_A.fim"));
    out.push_back({"flange realization", free_resolution(fr.V, fr.U, fr.ambient, pot)});

    auto dr = module_from_diagram(flange_diagram(), pot);
    out.push_back({"diagram realization", free_resolution(dr.V, dr.U, zero_shifts(dr.V.size(), 2), pot)});
    return out;
}

} // namespace testing
