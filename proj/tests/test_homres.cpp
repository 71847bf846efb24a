#include "doctest.h"

#include "relgb/error.hpp"
#include "fixtures.hpp"

using namespace testing;

namespace {

const Ring R({"X1", "X2"});

OrderSpec pot() { return OrderSpec::parse("grevlex; pot desc", R.vars); }

} // namespace

TEST_CASE("kernel of a free map") {
    Ring S({"X", "Y"});
    auto M = GradedMatrix::from_rows(2, {deg(0, 0)}, {deg(1, 0), deg(0, 1)}, {{el("X", S), el("Y", S)}});
    auto K = kernel_of_free_map(M, pot());
    REQUIRE_FALSE(K.empty());
    for (const auto& k : K) CHECK(apply(M, k).is_zero());
    auto red = reduced_basis(K, pot());
    REQUIRE(red.size() == 1);
    CHECK(red[0] == el("Y*e1 - X*e2", S, 2));
}

TEST_CASE("kernel of a map with a unit entry") {
    auto M = GradedMatrix::from_rows(2, {deg(0, 0)}, {deg(0, 0), deg(1, 0)}, {{el("1", R), el("X1", R)}});
    auto red = reduced_basis(kernel_of_free_map(M, pot()), pot());
    REQUIRE(red.size() == 1);
    CHECK(red[0] == el("X1*e1 - e2", R, 2));
}

TEST_CASE("homology of the bifiltration complex") {
    auto hp = homology_presentation(bifiltration(), pot());
    auto D1 = bifiltration().D1;
    for (const auto& k : hp.kernel) CHECK(apply(D1, k).is_zero());
    CHECK(hp.kernel_gb.size() == 4);
    CHECK(hp.pair.H.size() == 3);
    CHECK(is_relative_gb(hp.pair));
    CHECK(hp.presentation.ncols() == 2);
    CHECK(check_homogeneous(hp.presentation));
    // the syzygies vanish modulo U
    for (const auto& s : hp.presentation.columns)
        CHECK(normal_form(combine(s, hp.pair.H, 2, 5), hp.pair.U, pot()).is_zero());
}

TEST_CASE("homology dimensions") {
    auto hp = homology_presentation(bifiltration(), pot());
    auto V = hp.pair.H;
    V.insert(V.end(), hp.pair.U.begin(), hp.pair.U.end());
    // free on degrees (0,1) and (1,0) modulo one relation in degree (2,1)
    for (const auto& a : box_degrees(deg(0, 0), deg(4, 4))) {
        std::size_t expect = deg(0, 1).leq(a) + deg(1, 0).leq(a) - deg(2, 1).leq(a);
        CHECK(graded_dimension(V, hp.pair.U, hp.ambient, a) == expect);
    }
}

TEST_CASE("resolution of the rank 2 realization") {
    auto s = realization_R2();
    auto res = free_resolution(s.V, s.U, s.shifts, s.spec);
    REQUIRE(res.length() >= 2);
    std::vector<std::vector<std::string>> d1 = {{"X1^2", "X1*X2", "X2^2", "0", "0"},
                                                {"0", "-X1^2", "0", "X2", "X1^3"}};
    CHECK(res.differentials[0].columns == columns_of(d1, R));
    CHECK(res.differentials[1].ncols() == 3);
    CHECK(res.complete);
    CHECK(res.F0 == Shifts{deg(1, 0), deg(0, 1)});
    for (std::size_t i = 0; i + 1 < res.length(); ++i)
        for (const auto& c : compose(res.differentials[i], res.differentials[i + 1]).columns) CHECK(c.is_zero());
}

TEST_CASE("pruning the rank 2 resolution") {
    auto s = realization_R2();
    auto res = free_resolution(s.V, s.U, s.shifts, s.spec);
    auto min = prune_minimize(res);
    CHECK(min.minimized);
    std::vector<std::vector<std::string>> d1 = {{"X1^2", "X1*X2", "X2^2", "0"}, {"0", "-X1^2", "0", "X2"}};
    CHECK(min.differentials[0].columns == columns_of(d1, R));
    std::vector<std::vector<std::string>> d2 = {{"0", "-X2^2"}, {"X2", "X1*X2"}, {"-X1", "0"}, {"X1^2", "X1^3"}};
    CHECK(min.differentials[1].columns == columns_of(d2, R));
    CHECK(betti_numbers(min).totals() == std::vector<std::size_t>{2, 4, 2});
    CHECK_THROWS_AS(betti_numbers(res), ContractViolation);
}

TEST_CASE("Betti numbers by degree") {
    auto s = realization_R6();
    auto min = prune_minimize(free_resolution(s.V, s.U, s.shifts, s.spec));
    auto b = betti_numbers(min);
    CHECK(b.totals() == std::vector<std::size_t>{2, 4, 2});
    CHECK(b.levels[0] == std::map<Degree, std::size_t>{{deg(0, 1), 1}, {deg(1, 0), 1}});
    CHECK(b.levels[1].at(deg(0, 2)) == 1);
    CHECK(b.levels[2].at(deg(2, 2)) == 1);
}

TEST_CASE("first constant is found in row-major order") {
    auto M = GradedMatrix::from_rows(2, {deg(0, 0), deg(0, 0)}, {deg(1, 0), deg(0, 0), deg(0, 0)},
                                     {{el("X1", R), el("0", R), el("0", R)}, {el("0", R), el("2", R), el("3", R)}});
    CHECK(first_constant(M) == std::pair<std::size_t, std::size_t>{1, 1});
    auto N = GradedMatrix::from_rows(2, {deg(0, 0)}, {deg(1, 0)}, {{el("X1", R)}});
    CHECK_FALSE(first_constant(N).has_value());
}

TEST_CASE("pruning a presentation with a unit") {
    // e2 = X1 e1 and X2 e2 = 0, so the module is k[X1,X2]/(X1 X2)
    auto P = GradedMatrix::from_rows(2, {deg(0, 0), deg(1, 0)}, {deg(1, 0), deg(1, 1)},
                                     {{el("X1", R), el("0", R)}, {el("-1", R), el("X2", R)}});
    auto res = prune_minimize(resolution_from_presentation(P, pot()));
    REQUIRE(res.F0.size() == 1);
    CHECK(res.F0[0] == deg(0, 0));
    REQUIRE(res.differentials[0].ncols() == 1);
    CHECK(res.differentials[0].columns[0] == el("X1*X2", R));
}

TEST_CASE("minimize columns") {
    auto M = GradedMatrix::from_rows(2, {deg(0, 0)}, {deg(1, 0), deg(2, 0), deg(0, 1), deg(1, 1)},
                                     {{el("X1", R), el("X1^2", R), el("X2", R), el("X1*X2", R)}});
    auto m = minimize_columns(M);
    CHECK(m.columns == els({"X1", "X2"}, R));
    CHECK(m.cols == Shifts{deg(1, 0), deg(0, 1)});
}

TEST_CASE("diagram modules") {
    auto D = flange_diagram();
    CHECK(D.dim(deg(1, 1)) == 2);
    CHECK(D.dim(deg(0, 0)) == 0);
    CHECK(D.dim(deg(5, 5)) == 0);
    CHECK(D.map(deg(1, 0), 1) == scalars({{1}, {0}}));
    CHECK(D.map(deg(2, 1), 0).empty());
    auto box = D.support_box();
    REQUIRE(box.has_value());
    CHECK(box->first == deg(0, 0));
    CHECK(box->second == deg(2, 1));
    CHECK_FALSE(D.commutation_failure().has_value());
    D.maps[{deg(1, 0), 1}] = scalars({{2}, {0}});
    CHECK(D.commutation_failure().has_value());
}

TEST_CASE("module from a diagram") {
    auto D = flange_diagram();
    auto real = module_from_diagram(D, pot());
    CHECK(real.gamma == deg(0, 0));
    CHECK(real.generator_degrees.size() == 2);
    CHECK(real.V.size() == 2);
    Shifts zero = zero_shifts(real.V.size(), 2);
    for (const auto& a : box_degrees(deg(0, 0), deg(4, 3)))
        CHECK(graded_dimension(real.V, real.U, zero, a - real.gamma) == D.dim(a));
}

TEST_CASE("diagram round trip through a subquotient") {
    auto fr = flange_realization(load_fim("flange_A.fim"));
    auto back = diagram_from_subquotient(fr.V, fr.U, fr.ambient, deg(0, 0), deg(3, 2));
    auto D = flange_diagram();
    CHECK(back.dims == D.dims);
    CHECK_FALSE(back.commutation_failure().has_value());
    auto again = module_from_diagram(back, pot());
    auto min = prune_minimize(free_resolution(again.V, again.U, zero_shifts(again.V.size(), 2), pot()));
    CHECK(betti_numbers(min).totals() == std::vector<std::size_t>{2, 4, 2});
}

TEST_CASE("diagram of a shifted cyclic module") {
    Ring S({"x", "y"});
    // k[x,y]/(x^2, y) generated in degree (-1, 0)
    auto D = diagram_from_subquotient(els({"1"}, S), els({"x^2", "y"}, S), {deg(-1, 0)}, deg(-2, -1), deg(2, 1));
    CHECK(D.dims == std::map<Degree, std::size_t>{{deg(-1, 0), 1}, {deg(0, 0), 1}});
    auto real = module_from_diagram(D, pot());
    CHECK(real.gamma == deg(-1, 0));
    CHECK(real.generator_degrees == std::vector<Degree>{deg(-1, 0)});
}

TEST_CASE("verify_complex detects a broken differential") {
    auto s = realization_R2();
    auto res = free_resolution(s.V, s.U, s.shifts, s.spec);
    auto [lo, hi] = default_box(res);
    CHECK(verify_complex(res, lo, hi, 1).exact());
    CHECK(verify_complex(res, lo, hi, 3).degrees_checked == verify_complex(res, lo, hi, 1).degrees_checked);
    auto broken = res;
    broken.differentials[1].columns[0] =
        ModuleElement::basis(2, res.differentials[1].nrows(), 0).times_term(Exponent{0, 1}, Scalar(1));
    CHECK_FALSE(verify_complex(broken, lo, hi, 1).exact());
    auto dropped = res;
    dropped.differentials[1].columns.pop_back();
    dropped.differentials[1].cols.pop_back();
    CHECK_FALSE(verify_complex(dropped, lo, hi, 1).exact());
}

TEST_CASE("resolution length is capped") {
    auto s = realization_R2();
    auto res = free_resolution(s.V, s.U, s.shifts, s.spec, 1);
    CHECK(res.length() == 1);
    CHECK_FALSE(res.complete);
    auto [lo, hi] = default_box(res);
    CHECK(verify_complex(res, lo, hi).exact());
}
