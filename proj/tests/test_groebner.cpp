#include "doctest.h"

#include <algorithm>

#include "relgb/error.hpp"
#include "relgb/relative.hpp"
#include "support.hpp"

using namespace testing;

namespace {

// Textbook grevlex with the variables listed from greatest to smallest:
// higher total degree wins, otherwise the smaller last nonzero entry of
// a - b wins.
int textbook_grevlex(const std::vector<int>& a, const std::vector<int>& b) {
    long da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
}

std::vector<Exponent> exponents_up_to(std::size_t n, int d) {
    std::vector<Exponent> out;
    std::vector<int> e(n, 0);
    while (true) {
        long t = 0;
        for (int x : e) t += x;
        if (t <= d) out.emplace_back(e);
        std::size_t i = 0;
        while (i < n && ++e[i] > d) e[i++] = 0;
        if (i == n) break;
    }
    return out;
}

} // namespace

TEST_CASE("grevlex agrees with the textbook definition on degree 3") {
    Ring R({"X", "Y"});
    OrderSpec spec = OrderSpec::parse("grevlex X<Y", R.vars);
    CHECK(spec.compare(leading_monomial(el("X*Y^2", R), spec), leading_monomial(el("X^3", R), spec)) == 1);
    auto monos = exponents_up_to(2, 3);
    for (const auto& a : monos)
        for (const auto& b : monos) {
            if (a.total() != 3 || b.total() != 3) continue;
            // Greatest variable Y first.
            int expect = textbook_grevlex({a[1], a[0]}, {b[1], b[0]});
            CHECK(spec.compare_exponents(a, b) == expect);
        }
}

TEST_CASE("grevlex in three variables against the textbook definition") {
    OrderSpec spec;  // x1 < x2 < x3
    auto monos = exponents_up_to(3, 3);
    for (const auto& a : monos)
        for (const auto& b : monos)
            CHECK(spec.compare_exponents(a, b) == textbook_grevlex({a[2], a[1], a[0]}, {b[2], b[1], b[0]}));
}

TEST_CASE("lex and grlex") {
    Ring R({"x", "y"});
    OrderSpec lex = OrderSpec::parse("lex", R.vars);
    OrderSpec grlex = OrderSpec::parse("grlex", R.vars);
    // y > x by default
    CHECK(lex.compare_exponents(Exponent{0, 1}, Exponent{5, 0}) == 1);
    CHECK(grlex.compare_exponents(Exponent{0, 1}, Exponent{5, 0}) == -1);
    CHECK(grlex.compare_exponents(Exponent{1, 1}, Exponent{2, 0}) == 1);
    OrderSpec lex2 = OrderSpec::parse("lex y<x", R.vars);
    CHECK(lex2.compare_exponents(Exponent{0, 1}, Exponent{5, 0}) == -1);
}

TEST_CASE("POT and TOP extensions") {
    Ring R({"X1", "X2"});
    OrderSpec pot = OrderSpec::parse("grevlex; pot desc", R.vars);
    ModuleMonomial x2e1{Exponent{0, 1}, 0}, x1e2{Exponent{1, 0}, 1}, x1sq_e2{Exponent{2, 0}, 1};
    CHECK(pot.compare(x2e1, x1e2) == 1);
    CHECK(pot.compare(x2e1, x1sq_e2) == 1);
    OrderSpec asc = OrderSpec::parse("grevlex; pot asc", R.vars);
    CHECK(asc.compare(x2e1, x1e2) == -1);
    OrderSpec top = OrderSpec::parse("grevlex; top desc", R.vars);
    CHECK(top.compare(x2e1, x1sq_e2) == -1);
    CHECK(top.compare(x2e1, x1e2) == 1);
    OrderSpec expl = OrderSpec::parse("grevlex; pot e2>e1", R.vars);
    CHECK(expl.compare(x2e1, x1e2) == -1);
}

TEST_CASE("order descriptors") {
    std::vector<std::string> v{"X", "Y"};
    CHECK_THROWS_AS(OrderSpec::parse("banana", v), InputError);
    CHECK_THROWS_AS(OrderSpec::parse("grevlex X<Z", v), InputError);
    auto spec = OrderSpec::parse("grevlex X<Y ; pot desc", v);
    CHECK(OrderSpec::parse(spec.describe(v), v).describe(v) == spec.describe(v));
}

TEST_CASE("leading terms") {
    Ring R({"X1", "X2"});
    OrderSpec spec;
    auto lt = leading(el("X1*e1 - X1*e2", R, 2), spec);
    CHECK(lt.mono == ModuleMonomial{Exponent{1, 0}, 0});
    CHECK(leading(el("7*e1", R, 2), spec).coef == Scalar(7));
    Ring S({"X", "Y"});
    OrderSpec xy = OrderSpec::parse("grevlex X<Y", S.vars);
    CHECK(leading(el("X*Y^2 + X^3", S), xy).mono.exp == Exponent{1, 2});
}

TEST_CASE("Schreyer order tie rule") {
    Ring R({"X", "Y", "Z"});
    OrderSpec spec;
    auto G = els({"X*Y", "Y*Z", "X*Z"}, R);
    OrderSpec s = schreyer_order(G, spec);
    // lt(Z*XY) = lt(X*YZ); the larger index is smaller.
    CHECK(s.compare({Exponent{0, 0, 1}, 0}, {Exponent{1, 0, 0}, 1}) == 1);
    CHECK(s.compare({Exponent{1, 0, 0}, 1}, {Exponent{0, 0, 1}, 0}) == -1);
}

TEST_CASE("Schreyer order against its definition") {
    Ring R({"X", "Y"});
    OrderSpec ambient = OrderSpec::parse("grevlex; pot desc", R.vars);
    auto G = els({"X*e1 + Y*e2", "Y^2*e2 - X*e2"}, R, 2);
    OrderSpec s = schreyer_order(G, ambient);
    auto monos = exponents_up_to(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (const auto& a : monos)
                for (const auto& b : monos) {
                    auto la = leading_monomial(G[i].times_term(a, Scalar(1)), ambient);
                    auto lb = leading_monomial(G[j].times_term(b, Scalar(1)), ambient);
                    int expect = ambient.compare(la, lb);
                    if (expect == 0) expect = i == j ? 0 : (i > j ? -1 : 1);
                    CHECK(s.compare({a, i}, {b, j}) == expect);
                }
}

TEST_CASE("Schreyer order of a single element") {
    Ring R({"X", "Y"});
    OrderSpec ambient;
    auto G = els({"X^2 + Y^2"}, R);
    OrderSpec s = schreyer_order(G, ambient);
    for (const auto& a : exponents_up_to(2, 3))
        for (const auto& b : exponents_up_to(2, 3))
            CHECK(s.compare({a, 0}, {b, 0}) == ambient.compare_exponents(a, b));
}

TEST_CASE("division") {
    Ring R({"X", "Y"});
    OrderSpec spec = OrderSpec::parse("grevlex X<Y", R.vars);
    auto d = divide(el("Y^2", R), els({"Y"}, R), spec);
    CHECK(d.remainder.is_zero());
    CHECK(d.quotients[0] == el("Y", R));
    d = divide(el("X^3*Y", R), els({"Y^3", "X*Y^2 + X^3"}, R), spec);
    CHECK(d.remainder == el("X^3*Y", R));
    CHECK(d.quotients[0].is_zero());
    CHECK(d.quotients[1].is_zero());
    auto f = el("X^2*Y + X*Y^2 + Y^2", R);
    d = divide(f, {}, spec);
    CHECK(d.remainder == f);
}

TEST_CASE("division identity f = sum q_i g_i + r") {
    Ring R({"x", "y", "z"});
    OrderSpec spec;
    auto G = els({"x*y - z", "y^2 + x", "z^2*x - 1"}, R);
    auto f = el("x^3*y^2 + z^3*x^2 - 7*y + x*y*z", R);
    auto d = divide(f, G, spec);
    ModuleElement sum = d.remainder;
    for (std::size_t i = 0; i < G.size(); ++i) sum += G[i].times(d.quotients[i]);
    CHECK(sum == f);
    for (const auto& t : d.remainder.terms())
        for (const auto& g : G) CHECK_FALSE(mon_divides(leading_monomial(g, spec), t.mono));
}

TEST_CASE("S-polynomials") {
    Ring R({"X1", "X2"});
    OrderSpec spec;
    auto g1 = el("X1*e1 - X1*e2", R, 2), g2 = el("X2*e1 + X2*e2", R, 2);
    CHECK(s_polynomial(g1, g2, spec) == el("-2*X1*X2*e2", R, 2));
    CHECK(s_polynomial(g1, g1, spec).is_zero());
    Ring S({"X", "Y", "Z"});
    CHECK(s_polynomial(el("X*Y", S), el("Y*Z", S), spec).is_zero());
    CHECK(s_polynomial(el("X1*e1", R, 2), el("X1*e2", R, 2), spec).is_zero());
}

TEST_CASE("Buchberger on two rank-2 generators") {
    Ring R({"X1", "X2"});
    OrderSpec spec;
    auto F = els({"X1*e1 - X1*e2", "X2*e1 + X2*e2"}, R, 2);
    auto G = buchberger(F, spec);
    REQUIRE(G.size() == 3);
    CHECK(G[0] == F[0]);
    CHECK(G[1] == F[1]);
    CHECK(G[2].scaled(leading(G[2], spec).coef.inverse()) == el("X1*X2*e2", R, 2));
    CHECK(is_groebner(G, spec));
    CHECK_FALSE(is_groebner(F, spec));
    auto red = reduce_groebner(G, spec);
    CHECK(normal_form(el("X1*X2*e2", R, 2), red, spec).is_zero());
    CHECK(normal_form(el("e1", R, 2), red, spec) == el("e1", R, 2));
}

TEST_CASE("Buchberger on trivial inputs") {
    Ring R({"X", "Y", "Z"});
    OrderSpec spec;
    auto F = els({"X*Y", "Y*Z", "X*Z"}, R);
    CHECK(buchberger(F, spec) == F);
    CHECK(buchberger({}, spec).empty());
    CHECK(buchberger(F, spec, false) == F);
}

TEST_CASE("reduced bases") {
    Ring R({"X", "Y", "Z"});
    OrderSpec spec;
    auto S = schreyer_syzygies(els({"X*Y", "Y*Z", "X*Z"}, R), spec);
    auto red = reduce_groebner(S.syzygies, S.order);
    REQUIRE(red.size() == 2);
    CHECK(red[0] == el("Z*e1 - Y*e3", R, 3));
    CHECK(red[1] == el("X*e2 - Y*e3", R, 3));
    CHECK(reduce_groebner(red, S.order) == red);
    CHECK(reduce_groebner(els({"2*X"}, R), spec) == els({"X"}, R));
}

TEST_CASE("reduced basis of a power of the maximal ideal") {
    Ring R({"X", "Y"});
    OrderSpec spec;
    auto U = reduced_basis(els({"X^5", "X^4*Y", "X^3*Y^2", "X^2*Y^3", "X*Y^4", "Y^5"}, R), spec);
    CHECK(U.size() == 6);
    CHECK(normal_form(el("X^5", R), U, spec).is_zero());
    CHECK(normal_form(el("X^4", R), U, spec) == el("X^4", R));
}

TEST_CASE("minimize_basis keeps the first of equal leading monomials") {
    Ring R({"X", "Y"});
    OrderSpec spec;
    auto G = els({"X^2 + Y", "X", "X^2"}, R);
    auto m = minimize_basis(G, spec);
    // lm(X^2 + Y) = X^2 is divisible by lm(X)
    REQUIRE(m.size() == 1);
    CHECK(m[0] == el("X", R));
}

TEST_CASE("tracked Buchberger coordinates") {
    Ring R({"x", "y"});
    OrderSpec spec;
    auto F = els({"x^2*y - 1", "x*y^2 - x"}, R);
    auto T = buchberger_tracked(F, spec);
    REQUIRE(T.basis.size() == T.transforms.size());
    for (std::size_t k = 0; k < T.basis.size(); ++k)
        CHECK(combine(T.transforms[k], F, 2, 1) == T.basis[k]);
    auto red = reduced_basis(F, spec);
    CHECK(T.basis.size() == red.size());
    for (const auto& g : T.basis) CHECK(std::find(red.begin(), red.end(), g) != red.end());
}

TEST_CASE("Schreyer syzygies") {
    Ring R({"X", "Y", "Z"});
    OrderSpec spec;
    auto S = schreyer_syzygies(els({"X*Y", "Y*Z", "X*Z"}, R), spec);
    CHECK(S.syzygies == els({"Z*e1 - X*e2", "Z*e1 - Y*e3", "X*e2 - Y*e3"}, R, 3));
    CHECK(schreyer_syzygies(els({"X*e1", "Y*e2"}, R, 2), spec).syzygies.empty());
    CHECK(schreyer_syzygies(els({"X*e1"}, R, 1), spec).syzygies.empty());
    auto m = schreyer_syzygies(els({"X*Y", "Y*Z", "X*Z"}, R), spec, true);
    CHECK(m.syzygies.size() == 2);
}

TEST_CASE("syzygies vanish on the generators") {
    Ring R({"x", "y", "z"});
    OrderSpec spec;
    auto G = reduced_basis(els({"x*y - z^2", "y^2 - x*z", "x^2 - y*z"}, R), spec);
    auto S = schreyer_syzygies(G, spec);
    CHECK_FALSE(S.syzygies.empty());
    for (const auto& s : S.syzygies) CHECK(combine(s, G, 3, 1).is_zero());
    CHECK(is_groebner(S.syzygies, S.order));
}

TEST_CASE("relative division") {
    Ring R({"X"});
    OrderSpec spec;
    auto d = relative_division(el("X^3 + X + 1", R), els({"X"}, R), els({"X^2"}, R), spec);
    CHECK(d.remainder == el("1", R));
    CHECK(d.quotients[0] == el("1", R));
    d = relative_division(el("3*X^4", R), els({"X"}, R), els({"X^2"}, R), spec);
    CHECK(d.remainder.is_zero());
    CHECK(d.quotients[0].is_zero());
    Ring S({"X", "Y"});
    d = relative_division(el("Y^2 + Y", S), els({"X"}, S), els({"X^2"}, S), spec);
    CHECK(d.remainder == el("Y^2 + Y", S));
}

TEST_CASE("relative Buchberger completes Y^3, XY^2 + X^3 modulo the fifth power") {
    Ring R({"X", "Y"});
    OrderSpec spec = OrderSpec::parse("grevlex X<Y", R.vars);
    auto U = reduced_basis(els({"X^5", "X^4*Y", "X^3*Y^2", "X^2*Y^3", "X*Y^4", "Y^5"}, R), spec);
    auto raw = relative_buchberger(els({"Y^3", "X*Y^2 + X^3"}, R), U, spec);
    auto pair = reduce_relative(raw);
    // sorted by decreasing leading monomial
    CHECK(pair.H == els({"X^3*Y", "Y^3", "X*Y^2 + X^3"}, R));
    CHECK(is_relative_gb(pair));
    CHECK(is_relative_gb(raw));
    CHECK_FALSE(is_relative_gb({U, els({"Y^3", "X*Y^2 + X^3"}, R), spec}));
    CHECK(is_relative_gb({U, {}, spec}));
    CHECK(reduce_relative(pair).H == pair.H);
}

TEST_CASE("relative Buchberger degenerate cases") {
    Ring R({"X", "Y"});
    OrderSpec spec;
    auto U = els({"X^2", "Y^2"}, R);
    CHECK(relative_buchberger(els({"X^3", "X*Y^2"}, R), U, spec).H.empty());
    auto F = els({"X^2 - Y", "X*Y - 1"}, R);
    auto pair = reduce_relative(relative_buchberger(F, {}, spec));
    CHECK(pair.H == reduced_basis(F, spec));
}

TEST_CASE("reduced relative basis of monomial modules") {
    Ring R({"X", "Y"});
    OrderSpec spec;
    auto U = els({"X^2", "Y^2"}, R);
    auto pair = reduce_relative(relative_buchberger(els({"X", "X*Y", "Y^2"}, R), U, spec));
    CHECK(pair.H == els({"X"}, R));
    pair = reduce_relative(relative_buchberger(els({"X*Y", "Y^3", "X^2*Y"}, R), U, spec));
    CHECK(pair.H == els({"X*Y"}, R));
}

TEST_CASE("relative Schreyer syzygies") {
    Ring R({"X", "Y", "Z"});
    OrderSpec spec;
    RelativePair classical{{}, els({"X*Y", "Y*Z", "X*Z"}, R), spec};
    CHECK(relative_schreyer(classical).syzygies == els({"Z*e1 - X*e2", "Z*e1 - Y*e3", "X*e2 - Y*e3"}, R, 3));
    RelativePair ann{els({"X^2"}, R), els({"X"}, R), spec};
    auto s = relative_schreyer(ann).syzygies;
    REQUIRE(s.size() == 1);
    CHECK(s[0] == el("X", R));
}
