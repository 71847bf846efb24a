#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Run {
    int status;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = relgb::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(RELGB_TEST_DATA) + "/" + name; }

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("relgb_cli_" + name)).string();
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string p = temp_path(name);
    std::ofstream(p) << text;
    return p;
}

std::vector<std::string> data_lines(const std::string& text) {
    std::vector<std::string> out;
    for (const auto& l : source_lines(text))
        if (!header_of(l)) out.push_back(l.text);
    return out;
}

} // namespace

TEST_CASE("cli: relative basis") {
    auto r = run({"--order", "grevlex X<Y ; pot desc", "relgb", data("relgb_U.txt"), data("relgb_V.txt")});
    CHECK(r.status == 0);
    CHECK(data_lines(r.out) == std::vector<std::string>{"X^3*Y", "Y^3", "X*Y^2 + X^3"});
}

TEST_CASE("cli: Groebner basis and syzygies") {
    auto r = run({"gb", data("schreyer_H.txt")});
    CHECK(r.status == 0);
    CHECK(data_lines(r.out).size() == 3);
    r = run({"syz", data("schreyer_H.txt")});
    CHECK(r.status == 0);
    CHECK(data_lines(r.out) == std::vector<std::string>{"Z*e1 - X*e2", "Z*e1 - Y*e3", "X*e2 - Y*e3"});
    r = run({"syz", "--reduced", data("schreyer_H.txt")});
    CHECK(data_lines(r.out) == std::vector<std::string>{"Z*e1 - Y*e3", "X*e2 - Y*e3"});
}

TEST_CASE("cli: syz refuses a list that is not a Groebner basis") {
    std::string f = write_temp("nongb.txt", "vars: x, y\nx^2 - y\nx*y - 1\n");
    auto r = run({"syz", f});
    CHECK(r.status == 2);
    CHECK(r.err.find("contract violation") != std::string::npos);
}

TEST_CASE("cli: input errors") {
    CHECK(run({"gb", data("missing.txt")}).status == 1);
    std::string f = write_temp("bad.txt", "vars: x\nx + z\n");
    auto r = run({"gb", f});
    CHECK(r.status == 1);
    CHECK(r.err.find("line 2, column 5") != std::string::npos);
    CHECK(run({"--field", "fp:4", "gb", data("schreyer_H.txt")}).status == 1);
    CHECK(run({"--order", "nonsense", "gb", data("schreyer_H.txt")}).status == 1);
    CHECK(run({"nosuchcommand"}).status == 1);
    CHECK(run({"relgb", data("relgb_U.txt")}).status == 1);
}

TEST_CASE("cli: help") {
    auto r = run({"--help"});
    CHECK(r.status == 0);
    CHECK(r.out.find("resolution") != std::string::npos);
}

TEST_CASE("cli: resolution, betti and verify") {
    std::string res = temp_path("r2.res");
    auto r = run({"-o", res, "resolution", data("resolution_R2_U.txt"), data("resolution_R2_V.txt")});
    REQUIRE(r.status == 0);
    CHECK(r.out.empty());
    r = run({"verify", res});
    CHECK(r.status == 0);
    CHECK(r.out.rfind("exact", 0) == 0);
    CHECK(run({"betti", res}).status == 2);
    r = run({"betti", "--minimize", res});
    CHECK(r.status == 0);
    CHECK(r.out.find("total: 2 4 2") != std::string::npos);
    std::string min = temp_path("r2min.res");
    CHECK(run({"-o", min, "minimize", res}).status == 0);
    CHECK(run({"betti", min}).out.find("total: 2 4 2") != std::string::npos);
    CHECK(run({"--box", "(0,0)..(4,4)", "verify", min}).status == 0);
}

TEST_CASE("cli: verify reports a broken resolution") {
    std::string res = temp_path("broken.res");
    auto r = run({"-o", res, "resolution", "--minimize", data("resolution_R2_U.txt"), data("resolution_R2_V.txt")});
    REQUIRE(r.status == 0);
    std::ifstream in(res);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    // scaling the entry X2 of the first differential keeps it homogeneous
    // but breaks exactness
    auto pos = text.find("0, -X1^2, 0, X2");
    REQUIRE(pos != std::string::npos);
    std::string broken = text;
    broken.replace(pos, 15, "0, -X1^2, 0, 2*X2");
    r = run({"verify", write_temp("broken2.res", broken)});
    CHECK(r.status == 2);
    CHECK(r.out.find("not exact") != std::string::npos);
    // a degree-changing replacement is an input error
    std::string inhomogeneous = text;
    inhomogeneous.replace(pos, 15, "0, -X1^2, 0, X1");
    r = run({"verify", write_temp("broken3.res", inhomogeneous)});
    CHECK(r.status == 1);
    CHECK(r.err.find("not homogeneous") != std::string::npos);
}

TEST_CASE("cli: hilbert") {
    auto r = run({"--box", "(0,0)..(2,1)", "hilbert", data("resolution_R2_U.txt"), data("resolution_R2_V.txt")});
    CHECK(r.status == 0);
    CHECK(r.out.find("(1,1) 2") != std::string::npos);
    CHECK(r.out.find("(0,0) 0") != std::string::npos);
}

TEST_CASE("cli: flange commands") {
    auto r = run({"--order", "grlex; pot asc", "flange-gb", data("flange_Atilde.fim")});
    CHECK(r.status == 0);
    CHECK(r.out.find("gens: (1,0) (0,1) (1,1)") != std::string::npos);
    CHECK(run({"--order", "grlex; pot asc", "flange-pres", data("flange_Atilde.fim")}).status == 2);
    r = run({"--order", "grlex; pot asc", "flange-pres", "--gb", data("flange_Atilde.fim")});
    CHECK(r.status == 0);
    CHECK(r.out.find("-1, 0, 0, 0, X1, X2, 0, 0, X1^2") != std::string::npos);
}

TEST_CASE("cli: homology and diagrams") {
    auto r = run({"homology", "--minimize", data("bifiltration.complex")});
    CHECK(r.status == 0);
    CHECK(r.out.find("minimized: yes") != std::string::npos);
    std::string res = temp_path("diag.res");
    r = run({"-o", res, "from-diagram", "--resolve", data("flange_module.diagram")});
    CHECK(r.status == 0);
    r = run({"betti", res});
    CHECK(r.status == 0);
    CHECK(r.out.find("total: 2 4 2") != std::string::npos);
}

TEST_CASE("cli: fields") {
    auto r = run({"--field", "fp:7", "gb", write_temp("fp.txt", "vars: x\n8*x\n")});
    CHECK(r.status == 0);
    CHECK(data_lines(r.out) == std::vector<std::string>{"x"});
}

TEST_CASE("cli: repeated runs give identical output") {
    std::vector<std::vector<std::string>> commands = {
        {"relgb", data("relgb_U.txt"), data("relgb_V.txt")},
        {"syz", data("schreyer_H.txt")},
        {"resolution", "--minimize", data("resolution_R2_U.txt"), data("resolution_R2_V.txt")},
        {"homology", data("bifiltration.complex")},
        {"--order", "grlex; pot asc", "flange-pres", "--gb", data("flange_Atilde.fim")},
        {"from-diagram", "--resolve", data("flange_module.diagram")},
    };
    for (const auto& c : commands) {
        auto a = run(c), b = run(c);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("cli: output files parse back to the same objects") {
    auto r = run({"gb", data("schreyer_H.txt")});
    auto list = parse_element_list(r.out);
    CHECK(format_element_list(list, OrderSpec::parse("grevlex; pot desc", list.ring.vars)) == r.out);

    std::string res = temp_path("reparse.res");
    REQUIRE(run({"-o", res, "resolution", "--minimize", data("resolution_R2_U.txt"), data("resolution_R2_V.txt")})
                .status == 0);
    std::ifstream in(res);
    std::stringstream ss;
    ss << in.rdbuf();
    Ring ring;
    auto parsed = parse_resolution(ss.str(), {}, &ring);
    CHECK(format_resolution(parsed, ring) == ss.str());

    r = run({"--order", "grlex; pot asc", "flange-gb", data("flange_Atilde.fim")});
    Ring fring;
    auto A = parse_fim(r.out, {}, &fring);
    CHECK(format_fim(A, fring) == r.out);
}
