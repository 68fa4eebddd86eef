#include <gtest/gtest.h>

#include <random>

#include "nfilt/cli/report.hpp"

using namespace nfilt;
using namespace nfilt::cli;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse(text);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

Errc code_of(const std::string& text) {
    try {
        parse(text);
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::internal;
}

Json run_json(const std::string& cmd, const std::string& text, RunOptions opt = {}) { return run(cmd, parse(text), opt).body; }

}// namespace

TEST(Parse, MonomialIdeal) {
    auto r = parse("vars x,y; I = <x^5, x^2*y^2, y^5>");
    ASSERT_EQ(r.vars, (std::vector<std::string>{"x", "y"}));
    const auto& I = std::get<Ideal>(r.values.at("I"));
    ASSERT_TRUE(I.is_monomial());
    EXPECT_EQ(I.monomial(), MonomialIdeal(2, {{5, 0}, {2, 2}, {0, 5}}));
}

TEST(Parse, FourVariablePoly) {
    auto r = parse("vars x,y,z,t; f = z^9 - y^11*t + y*t^5 + x^27");
    const auto& f = std::get<Poly>(r.values.at("f"));
    EXPECT_EQ(f.dim(), 4u);
    EXPECT_EQ(f.size(), 4u);
    EXPECT_EQ(f.coeff({0, 11, 0, 1}), -1);
    EXPECT_EQ(f.coeff({27, 0, 0, 0}), 1);
}

TEST(Parse, ArithmeticForms) {
    auto r = parse("vars x,y\nf = 2x^2 - 3/2*x*y + (x+y)^2\ng = x y");
    const auto& f = std::get<Poly>(r.values.at("f"));
    EXPECT_EQ(f.coeff({2, 0}), 3);
    EXPECT_EQ(f.coeff({1, 1}), rat(1, 2));
    EXPECT_EQ(f.coeff({0, 2}), 1);
    EXPECT_EQ(std::get<Poly>(r.values.at("g")).coeff({1, 1}), 1);
}

TEST(Parse, TuplesWeightsAndReferences) {
    auto r = parse("vars x,y,z\n# comment\ng1 = x^6 + y^6 - z^5 + x*y*z\nw=(1,3,4)\ntuple = (g1, <x^2, y>,\n  z^3)\nfiltration = <g1>");
    EXPECT_EQ(std::get<std::vector<int>>(r.values.at("w")), (std::vector<int>{1, 3, 4}));
    const auto& T = std::get<Tuple>(r.values.at("tuple"));
    ASSERT_EQ(T.items.size(), 3u);
    EXPECT_TRUE(std::holds_alternative<Poly>(T.items[0]));
    EXPECT_TRUE(std::holds_alternative<Ideal>(T.items[1]));
    EXPECT_FALSE(T.all_polys());
    auto r2 = parse("vars x,y; w=(2,3); filtration = w; f = (x + y)*(x - y)");
    EXPECT_TRUE(std::holds_alternative<WeightsRef>(r2.values.at("filtration")));
    EXPECT_EQ(std::get<Poly>(r2.values.at("f")).size(), 2u);
}

TEST(Parse, Errors) {
    EXPECT_EQ(error_of("vars x,y; I = <>"), "line 1, column 16: empty ideal");
    EXPECT_EQ(code_of("<>"), Errc::parse_error);
    EXPECT_EQ(error_of("vars x,y\nf = x + q"), "line 2, column 9: unknown variable 'q'");
    EXPECT_EQ(code_of("vars x,y\nf = x + q"), Errc::unknown_variable);
    EXPECT_EQ(error_of("vars x,y\nf = x +"), "line 2, column 8: unexpected end of input");
    EXPECT_EQ(error_of("vars x,y\nf = x $ y"), "line 2, column 7: unexpected character '$'");
    EXPECT_EQ(code_of("vars x,y; w=(1,2,3)"), Errc::dimension_mismatch);
    EXPECT_EQ(code_of("vars x,y; tuple = (x, y, x)"), Errc::dimension_mismatch);
    EXPECT_EQ(code_of("vars a,b,c,d,e,f,g"), Errc::dimension_mismatch);
    EXPECT_EQ(code_of("f = x"), Errc::parse_error);
    EXPECT_EQ(code_of("vars x,x"), Errc::parse_error);
    EXPECT_EQ(code_of("vars x; x = 1"), Errc::parse_error);
    EXPECT_EQ(code_of("vars x,y; f = x^"), Errc::parse_error);
    EXPECT_EQ(code_of("vars x,y; f = x/0"), Errc::parse_error);
    EXPECT_EQ(code_of("vars x,y; f = x y)"), Errc::parse_error);
}

TEST(Parse, ErrorPositionsAreDeterministic) {
    const std::string bad = "vars x,y\n\nI = <x^2,\n  y^3, q>";
    EXPECT_EQ(error_of(bad), error_of(bad));
    EXPECT_EQ(error_of(bad), "line 4, column 8: unknown variable 'q'");
}

TEST(Parse, RoundTrip) {
    std::mt19937_64 rng(11);
    std::vector<std::string> names{"x", "y", "z"};
    for (int trial = 0; trial < 200; ++trial) {
        Poly h(3);
        const int terms = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < terms; ++i) {
            ExpVec k{static_cast<int>(rng() % 5), static_cast<int>(rng() % 5), static_cast<int>(rng() % 5)};
            long num = static_cast<long>(rng() % 21) - 10;
            long den = 1 + static_cast<long>(rng() % 4);
            h.add_term(k, rat(num, den));
        }
        auto text = to_string(h, names);
        EXPECT_EQ(parse_poly(text, names), h) << text;
    }
}

TEST(Run, SigmaPrimerex) {
    auto j = run_json("sigma", "vars x,y; tuple = (<x^5, x^2*y^2, y^5>, <x^3*y^3>)");
    EXPECT_EQ(j["value"], 30);
    EXPECT_EQ(j["certificate"], "exact-sandwich");
}

TEST(Run, GradientWeighted) {
    auto j = run_json("gradient", "vars x,y,z; f = x^12 + y^4 + z^3 + x^6*y*z; w=(1,3,4)");
    EXPECT_EQ(j["loja"], "11");
    EXPECT_EQ(j["status"], "exact-linked");
}

TEST(Run, LojaPureAxes) {
    auto rep = run("loja", parse("vars x,y; tuple = (<x^3>, <y^3>)"));
    EXPECT_EQ(rep.body["value"], "3");
    EXPECT_EQ(rep.body["witness_s"], 1);
    EXPECT_EQ(rep.exit_code, 0);
}

TEST(Run, OtherCommands) {
    auto p = run_json("polyhedron", "vars x,y; I = <x^5, x^2*y^2, y^5>");
    EXPECT_EQ(p["M"], 10);
    EXPECT_EQ(p["vertices"].size(), 3u);
    EXPECT_EQ(run_json("mult", "vars x,y; I = <x^4, x*y, y^5>")["value"], 9);
    EXPECT_EQ(run_json("mult", "vars x,y; I = <x^2 + y^3, x*y>")["value"], 5);
    EXPECT_EQ(run_json("mixed", "vars x,y; tuple = (<x^2, y>, <x, y^3>)")["value"], 1);
    EXPECT_EQ(run_json("radius", "vars x,y; tuple = (<x^5, x^2*y^2, y^5>, <x^3*y^3>)")["value"], 8);
    auto nd = run_json("nondeg", "vars x,y; filtration = <x^4, x*y, y^4>; A = <x^5, x^2*y, x*y^2, y^5>; tuple = (A, A)");
    EXPECT_EQ(nd["verdict"], "no");
    EXPECT_EQ(nd["bound"], "25/2");
    auto L = run_json("linked", "vars x,y; filtration = <x^4, x*y, y^5>; tuple = (<x^2*y^2, x^8>, <x*y, y^5>)");
    EXPECT_EQ(L["verdict"], "no");
    EXPECT_EQ(L["required"], "9/5");
    auto g = run_json("gradient", "vars x,y,z; f = x^2 + y^3 + z^5");
    EXPECT_EQ(g["loja"], "4");
    EXPECT_EQ(g["milnor"], 8);
}

TEST(Run, Wanalyze) {
    auto j = run_json("wanalyze", "vars x,y,z; f = x^12 + y^4 + z^3 + x^6*y*z; w=(1,3,4)");
    EXPECT_EQ(j["semi_weighted_homogeneous"], "yes");
    EXPECT_EQ(j["d"], 12);
    EXPECT_EQ(j["milnor"], 66);
    EXPECT_EQ(j["gradient"]["loja"], "11");
    EXPECT_EQ(j["principal_gradient"]["loja"], "11");
    EXPECT_EQ(j["pIg"], "no");
    EXPECT_EQ(j["kop"]["value"], "11");
    auto n = run_json("wanalyze", "vars x,y; f = x^2*y; w=(1,1)");
    EXPECT_EQ(n["semi_weighted_homogeneous"], "no");
}

TEST(Run, ExitCodes) {
    RunOptions opt;
    opt.s_max = 1;
    // one step of the scan cannot certify 15/2
    auto rep = run("loja", parse("vars x,y; tuple = (<x^5, x^2*y^2, y^5>, <x^3*y^3>)"), opt);
    EXPECT_EQ(rep.exit_code, 2);
    EXPECT_EQ(rep.body["status"], "upper-bound-only");
    EXPECT_THROW(run("sigma", parse("vars x,y; I = <x>")), Error);
    EXPECT_THROW(run("frobnicate", parse("vars x,y; I = <x>")), Error);
    EXPECT_THROW(run("gradient", parse("vars x,y; f = x^2*y")), Error);
}

TEST(Run, ByteStable) {
    const std::string in = "vars x,y,z; g1 = x^6 + y^6 - z^5 + x*y*z; filtration = <g1>; tuple = (g1, x^2*y^2*z^2, y^12 + z^10)";
    RunOptions opt;
    opt.seed = 5;
    EXPECT_EQ(run_json("nondeg", in, opt).dump(), run_json("nondeg", in, opt).dump());
}
