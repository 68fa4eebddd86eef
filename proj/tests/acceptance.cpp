#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "nfilt/weighted.hpp"
#include "property_suites.hpp"

using namespace nfilt;

namespace {

struct Check {
    std::vector<std::string> failures;

    template <class A, class B>
    void eq(const A& got, const B& want, const std::string& what) {
        if (got == want) return;
        std::ostringstream os;
        os << what << ": got " << got << ", want " << want;
        failures.push_back(os.str());
    }
    void truth(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

std::ostream& operator<<(std::ostream& os, LojaStatus s) { return os << to_string(s); }

std::ostream& operator<<(std::ostream& os, Verdict v) { return os << to_string(v); }

std::ostream& operator<<(std::ostream& os, const std::vector<std::int64_t>& v) {
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os << ")";
}

MonomialIdeal mono(std::initializer_list<ExpVec> g) { return MonomialIdeal(g.begin()->size(), std::vector<ExpVec>(g)); }

IdealTuple tuple(std::initializer_list<Ideal> items) { return IdealTuple(std::vector<Ideal>(items)); }

Poly term(std::initializer_list<int> k, long c = 1) {
    std::vector<int> v(k);
    return Poly::monomial(ExpVec(std::span<const int>(v)), Rational(c));
}

MonomialIdeal m(std::size_t n) { return MonomialIdeal::max_power(n, 1); }

void primerex(Check& c) {
    auto J1 = mono({{5, 0}, {2, 2}, {0, 5}});
    auto J2 = mono({{3, 3}});
    auto T = tuple({J1, J2});
    auto s = sigma(T);
    c.eq(s.value, 30, "sigma");
    c.truth(s.certified(), "sigma not certified");
    auto F = Filtration::of(J1);
    c.eq(levels(F, T), std::vector<std::int64_t>{10, 15}, "levels");
    c.eq(nu_ideal(F, m(2)), 2, "nu(m)");
    c.eq(F.M(), 10, "M");
    auto sm = sigma(tuple({J1, m(2)}));
    c.eq(sm.value, 4, "sigma(J1, m)");
    c.truth(sm.certified(), "sigma(J1, m) not certified");
    auto L = loja_via_linkage(F, m(2), T);
    c.eq(L.value, rat(15, 2), "loja");
    c.eq(L.status, LojaStatus::exact_linked, "loja status");
}

void segonex(Check& c) {
    auto I = mono({{4, 0}, {1, 1}, {0, 5}});
    auto J1 = mono({{2, 2}, {8, 0}});
    auto J2 = mono({{1, 1}, {0, 5}});
    auto T = tuple({J1, J2});
    c.eq(e_monomial(I), 9, "e(I)");
    auto F = Filtration::of(I);
    c.eq(nu_ideal(F, J1), 40, "nu(J1)");
    c.eq(nu_ideal(F, J2), 20, "nu(J2)");
    c.eq(nu_ideal(F, m(2)), 4, "nu(m)");
    auto s = sigma(T);
    c.eq(s.value, 18, "sigma");
    c.truth(s.certified(), "sigma not certified");
    auto link = is_gamma_linked(F, m(2), T);
    c.truth(link.prefilter_rejected, "prefilter did not reject");
    c.eq(link.required, rat(9, 5), "required");
    auto L = loja_tuple(T, m(2));
    c.eq(L.value, 10, "loja");
    c.eq(L.status, LojaStatus::exact_scan_matched_bound, "loja status");
}

void tercerex(Check& c) {
    for (int a : {2, 3}) {
        const std::string tag = "a=" + std::to_string(a) + " ";
        Poly g1 = term({6, 0, 0}) + term({0, 6, 0}) - term({0, 0, 5}) + term({1, 1, 1});
        std::vector<Poly> g{g1, term({2, 2, 2}), term({0, 6 * a, 0}) + term({0, 0, 5 * a})};
        auto F = Filtration::of(Ideal::principal(g1));
        auto coeffs = F.coefficients();
        std::sort(coeffs.begin(), coeffs.end());
        c.truth(coeffs == std::vector<IntVec>{{5, 5, 20}, {5, 19, 6}, {19, 5, 6}}, tag + "facet coefficients");
        c.eq(F.M(), 30, tag + "M");
        c.eq(nu_poly(F, g[0]).value_or(-1), 30, tag + "nu(g1)");
        c.eq(nu_poly(F, g[1]).value_or(-1), 60, tag + "nu(g2)");
        c.eq(nu_poly(F, g[2]).value_or(-1), 30 * a, tag + "nu(g3)");
        auto T = IdealTuple::of_map(g);
        auto nd = is_gamma_nondegenerate(F, T);
        c.eq(nd.face_route, Verdict::yes, tag + "face route");
        for (const auto& f : nd.faces) c.eq(f.verdict, Verdict::yes, tag + "face verdict");
        auto L = loja_via_linkage(F, m(3), T);
        c.eq(L.value, 6 * a, tag + "loja");
        c.eq(L.status, LojaStatus::exact_linked, tag + "loja status");
    }
}

void axes(Check& c) {
    auto a = loja_tuple(tuple({mono({{3, 0}}), mono({{0, 3}})}), m(2));
    c.eq(a.value, 3, "pure axes");
    c.truth(a.exact(), "pure axes not exact");
    auto b = loja_tuple(tuple({mono({{3, 0}, {1, 1}}), mono({{0, 3}})}), m(2));
    c.eq(b.value, 6, "product");
    c.truth(b.exact(), "product not exact");
}

void level_ideal(Check& c) {
    auto F = Filtration::of(mono({{4, 0}, {1, 1}, {0, 4}}));
    auto A5 = A_ideal(F, 5);
    c.truth(A5 == mono({{5, 0}, {2, 1}, {1, 2}, {0, 5}}), "A_5 generators");
    c.eq(e_monomial(A5), 13, "e(A_5)");
    auto nd = is_gamma_nondegenerate(F, IdealTuple::diagonal(A5));
    c.eq(nd.verdict, Verdict::no, "verdict");
    c.eq(nd.bound, rat(25, 2), "bound");
}

void gradients(Check& c) {
    Poly f = term({0, 0, 9, 0}) - term({0, 11, 0, 1}) + term({0, 1, 0, 5}) + term({27, 0, 0, 0});
    auto a = gradient_loja(f, Weights({1, 2, 3, 5}));
    c.eq(a.loja.value, 26, "four variables");
    c.truth(a.loja.exact(), "four variables not exact");
    auto b = gradient_loja(term({12, 0, 0}) + term({0, 4, 0}) + term({0, 0, 3}) + term({6, 1, 1}), Weights({1, 3, 4}));
    c.eq(b.loja.value, 11, "three variables");
    c.truth(b.loja.exact(), "three variables not exact");
    Poly h = term({1, 5, 0, 0}) + term({0, 0, 3, 0}) + term({1, 0, 0, 1}) + term({0, 0, 0, 2});
    auto q = gradient_loja(h, Weights({15, 3, 10, 15}));
    c.eq(q.loja.value, 9, "quartic");
    c.truth(q.loja.exact(), "quartic not exact");
    c.eq(q.semi.milnor.value_or(-1), 18, "quartic milnor");
}

void principal_part(Check& c) {
    Poly x3 = term({3, 0}), y4 = term({0, 4});
    auto a = loja_map({x3, y4}, m(2));
    c.eq(a.value, 4, "monomial map");
    c.eq(a.status, LojaStatus::exact_polyhedral, "monomial map status");
    LojaOptions one;
    one.s_max = 1;
    auto b = loja_map({x3, y4 + term({1, 1})}, m(2), one);
    c.eq(b.value, 9, "perturbed map at s=1");
    c.eq(pIg_check({x3, y4 + term({1, 1})}, Weights({4, 1})), Verdict::no, "pIg");
}

void properties(Check& c) {
    for (auto suite : props::all_suites()) {
        auto s = suite();
        c.truth(s.instances >= props::kInstances, s.name + ": only " + std::to_string(s.instances) + " instances");
        c.truth(s.violations == 0, s.name + ": " + std::to_string(s.violations) + " violations, first " + s.first_violation);
    }
}

void kop(Check& c) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> e(2, 9);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> a{e(rng), e(rng), e(rng)};
        const int d = std::lcm(std::lcm(a[0], a[1]), a[2]);
        std::vector<int> w{d / a[0], d / a[1], d / a[2]};
        const std::string tag = "x^" + std::to_string(a[0]) + "+y^" + std::to_string(a[1]) + "+z^" + std::to_string(a[2]);
        Poly f = term({a[0], 0, 0}) + term({0, a[1], 0}) + term({0, 0, a[2]});
        auto g = gradient_loja(f, Weights(w));
        auto k = kop_formula(w, d);
        const int w0 = *std::min_element(w.begin(), w.end());
        c.truth(k.remark_condition, tag + " violates d >= 2 w_i");
        c.truth(k.first_active, tag + " kop on second branch");
        c.eq(k.value, rat(d - w0, w0), tag + " kop");
        c.eq(g.loja.value, k.value, tag + " gradient");
        c.truth(g.loja.exact(), tag + " gradient not exact");
    }
}

struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<void(Check&)> run;
};

}// namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "primerex", 1, primerex},
        {2, "segonex", 5, segonex},
        {3, "tercerex a=2,3", 30, tercerex},
        {4, "pure axes and product", 5, axes},
        {5, "level ideal A_5", 1, level_ideal},
        {6, "gradient exponents", 60, gradients},
        {7, "principal part example", 10, principal_part},
        {8, "property suites", 300, properties},
        {9, "Brieskorn gradient vs closed form", 120, kop},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > cr.limit_s) c.failures.push_back("took " + std::to_string(secs) + " s, limit " + std::to_string(cr.limit_s));
        const bool ok = c.failures.empty();
        failed += !ok;
        std::printf("%s %d %s (%.2f s)\n", ok ? "PASS" : "FAIL", cr.id, cr.name.c_str(), secs);
        for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
    }
    return failed ? 1 : 0;
}
