#pragma once

#include <random>
#include <string>
#include <vector>

#include "nfilt/lojasiewicz.hpp"

namespace props {

using namespace nfilt;

constexpr int kInstances = 200;

struct Suite {
    std::string name;
    int instances = 0;
    int violations = 0;
    std::string first_violation;

    explicit Suite(std::string n) : name(std::move(n)) {}

    void check(bool ok, const std::string& what) {
        if (ok) return;
        if (violations++ == 0) first_violation = what;
    }
};

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline ExpVec random_exp(Rng& rng, std::size_t n, int hi) {
    ExpVec k(n);
    for (std::size_t i = 0; i < n; ++i) k.set(i, uniform(rng, 0, hi));
    return k;
}

// pure powers on every axis plus a few mixed monomials
inline MonomialIdeal random_convenient(Rng& rng, std::size_t n, int hi) {
    std::vector<ExpVec> g;
    for (std::size_t i = 0; i < n; ++i) g.push_back(ExpVec::unit(n, i, uniform(rng, 1, hi)));
    const int extra = uniform(rng, 0, 3);
    for (int j = 0; j < extra; ++j) {
        auto k = random_exp(rng, n, hi - 1);
        if (!k.is_zero()) g.push_back(k);
    }
    return MonomialIdeal(n, std::move(g));
}

inline MonomialIdeal random_monomial(Rng& rng, std::size_t n, int hi) {
    if (uniform(rng, 0, 3) > 0) return random_convenient(rng, n, hi);
    std::vector<ExpVec> g;
    const int count = uniform(rng, 1, 3);
    for (int j = 0; j < count; ++j) {
        auto k = random_exp(rng, n, hi);
        if (k.is_zero()) k = ExpVec::unit(n, 0);
        g.push_back(k);
    }
    return MonomialIdeal(n, std::move(g));
}

inline IdealTuple random_tuple(Rng& rng, std::size_t n, int hi) {
    std::vector<Ideal> v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(random_monomial(rng, n, hi));
    return IdealTuple(std::move(v));
}

inline std::size_t random_dim(Rng& rng) { return uniform(rng, 0, 2) == 0 ? 3 : 2; }

inline int hi_for(std::size_t n) { return n == 2 ? 6 : 3; }

// powers of tuples need deeper jets than the default cap
inline SigmaOptions deep() {
    SigmaOptions o;
    o.jet.n_max = 160;
    return o;
}

inline std::string show(const IdealTuple& T) {
    std::string s = "(";
    for (std::size_t i = 0; i < T.dim(); ++i) {
        s += i ? ", <" : "<";
        const auto& g = T[i].gens();
        for (std::size_t j = 0; j < g.size(); ++j) s += (j ? ", " : "") + to_string(g[j]);
        s += ">";
    }
    return s + ")";
}

// nullopt when infinite; uncertified values count as a violation
inline std::optional<std::int64_t> finite_sigma(Suite& suite, const IdealTuple& T) {
    auto s = sigma(T, deep());
    if (s.infinite) return std::nullopt;
    suite.check(s.certified(), "sigma not certified for " + show(T));
    return s.value;
}

inline Suite sigma_monotone() {
    Suite suite{"sigma monotone under enlargement"};
    Rng rng(101);
    while (suite.instances < kInstances) {
        const auto n = random_dim(rng);
        auto T = random_tuple(rng, n, hi_for(n));
        auto s = finite_sigma(suite, T);
        if (!s) continue;
        std::vector<Ideal> bigger;
        for (const auto& I : T.items()) {
            auto k = random_exp(rng, n, hi_for(n));
            if (k.is_zero()) k = ExpVec::unit(n, n - 1);
            bigger.emplace_back(sum(I.monomial(), MonomialIdeal(n, {k})));
        }
        IdealTuple B(bigger);
        auto t = finite_sigma(suite, B);
        suite.check(t && *s >= *t, show(T) + " enlarged to " + show(B));
        ++suite.instances;
    }
    return suite;
}

inline Suite bezout_lower_bound() {
    Suite suite{"Bezout-type lower bound"};
    Rng rng(202);
    while (suite.instances < kInstances) {
        const auto n = random_dim(rng);
        auto F = Filtration::of(random_convenient(rng, n, hi_for(n)));
        auto T = random_tuple(rng, n, hi_for(n));
        auto s = finite_sigma(suite, T);
        if (!s) continue;
        Rational bound = nondegenerate_value(F, levels(F, T), e_AM(F));
        suite.check(Rational(static_cast<long>(*s)) >= bound, show(T));
        ++suite.instances;
    }
    return suite;
}

inline Suite radius_under_powers() {
    Suite suite{"stabilization radius under powers"};
    Rng rng(303);
    while (suite.instances < kInstances) {
        const auto n = random_dim(rng);
        auto T = random_tuple(rng, n, n == 2 ? 4 : 2);
        auto s = finite_sigma(suite, T);
        if (!s) continue;
        Ideal J = uniform(rng, 0, 1) ? Ideal(MonomialIdeal::max_power(n, 1)) : Ideal(random_convenient(rng, n, 2));
        const int k = uniform(rng, 2, 3);
        const int r = rel_stabilization_radius(T, J, *s, deep());
        auto Tk = T.powered(k);
        auto sk = finite_sigma(suite, Tk);
        suite.check(sk.has_value(), "power of " + show(T) + " has infinite sigma");
        if (sk) suite.check(rel_stabilization_radius(Tk, J, *sk, deep()) <= k * r, "r(T^s) <= s r(T) for " + show(T));
        suite.check(k * rel_stabilization_radius(T, power(J, k), *s, deep()) >= r, "r_{J^s} >= r_J / s for " + show(T));
        ++suite.instances;
    }
    return suite;
}

// diagonal tuples, where every exponent is polyhedral and exact
inline Suite transitivity() {
    Suite suite{"transitivity of exponents"};
    Rng rng(404);
    while (suite.instances < kInstances) {
        const auto n = random_dim(rng);
        auto I = random_convenient(rng, n, hi_for(n) + 2);
        auto J1 = random_monomial(rng, n, hi_for(n));
        auto J2 = random_convenient(rng, n, hi_for(n));
        suite.check(loja_relative_monomial(I, J1) <= loja_relative_monomial(J2, J1) * loja_relative_monomial(I, J2),
                    show(IdealTuple::diagonal(I)));
        ++suite.instances;
    }
    return suite;
}

inline Suite closed_form_with_AM_powers() {
    Suite suite{"closed form with A_M powers"};
    Rng rng(505);
    int attempts = 0;
    while (suite.instances < kInstances && ++attempts < 20 * kInstances) {
        const auto n = random_dim(rng);
        auto F = Filtration::of(random_convenient(rng, n, hi_for(n)));
        std::vector<Ideal> v;
        for (std::size_t i = 0; i < n; ++i) {
            if (uniform(rng, 0, 1)) {
                v.emplace_back(power(MonomialIdeal(n, F.polyhedron().vertices()), uniform(rng, 1, 2)));
            } else {
                v.emplace_back(random_convenient(rng, n, hi_for(n)));
            }
        }
        IdealTuple T(v);
        auto nd = is_gamma_nondegenerate(F, T);
        if (nd.verdict != Verdict::yes) continue;
        const auto AM = A_M_ideal(F);
        for (int r = 1; r <= 2; ++r) {
            auto Ar = power(AM, r);
            std::vector<MonomialIdeal> direct;
            for (const auto& I : T.items()) direct.push_back(sum(I.monomial(), Ar));
            suite.check(mixed_e_monomial(direct) == mixed_with_AM_powers(F, nd, r), show(T) + " r=" + std::to_string(r));
        }
        ++suite.instances;
    }
    return suite;
}

inline Suite polarization_diagonal() {
    Suite suite{"polarization diagonal"};
    Rng rng(606);
    while (suite.instances < kInstances) {
        const auto n = random_dim(rng);
        auto I = random_convenient(rng, n, hi_for(n) + 1);
        auto e = e_monomial(I);
        suite.check(mixed_e_monomial(IdealTuple::diagonal(I)) == e, show(IdealTuple::diagonal(I)));
        suite.check(Rational(e) == covolume(newton(I)) * Rational(factorial(static_cast<unsigned>(n))), "covolume");
        ++suite.instances;
    }
    return suite;
}

inline Suite jet_oracle_vs_staircase() {
    Suite suite{"jet oracle vs staircase colength"};
    Rng rng(707);
    while (suite.instances < kInstances) {
        const auto n = random_dim(rng);
        std::vector<Poly> g;
        std::vector<ExpVec> ks;
        const bool powers = uniform(rng, 0, 1);
        for (std::size_t i = 0; i < n; ++i) {
            ExpVec k = powers ? ExpVec::unit(n, i, uniform(rng, 1, 5)) : random_exp(rng, n, 3);
            if (k.is_zero()) k = ExpVec::unit(n, i);
            ks.push_back(k);
            g.push_back(Poly::monomial(k, Rational(uniform(rng, 1, 9))));
        }
        auto stair = colength_monomial(MonomialIdeal(n, ks));
        auto jet = colength_jets(g);
        suite.check(jet.status != ColengthResult::Status::cap && jet.finite() == stair.has_value() && (!stair || jet.value == *stair),
                    "monomial system " + to_string(g[0]));
        ++suite.instances;
    }
    return suite;
}

inline std::vector<std::vector<Poly>> golden_systems() {
    auto P = [](std::size_t n, std::initializer_list<std::pair<ExpVec, long>> ts) {
        Poly p(n);
        for (const auto& [k, c] : ts) p.add_term(k, Rational(c));
        return p;
    };
    return {
        {P(2, {{{3, 0}, 1}}), P(2, {{{0, 3}, 1}})},
        {P(2, {{{3, 0}, 1}}), P(2, {{{1, 1}, 1}, {{0, 4}, 1}})},
        {P(3, {{{1, 0, 0}, 2}}), P(3, {{{0, 2, 0}, 3}}), P(3, {{{0, 0, 4}, 5}})},
        {P(2, {{{3, 3}, 1}}), P(2, {{{4, 4}, 1}})},
        gradient(P(3, {{{12, 0, 0}, 1}, {{0, 4, 0}, 1}, {{0, 0, 3}, 1}, {{6, 1, 1}, 1}})),
        gradient(P(2, {{{3, 0}, 1}, {{0, 4}, 1}, {{3, 1}, 1}})),
        gradient(P(2, {{{3, 0}, 1}, {{0, 3}, 1}})),
        {P(2, {{{2, 0}, 1}, {{0, 3}, 1}}), P(2, {{{1, 1}, 1}})},
        generic_combination(IdealTuple({Ideal(MonomialIdeal(2, {{5, 0}, {2, 2}, {0, 5}})), Ideal(MonomialIdeal(2, {{3, 3}}))}), 1),
        generic_combination(IdealTuple({Ideal(MonomialIdeal(2, {{2, 2}, {8, 0}})), Ideal(MonomialIdeal(2, {{1, 1}, {0, 5}}))}), 1),
    };
}

// golden systems plus random small systems with signed coefficients
inline Suite prime_field_vs_rationals() {
    Suite suite{"prime field vs rational jet oracle"};
    auto systems = golden_systems();
    Rng rng(808);
    while (systems.size() < static_cast<std::size_t>(kInstances)) {
        const std::size_t n = 2;
        std::vector<Poly> g;
        for (std::size_t i = 0; i < n; ++i) {
            Poly h(n);
            h.add_term(ExpVec::unit(n, i, uniform(rng, 1, 4)), Rational(uniform(rng, 1, 5)));
            for (int j = uniform(rng, 0, 2); j > 0; --j) {
                auto k = random_exp(rng, n, 3);
                if (!k.is_zero()) h.add_term(k, Rational(uniform(rng, -5, 5)));
            }
            g.push_back(h);
        }
        systems.push_back(g);
    }
    JetOptions q;
    q.field = Field::rationals;
    for (const auto& g : systems) {
        auto a = colength_jets(g);
        auto b = colength_jets(g, q);
        suite.check(a.status == b.status && a.value == b.value, "system starting " + to_string(g[0]));
        ++suite.instances;
    }
    return suite;
}

inline Suite finiteness_criterion() {
    Suite suite{"monomial finiteness criterion vs jet oracle"};
    Rng rng(909);
    while (suite.instances < kInstances) {
        const auto n = random_dim(rng);
        auto T = random_tuple(rng, n, hi_for(n));
        // an infinite system only ever caps, so it gets the short cap
        if (detail::monomial_sigma_finite(T)) {
            suite.check(colength_jets(generic_combination(T, 1), deep().jet).finite(), show(T));
        } else {
            suite.check(!colength_jets(generic_combination(T, 1)).finite(), show(T));
        }
        ++suite.instances;
    }
    return suite;
}

using SuiteFn = Suite (*)();

inline const std::vector<SuiteFn>& all_suites() {
    static const std::vector<SuiteFn> s{sigma_monotone,          bezout_lower_bound,      radius_under_powers,      transitivity,
                                        closed_form_with_AM_powers, polarization_diagonal, jet_oracle_vs_staircase, prime_field_vs_rationals,
                                        finiteness_criterion};
    return s;
}

}// namespace props
