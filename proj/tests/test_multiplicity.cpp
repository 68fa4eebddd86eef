#include <gtest/gtest.h>

#include "nfilt/multiplicity.hpp"

using namespace nfilt;

namespace {

MonomialIdeal mono(std::initializer_list<ExpVec> g) { return MonomialIdeal(g.begin()->size(), std::vector<ExpVec>(g)); }

IdealTuple tuple(std::initializer_list<MonomialIdeal> items) {
    std::vector<Ideal> v;
    for (const auto& I : items) v.emplace_back(I);
    return IdealTuple(std::move(v));
}

}// namespace

TEST(Colength, Staircases) {
    EXPECT_EQ(colength_monomial(mono({{4, 0}, {1, 1}, {0, 5}})), 8);
    EXPECT_EQ(colength_monomial(mono({{3, 0}, {0, 3}})), 9);
    EXPECT_EQ(colength_monomial(mono({{3, 3}})), std::nullopt);
}

TEST(SamuelMultiplicity, Examples) {
    EXPECT_EQ(e_monomial(mono({{4, 0}, {1, 1}, {0, 5}})), 9);
    EXPECT_EQ(e_monomial(mono({{5, 0}, {2, 2}, {0, 5}})), 20);
    EXPECT_EQ(e_monomial(MonomialIdeal::max_power(3, 4)), 64);
    EXPECT_THROW(e_monomial(mono({{3, 3}})), Error);
}

TEST(MixedMultiplicity, DiagonalAndPairs) {
    auto I = mono({{4, 0}, {1, 1}, {0, 5}});
    EXPECT_EQ(mixed_e_monomial(std::vector<MonomialIdeal>{I, I}), 9);
    EXPECT_EQ(mixed_e_monomial(std::vector<MonomialIdeal>{mono({{3, 0}, {0, 9}}), mono({{9, 0}, {0, 3}})}), 9);
    // (1/2)(e(mI) - e(m) - e(I)) = (14 - 1 - 9)/2
    EXPECT_EQ(mixed_e_monomial(std::vector<MonomialIdeal>{MonomialIdeal::max_power(2, 1), I}), 2);
    EXPECT_EQ(mixed_e_monomial(std::vector<MonomialIdeal>{I, MonomialIdeal::max_power(2, 1)}), 2);
    EXPECT_THROW(mixed_e_monomial(std::vector<MonomialIdeal>{I, mono({{3, 3}})}), Error);
}

TEST(MixedMultiplicity, AgreesWithGenericOracle) {
    auto T = tuple({MonomialIdeal::max_power(2, 1), mono({{4, 0}, {1, 1}, {0, 5}})});
    auto c = colength_jets(generic_combination(T, 3));
    ASSERT_TRUE(c.finite());
    EXPECT_EQ(c.value, 2);
    auto U = tuple({mono({{3, 0}, {0, 9}}), mono({{9, 0}, {0, 3}})});
    EXPECT_EQ(colength_jets(generic_combination(U, 3)).value, 9);
}

TEST(Sigma, Primerex) {
    auto s = sigma(tuple({mono({{5, 0}, {2, 2}, {0, 5}}), mono({{3, 3}})}));
    EXPECT_EQ(s.value, 30);
    EXPECT_EQ(s.certificate, Certificate::exact_sandwich);
    EXPECT_FALSE(s.infinite);
}

TEST(Sigma, Segonex) {
    auto s = sigma(tuple({mono({{2, 2}, {8, 0}}), mono({{1, 1}, {0, 5}})}));
    EXPECT_EQ(s.value, 18);
    EXPECT_EQ(s.certificate, Certificate::exact_sandwich);
}

TEST(Sigma, PurePowers) {
    auto s = sigma(tuple({mono({{3, 0}}), mono({{0, 3}})}));
    EXPECT_EQ(s.value, 9);
    EXPECT_TRUE(s.certified());
    EXPECT_EQ(s.stabilization_r, 3);
}

TEST(Sigma, InfiniteReported) {
    auto s = sigma(tuple({mono({{1, 1}}), mono({{2, 2}})}));
    EXPECT_TRUE(s.infinite);
    EXPECT_TRUE(s.certified());
    // the line y = 0 meets neither polyhedron
    EXPECT_TRUE(sigma(tuple({mono({{2, 1}}), mono({{1, 1}, {0, 2}})})).infinite);
}

TEST(Sigma, CappedOracleIsNotInfinite) {
    auto T = tuple({mono({{0, 1}, {4, 0}}), mono({{4, 4}})});
    EXPECT_EQ(sigma(T).value, 20);
    // the cube needs jets beyond the default cap
    auto s = sigma(T.powered(3));
    EXPECT_FALSE(s.infinite);
    EXPECT_FALSE(s.certified());
    EXPECT_LE(s.value, 180);
    SigmaOptions deep;
    deep.jet.n_max = 160;
    auto d = sigma(T.powered(3), deep);
    EXPECT_EQ(d.value, 180);
    EXPECT_EQ(d.certificate, Certificate::exact_sandwich);
}

TEST(Sigma, PolynomialEntriesUseOracleAgreement) {
    Poly g(2);
    g.add_term({1, 1}, 1);
    g.add_term({0, 4}, 1);
    IdealTuple T({Ideal::principal(Poly::monomial({3, 0})), Ideal::principal(g)});
    auto s = sigma(T);
    EXPECT_EQ(s.value, 12);
    EXPECT_EQ(s.certificate, Certificate::oracle_agreement);
    EXPECT_EQ(s.seeds.size(), 2u);
}

TEST(Radius, Examples) {
    EXPECT_EQ(stabilization_radius(tuple({mono({{3, 0}}), mono({{0, 3}})}), 9), 3);
    auto T = tuple({mono({{3, 0}, {1, 1}}), mono({{0, 3}})});
    auto s = sigma(T);
    ASSERT_TRUE(s.certified());
    EXPECT_EQ(stabilization_radius(T, s.value), 6);
    auto I = mono({{4, 0}, {1, 1}, {0, 5}});
    EXPECT_EQ(stabilization_radius(tuple({I, I}), 9), 5);
}

TEST(Radius, RelativeToPowers) {
    auto T = tuple({mono({{3, 0}}), mono({{0, 3}})});
    EXPECT_EQ(rel_stabilization_radius(T, MonomialIdeal::max_power(2, 2), 9), 2);
    EXPECT_EQ(rel_stabilization_radius(T, MonomialIdeal::max_power(2, 1), 9), stabilization_radius(T, 9));
    auto F = Filtration::of(mono({{5, 0}, {2, 2}, {0, 5}}));
    auto A = A_M_ideal(F);
    EXPECT_EQ(rel_stabilization_radius(tuple({A, A}), MonomialIdeal::max_power(2, 1), 20), 5);
}

TEST(Radius, UncertifiedThrows) {
    SigmaOptions o;
    o.r_max = 2;
    EXPECT_THROW(stabilization_radius(tuple({mono({{3, 0}, {1, 1}}), mono({{0, 3}})}), 9, o), Error);
}
