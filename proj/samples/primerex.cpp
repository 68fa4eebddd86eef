#include <iostream>

#include "nfilt/lojasiewicz.hpp"

using namespace nfilt;

int main() {
    MonomialIdeal I(2, {{5, 0}, {2, 2}, {0, 5}});
    MonomialIdeal J(2, {{3, 3}});
    IdealTuple T(std::vector<Ideal>{I, J});
    auto m = MonomialIdeal::max_power(2, 1);

    auto F = Filtration::of(I);
    std::cout << "M = " << F.M() << "\n";
    for (const auto& v : F.polyhedron().vertices()) std::cout << "vertex " << to_string(v) << "\n";

    auto s = sigma(T);
    std::cout << "sigma = " << s.value << " (" << to_string(s.certificate) << ")\n";

    auto lv = levels(F, T);
    std::cout << "levels = " << lv[0] << ", " << lv[1] << "; nu(m) = " << nu_ideal(F, m) << "\n";

    // exponent through the linkage theorem, then by scanning powers
    auto L = loja_via_linkage(F, m, T);
    std::cout << "loja = " << L.value << " (" << to_string(L.status) << ")\n";
    auto S = loja_tuple(T, m);
    for (auto [k, r] : S.scan) std::cout << "  r(T^" << k << ") = " << r << "\n";
}
