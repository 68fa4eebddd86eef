#pragma once

#include <numeric>
#include <optional>

#include "ideal.hpp"
#include "polyhedron.hpp"

namespace nfilt {

class Filtration {
public:
    explicit Filtration(NewtonPolyhedron P) : P_(std::move(P)) {
        require(P_.convenient(), Errc::not_convenient, "filtration needs a convenient polyhedron");
        for (const auto& f : P_.facets())
            if (f.compact()) compact_.push_back(f);
        require(!compact_.empty(), Errc::not_convenient, "polyhedron has no compact facet");
        M_ = 1;
        for (const auto& f : compact_) M_ = std::lcm(M_, f.ell);
        for (const auto& f : compact_) {
            IntVec c = f.normal;
            for (auto& x : c) x *= M_ / f.ell;
            coeffs_.push_back(std::move(c));
        }
    }

    static Filtration of(const MonomialIdeal& I) {
        auto pts = I.gens();
        return Filtration(build(std::span<const ExpVec>(pts)));
    }

    static Filtration of(const Ideal& I) {
        auto pts = I.support_points();
        return Filtration(build(std::span<const ExpVec>(pts)));
    }

    const NewtonPolyhedron& polyhedron() const { return P_; }
    std::size_t dim() const { return P_.dim(); }
    std::int64_t M() const { return M_; }
    const std::vector<Facet>& weights() const { return compact_; }
    // (M/ell) v for each compact facet, the linear pieces of phi
    const std::vector<IntVec>& coefficients() const { return coeffs_; }

    std::int64_t phi(const ExpVec& k) const {
        require(k.size() == dim(), Errc::dimension_mismatch, "exponent dimension mismatch");
        std::int64_t best = dot(coeffs_[0], k);
        for (const auto& c : coeffs_) best = std::min(best, dot(c, k));
        return best;
    }

    // least phi along each axis per unit step
    std::vector<std::int64_t> axis_rates() const {
        std::vector<std::int64_t> a(dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            a[i] = coeffs_[0][i];
            for (const auto& c : coeffs_) a[i] = std::min(a[i], c[i]);
        }
        return a;
    }

private:
    NewtonPolyhedron P_;
    std::vector<Facet> compact_;
    std::vector<IntVec> coeffs_;
    std::int64_t M_ = 1;
};

// nullopt encodes +infinity
inline std::optional<std::int64_t> nu_poly(const Filtration& F, const Poly& h) {
    if (h.is_zero()) return std::nullopt;
    std::int64_t best = -1;
    for (const auto& [k, c] : h.terms()) {
        auto v = F.phi(k);
        if (best < 0 || v < best) best = v;
    }
    return best;
}

inline std::int64_t nu_ideal(const Filtration& F, const Ideal& J) {
    require(!J.is_zero(), Errc::invalid_argument, "zero ideal has no finite valuation");
    std::int64_t best = -1;
    for (const auto& g : J.gens()) {
        auto v = *nu_poly(F, g);
        if (best < 0 || v < best) best = v;
    }
    return best;
}

namespace detail {

template <class Keep>
MonomialIdeal scan_box(const Filtration& F, std::int64_t r, Keep keep) {
    const std::size_t n = F.dim();
    auto rate = F.axis_rates();
    std::vector<int> top(n);
    for (std::size_t i = 0; i < n; ++i) top[i] = static_cast<int>((r + rate[i] - 1) / rate[i]);
    std::vector<ExpVec> gens;
    ExpVec k(n);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            if (keep(k)) gens.push_back(k);
            return;
        }
        for (int a = 0; a <= top[i]; ++a) {
            k.set(i, a);
            self(self, i + 1);
        }
        k.set(i, 0);
    };
    rec(rec, 0);
    return MonomialIdeal(n, std::move(gens));
}

}// namespace detail

inline MonomialIdeal B_ideal(const Filtration& F, std::int64_t r) {
    require(r >= 0, Errc::invalid_argument, "negative level");
    if (r == 0) return MonomialIdeal::unit(F.dim());
    return detail::scan_box(F, r, [&](const ExpVec& k) {
        if (F.phi(k) < r) return false;
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0) continue;
            ExpVec d = k;
            d.set(i, k[i] - 1);
            if (F.phi(d) >= r) return false;
        }
        return true;
    });
}

// generated by the monomials on level r exactly
inline MonomialIdeal A_ideal(const Filtration& F, std::int64_t r) {
    require(r >= 0, Errc::invalid_argument, "negative level");
    if (r == 0) return MonomialIdeal::unit(F.dim());
    return detail::scan_box(F, r, [&](const ExpVec& k) { return F.phi(k) == r; });
}

inline MonomialIdeal A_M_ideal(const Filtration& F) { return B_ideal(F, F.M()); }

}// namespace nfilt
