#pragma once

#include <optional>
#include <vector>

#include "nondegeneracy.hpp"

namespace nfilt {

enum class LojaStatus { exact_linked, exact_polyhedral, exact_scan_matched_bound, upper_bound_only };

inline std::string_view to_string(LojaStatus s) {
    switch (s) {
        case LojaStatus::exact_linked: return "exact-linked";
        case LojaStatus::exact_polyhedral: return "exact-polyhedral";
        case LojaStatus::exact_scan_matched_bound: return "exact-scan-matched-bound";
        case LojaStatus::upper_bound_only: return "upper-bound-only";
    }
    return "upper-bound-only";
}

struct LojaResult {
    Rational value;
    LojaStatus status = LojaStatus::upper_bound_only;
    std::optional<int> witness_s;
    std::optional<Rational> bound;  // max r_i / nu(I)
    std::optional<Rational> lower;  // best certified lower bound
    std::vector<std::pair<int, std::int64_t>> scan;  // (s, r_J(T^s))
    std::vector<std::uint64_t> seeds;

    bool exact() const { return status != LojaStatus::upper_bound_only; }
};

struct LojaOptions {
    int s_max = 12;
    SigmaOptions sigma;
    const Filtration* filtration = nullptr;  // enables the linkage certificate and s = multiples of M
};

// min p/q with J^p in the integral closure of I^q
inline Rational loja_relative_monomial(const MonomialIdeal& I, const MonomialIdeal& J) {
    require(I.finite_colength(), Errc::infinite_colength, "I must have finite colength");
    require(!J.is_zero() && !J.contains(ExpVec(J.dim())), Errc::invalid_argument, "J must be proper and nonzero");
    require(I.dim() == J.dim(), Errc::dimension_mismatch, "dimension mismatch");
    auto P = newton(I);
    auto Q = newton(J);
    Rational best = 0;
    for (const auto& u : Q.vertices()) best = std::max(best, dilation_factor(u, P));
    return best;
}

namespace detail {

inline Rational ratio(std::int64_t a, std::int64_t b) { return rat(static_cast<long>(a), static_cast<long>(b)); }

// sigma(T)/sigma(T with J in slot i) bounds every r_J(T^s)/s from below
inline std::optional<Rational> sigma_ratio_bound(const IdealTuple& T, const Ideal& J, std::int64_t sigma_value,
                                                 const SigmaOptions& opt) {
    std::optional<Rational> best;
    for (std::size_t i = 0; i < T.dim(); ++i) {
        auto s = sigma(T.with(i, J), opt);
        if (!s.certified() || s.infinite || s.value == 0) continue;
        Rational b = ratio(sigma_value, s.value);
        if (!best || b > *best) best = b;
    }
    return best;
}

inline std::optional<std::int64_t> order_on_axis_arc(const std::vector<ExpVec>& pts, std::size_t axis) {
    std::optional<std::int64_t> o;
    for (const auto& k : pts) {
        bool on = true;
        for (std::size_t j = 0; j < k.size(); ++j)
            if (j != axis && k[j] > 0) on = false;
        if (on && (!o || k[axis] < *o)) o = k[axis];
    }
    return o;
}

// plane curves: along a branch of the zero set of component i the other component has order
// at least l(w, its support), while J has order exactly l(w, J)
inline std::optional<Rational> arc_bound(const std::vector<std::vector<ExpVec>>& supports, const MonomialIdeal& J) {
    if (supports.size() != 2) return std::nullopt;
    std::optional<Rational> best;
    auto offer = [&](Rational b) {
        if (!best || b > *best) best = b;
    };
    const auto& Jg = J.gens();
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& own = supports[i];
        const auto& other = supports[1 - i];
        auto P = build(std::span<const ExpVec>(own));
        for (const auto& f : P.facets()) {
            if (!f.compact()) continue;
            auto lo = [&](const std::vector<ExpVec>& pts) {
                std::int64_t m = dot(f.normal, pts[0]);
                for (const auto& k : pts) m = std::min(m, dot(f.normal, k));
                return m;
            };
            offer(ratio(lo(other), lo(Jg)));
        }
        // a coordinate axis lies in the zero set when every term is divisible by that variable
        for (std::size_t v = 0; v < 2; ++v) {
            if (!std::all_of(own.begin(), own.end(), [&](const ExpVec& k) { return k[v] > 0; })) continue;
            const std::size_t axis = 1 - v;
            auto og = order_on_axis_arc(other, axis);
            auto oj = order_on_axis_arc(Jg, axis);
            if (og && oj) offer(ratio(*og, *oj));
        }
    }
    return best;
}

inline std::vector<std::vector<ExpVec>> generic_supports(const IdealTuple& T) {
    std::vector<std::vector<ExpVec>> out;
    for (const auto& I : T.items()) out.push_back(I.support_points());
    return out;
}

class RadiusProbe {
public:
    RadiusProbe(const IdealTuple& T, const Ideal& J, std::int64_t sigma_value, const SigmaOptions& opt)
        : T_(T), J_(J), sigma_(sigma_value), opt_(opt) {
        if (T.is_monomial() && J.is_monomial()) {
            JP_ = newton(J.monomial());
            bool ok = true;
            for (const auto& I : T.items()) {
                Ps_.push_back(newton(I.monomial()));
                ok &= hull_union(Ps_.back(), *JP_).convenient();
            }
            if (!ok) JP_.reset();
        }
    }

    // r_J(T^s), searched from the lower bound `start` up to `limit`
    std::optional<int> radius(int s, int start, int limit) {
        std::int64_t target = sigma_;
        for (std::size_t i = 0; i < T_.dim(); ++i) target *= s;
        if (JP_) {
            std::vector<NewtonPolyhedron> Qs;
            for (const auto& P : Ps_) Qs.push_back(scale(P, s));
            return first_true(
                [&](int r) {
                    auto Jr = scale(*JP_, r);
                    std::vector<NewtonPolyhedron> U;
                    for (const auto& Q : Qs) U.push_back(hull_union(Q, Jr));
                    return to_int64(mixed_e_polyhedra(U)) == target;
                },
                limit, start);
        }
        auto Ts = T_.powered(s);
        return first_true([&](int r) { return sigma_plus(Ts, J_, r, opt_) == target; }, limit, start);
    }

private:
    IdealTuple T_;
    Ideal J_;
    std::int64_t sigma_;
    SigmaOptions opt_;
    std::vector<NewtonPolyhedron> Ps_;
    std::optional<NewtonPolyhedron> JP_;
};

inline void take_lower(LojaResult& res, const std::optional<Rational>& b) {
    if (b && (!res.lower || *b > *res.lower)) res.lower = b;
}

}// namespace detail

inline LojaResult loja_via_linkage(const Filtration& F, const Ideal& I, const IdealTuple& T, const SigmaOptions& opt = {});

inline LojaResult loja_tuple(const IdealTuple& T, const Ideal& J, const LojaOptions& opt = {}) {
    require(opt.s_max >= 1, Errc::invalid_argument, "s_max must be at least 1");
    require(J.dim() == T.dim(), Errc::dimension_mismatch, "reference ideal dimension mismatch");
    require(!J.is_zero() && J.is_proper(), Errc::invalid_argument, "reference ideal must be proper and nonzero");
    auto sg = sigma(T, opt.sigma);
    require(sg.certified() && !sg.infinite, Errc::not_certified, "sigma of the tuple is not certified");
    LojaResult res;
    res.seeds = sg.seeds;

    std::optional<Rational> polyhedral;
    const bool diagonal = std::all_of(T.items().begin(), T.items().end(), [&](const Ideal& I) { return I == T.items()[0]; });
    if (diagonal && T.is_monomial() && J.is_monomial() && T.items()[0].monomial().finite_colength())
        polyhedral = loja_relative_monomial(T.items()[0].monomial(), J.monomial());
    detail::take_lower(res, polyhedral);
    detail::take_lower(res, detail::sigma_ratio_bound(T, J, sg.value, opt.sigma));
    if (J.is_monomial() && T.dim() == 2) detail::take_lower(res, detail::arc_bound(detail::generic_supports(T), J.monomial()));

    std::optional<LojaResult> linked;
    if (opt.filtration) {
        try {
            auto L = loja_via_linkage(*opt.filtration, J, T, opt.sigma);
            res.bound = L.bound;
            if (L.status == LojaStatus::exact_linked) {
                linked = L;
                detail::take_lower(res, L.value);
            }
        } catch (const Error& e) {
            if (e.code() != Errc::not_certified) throw;
        }
    }

    std::vector<int> svals;
    for (int s = 1; s <= opt.s_max; ++s) svals.push_back(s);
    if (opt.filtration)
        for (int a = 1; a <= 2; ++a) {
            auto s = static_cast<int>(opt.filtration->M() * a);
            if (s > opt.s_max && s <= 8 * opt.s_max) svals.push_back(s);
        }

    detail::RadiusProbe probe(T, J, sg.value, opt.sigma);
    std::optional<Rational> best;
    std::optional<std::int64_t> r1;
    for (int s : svals) {
        int start = 1;
        if (res.lower) start = std::max<int>(1, static_cast<int>(to_int64(ceil_of(*res.lower * s))));
        int limit = r1 ? static_cast<int>(*r1 * s) : opt.sigma.r_max * s;
        if (best) limit = std::min<int>(limit, static_cast<int>(to_int64(floor_of(*best * s))));
        if (limit < start) continue;  // cannot beat the current minimum
        std::optional<int> r;
        try {
            r = probe.radius(s, start, limit);
        } catch (const Error& e) {
            if (e.code() != Errc::not_certified) throw;
            continue;
        }
        if (!r) continue;
        res.scan.emplace_back(s, *r);
        if (s == 1) r1 = *r;
        Rational v = detail::ratio(*r, s);
        if (!best || v < *best) {
            best = v;
            res.witness_s = s;
        }
        if (res.lower && *best == *res.lower) break;
    }
    require(best.has_value(), Errc::not_certified, "no scan value could be certified");
    res.value = *best;
    if (polyhedral && *polyhedral == res.value) res.status = LojaStatus::exact_polyhedral;
    else if (linked && linked->value == res.value) res.status = LojaStatus::exact_linked;
    else if (res.lower && *res.lower == res.value) res.status = LojaStatus::exact_scan_matched_bound;
    return res;
}

inline LojaResult loja_via_linkage(const Filtration& F, const Ideal& I, const IdealTuple& T, const SigmaOptions& opt) {
    auto nd = is_gamma_nondegenerate(F, T, opt);
    require(nd.verdict == Verdict::yes, Errc::not_certified, "tuple is not certified nondegenerate");
    LojaResult res;
    res.bound = detail::ratio(*std::max_element(nd.r.begin(), nd.r.end()), nu_ideal(F, I));
    res.value = *res.bound;
    auto L = is_gamma_linked(F, I, T, opt);
    res.seeds = L.seeds;
    if (L.verdict == Verdict::yes) res.status = LojaStatus::exact_linked;
    return res;
}

// exponent of the map g relative to J
inline LojaResult loja_map(const std::vector<Poly>& g, const Ideal& J, const LojaOptions& opt = {}) {
    require(!g.empty(), Errc::invalid_argument, "empty map");
    const std::size_t n = g[0].dim();
    require(g.size() == n, Errc::dimension_mismatch, "map must have as many components as variables");
    for (const auto& h : g) require(!h.is_zero() && h.coeff(ExpVec(n)) == 0, Errc::invalid_argument, "components must vanish at the origin");
    auto c = colength_jets(g, opt.sigma.jet);
    require(c.status != ColengthResult::Status::infinite, Errc::infinite_colength, "the zero of the map is not isolated");

    if (J.is_monomial()) {
        Ideal I(n, g);
        if (I.is_monomial() && I.monomial().finite_colength()) {
            LojaResult res;
            res.value = loja_relative_monomial(I.monomial(), J.monomial());
            res.status = LojaStatus::exact_polyhedral;
            return res;
        }
        const bool is_m = J.monomial() == MonomialIdeal::max_power(n, 1);
        auto S = I.support_ideal();
        if (is_m && S.finite_colength() && is_newton_nondegenerate_ideal(g) == Verdict::yes) {
            LojaResult res;
            auto a = S.axis_powers();
            res.value = *std::max_element(a.begin(), a.end());
            res.status = LojaStatus::exact_polyhedral;
            return res;
        }
    }
    return loja_tuple(IdealTuple::of_map(g), J, opt);
}

}// namespace nfilt
