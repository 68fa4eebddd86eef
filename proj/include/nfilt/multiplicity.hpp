#pragma once

#include <bit>
#include <map>
#include <optional>

#include "filtration.hpp"
#include "jet_oracle.hpp"

namespace nfilt {

inline NewtonPolyhedron newton(const MonomialIdeal& I) {
    require(!I.is_zero(), Errc::invalid_argument, "zero ideal has no Newton polyhedron");
    return build(std::span<const ExpVec>(I.gens()));
}

inline NewtonPolyhedron newton(const Ideal& I) {
    auto pts = I.support_points();
    require(!pts.empty(), Errc::invalid_argument, "zero ideal has no Newton polyhedron");
    return build(std::span<const ExpVec>(pts));
}

// polyhedron of I + J from the two vertex sets
inline NewtonPolyhedron hull_union(const NewtonPolyhedron& P, const NewtonPolyhedron& Q) {
    require(P.dim() == Q.dim(), Errc::dimension_mismatch, "polyhedron dimension mismatch");
    std::vector<ExpVec> pts = P.vertices();
    pts.insert(pts.end(), Q.vertices().begin(), Q.vertices().end());
    return build(std::span<const ExpVec>(pts));
}

// polyhedron of m^r
inline NewtonPolyhedron simplex(std::size_t n, int r) {
    std::vector<ExpVec> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(ExpVec::unit(n, i, r));
    return build(std::span<const ExpVec>(pts));
}

inline std::optional<std::int64_t> colength_monomial(const MonomialIdeal& I) {
    if (!I.finite_colength()) return std::nullopt;
    auto a = I.axis_powers();
    const std::size_t n = I.dim();
    std::int64_t count = 0;
    ExpVec k(n);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            count += !I.contains(k);
            return;
        }
        for (int x = 0; x < a[i]; ++x) {
            k.set(i, x);
            self(self, i + 1);
        }
        k.set(i, 0);
    };
    rec(rec, 0);
    return count;
}

inline Integer e_polyhedron(const NewtonPolyhedron& P) {
    Rational v = covolume(P) * factorial(static_cast<unsigned>(P.dim()));
    require(is_integer(v), Errc::internal, "multiplicity is not an integer");
    return v.get_num();
}

inline Integer e_monomial(const MonomialIdeal& I) {
    require(I.finite_colength(), Errc::infinite_colength, "multiplicity needs finite colength");
    return e_polyhedron(newton(I));
}

// mixed volume by polarization over the distinct polyhedra
inline Integer mixed_e_polyhedra(const std::vector<NewtonPolyhedron>& Ps) {
    const std::size_t n = Ps.size();
    require(n >= 1, Errc::invalid_argument, "empty tuple");
    for (const auto& P : Ps) {
        require(P.dim() == n, Errc::dimension_mismatch, "tuple length must equal the dimension");
        require(P.convenient(), Errc::infinite_colength, "mixed multiplicity needs finite colength entries");
    }
    std::vector<NewtonPolyhedron> distinct;
    std::vector<std::size_t> id(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto it = std::find(distinct.begin(), distinct.end(), Ps[i]);
        id[i] = static_cast<std::size_t>(it - distinct.begin());
        if (it == distinct.end()) distinct.push_back(Ps[i]);
    }
    std::map<std::vector<std::size_t>, Rational> covol;
    std::map<std::vector<std::size_t>, NewtonPolyhedron> sums;
    auto sum_of = [&](auto&& self, const std::vector<std::size_t>& key) -> NewtonPolyhedron {
        if (key.size() == 1) return distinct[key[0]];
        auto it = sums.find(key);
        if (it != sums.end()) return it->second;
        std::vector<std::size_t> head(key.begin(), key.end() - 1);
        auto P = minkowski_sum(self(self, head), distinct[key.back()]);
        sums.emplace(key, P);
        return P;
    };
    Rational total = 0;
    for (unsigned S = 1; S < (1u << n); ++S) {
        std::vector<std::size_t> key;
        for (std::size_t i = 0; i < n; ++i)
            if (S >> i & 1) key.push_back(id[i]);
        std::sort(key.begin(), key.end());
        auto it = covol.find(key);
        if (it == covol.end()) it = covol.emplace(key, covolume(sum_of(sum_of, key))).first;
        const int sign = (n - key.size()) % 2 ? -1 : 1;
        total += sign * it->second;
    }
    require(is_integer(total), Errc::internal, "mixed multiplicity is not an integer");
    return total.get_num();
}

inline Integer mixed_e_monomial(const std::vector<MonomialIdeal>& T) {
    std::vector<NewtonPolyhedron> Ps;
    for (const auto& I : T) {
        require(I.finite_colength(), Errc::infinite_colength, "mixed multiplicity needs finite colength entries");
        Ps.push_back(newton(I));
    }
    return mixed_e_polyhedra(Ps);
}

inline Integer mixed_e_monomial(const IdealTuple& T) {
    std::vector<MonomialIdeal> v;
    for (const auto& I : T.items()) v.push_back(I.monomial());
    return mixed_e_monomial(v);
}

enum class Certificate { exact_sandwich, exact_polyhedral, oracle_agreement, lower_bound_only };

inline std::string_view to_string(Certificate c) {
    switch (c) {
        case Certificate::exact_sandwich: return "exact-sandwich";
        case Certificate::exact_polyhedral: return "exact-polyhedral";
        case Certificate::oracle_agreement: return "oracle-agreement";
        case Certificate::lower_bound_only: return "lower-bound-only";
    }
    return "lower-bound-only";
}

struct SigmaOptions {
    int r_max = 64;
    std::uint64_t seed = 1;
    std::int64_t range = 10000;
    JetOptions jet;
};

struct SigmaResult {
    bool infinite = false;
    std::int64_t value = 0;  // the lower bound when not exact
    std::optional<std::int64_t> upper;
    Certificate certificate = Certificate::lower_bound_only;
    std::optional<int> stabilization_r;
    std::vector<std::uint64_t> seeds;

    bool certified() const { return certificate != Certificate::lower_bound_only; }
};

namespace detail {

// least r in [1, limit] with pred(r), for pred monotone in r
template <class Pred>
std::optional<int> first_true(Pred pred, int limit, int start = 1) {
    int lo = start - 1, hi = std::max(start, 1);
    while (hi <= limit && !pred(hi)) {
        lo = hi;
        hi *= 2;
    }
    if (hi > limit) {
        if (lo >= limit || !pred(limit)) return std::nullopt;
        hi = limit;
    }
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        (pred(mid) ? hi : lo) = mid;
    }
    return hi;
}

inline std::vector<NewtonPolyhedron> tuple_polyhedra(const IdealTuple& T) {
    std::vector<NewtonPolyhedron> Ps;
    for (const auto& I : T.items()) Ps.push_back(newton(I.monomial()));
    return Ps;
}

inline Integer mixed_plus(const std::vector<NewtonPolyhedron>& Ps, const NewtonPolyhedron& Jr) {
    std::vector<NewtonPolyhedron> Qs;
    for (const auto& P : Ps) Qs.push_back(hull_union(P, Jr));
    return mixed_e_polyhedra(Qs);
}

// monomial tuples: finite iff every coordinate subspace L meets at least dim L of the polyhedra
inline bool monomial_sigma_finite(const IdealTuple& T) {
    const std::size_t n = T.dim();
    for (unsigned S = 1; S < (1u << n); ++S) {
        int meets = 0;
        for (const auto& I : T.items()) {
            const auto& gens = I.gens();
            meets += std::any_of(gens.begin(), gens.end(), [&](const Poly& g) {
                const auto& k = g.terms().begin()->first;
                for (std::size_t i = 0; i < n; ++i)
                    if (!(S >> i & 1) && k[i] > 0) return false;
                return true;
            });
        }
        if (meets < std::popcount(S)) return false;
    }
    return true;
}

inline ColengthResult oracle(const IdealTuple& T, std::uint64_t seed, const SigmaOptions& opt) {
    return colength_jets(generic_combination(T, seed, opt.range), opt.jet);
}

}// namespace detail

inline SigmaResult sigma(const IdealTuple& T, const SigmaOptions& opt = {}) {
    for (const auto& I : T.items()) require(I.is_proper(), Errc::invalid_argument, "sigma needs proper ideals");
    const std::size_t n = T.dim();
    SigmaResult res;
    if (T.is_monomial()) {
        auto Ps = detail::tuple_polyhedra(T);
        const bool finite = std::all_of(Ps.begin(), Ps.end(), [](const NewtonPolyhedron& P) { return P.convenient(); });
        if (finite) {
            res.value = to_int64(mixed_e_polyhedra(Ps));
            res.certificate = Certificate::exact_polyhedral;
            int top = 1;
            for (const auto& P : Ps)
                for (const auto& v : P.vertices()) top = std::max<int>(top, static_cast<int>(v.total()));
            res.stabilization_r = detail::first_true(
                [&](int r) { return detail::mixed_plus(Ps, simplex(n, r)) == res.value; }, top);
            return res;
        }
        if (!detail::monomial_sigma_finite(T)) {
            res.infinite = true;
            res.certificate = Certificate::exact_polyhedral;
            return res;
        }
        std::optional<std::int64_t> best;
        for (int attempt = 0; attempt < 2; ++attempt) {
            const std::uint64_t s = opt.seed + static_cast<std::uint64_t>(attempt);
            res.seeds.push_back(s);
            auto U = detail::oracle(T, s, opt);
            if (U.status == ColengthResult::Status::infinite) {
                res.infinite = true;
                res.value = to_int64(detail::mixed_plus(Ps, simplex(n, opt.r_max)));
                return res;
            }
            if (!U.finite()) continue;
            if (best && U.value >= *best) continue;
            best = U.value;
            auto r = detail::first_true(
                [&](int rr) {
                    auto L = to_int64(detail::mixed_plus(Ps, simplex(n, rr)));
                    require(L <= *best, Errc::internal, "lower bound exceeds generic multiplicity");
                    return L == *best;
                },
                opt.r_max);
            if (r) {
                res.value = *best;
                res.certificate = Certificate::exact_sandwich;
                res.stabilization_r = r;
                return res;
            }
        }
        // a capped oracle says nothing about finiteness
        res.value = to_int64(detail::mixed_plus(Ps, simplex(n, opt.r_max)));
        res.upper = best;
        return res;
    }
    // oracle only: two seeds must agree on the least value seen
    std::map<std::int64_t, int> seen;
    int infinite = 0;
    for (int attempt = 0; attempt < 3; ++attempt) {
        const std::uint64_t s = opt.seed + static_cast<std::uint64_t>(attempt);
        res.seeds.push_back(s);
        auto U = detail::oracle(T, s, opt);
        if (U.status == ColengthResult::Status::infinite) ++infinite;
        if (U.finite()) ++seen[U.value];
        if (infinite >= 2) {
            res.infinite = true;
            return res;
        }
        if (!seen.empty() && seen.begin()->second >= 2) {
            res.value = seen.begin()->first;
            res.certificate = Certificate::oracle_agreement;
            return res;
        }
    }
    if (!seen.empty()) res.upper = seen.begin()->first;
    return res;
}

// certified sigma(T + J^r); throws when no certificate is available
inline std::int64_t sigma_plus(const IdealTuple& T, const Ideal& J, int r, const SigmaOptions& opt = {}) {
    if (T.is_monomial() && J.is_monomial()) {
        auto Jr = scale(newton(J.monomial()), r);
        std::vector<NewtonPolyhedron> Qs;
        bool finite = true;
        for (const auto& I : T.items()) {
            Qs.push_back(hull_union(newton(I.monomial()), Jr));
            finite &= Qs.back().convenient();
        }
        if (finite) return to_int64(mixed_e_polyhedra(Qs));
    }
    auto s = sigma(T.plus(power(J, r)), opt);
    require(s.certified() && !s.infinite, Errc::not_certified, "sigma of the enlarged tuple is not certified");
    return s.value;
}

inline int rel_stabilization_radius(const IdealTuple& T, const Ideal& J, std::int64_t sigma_value, const SigmaOptions& opt = {}) {
    require(!J.is_zero() && J.is_proper(), Errc::invalid_argument, "reference ideal must be proper and nonzero");
    auto r = detail::first_true([&](int rr) { return sigma_plus(T, J, rr, opt) == sigma_value; }, opt.r_max);
    require(r.has_value(), Errc::not_certified, "stabilization radius exceeds r_max");
    return *r;
}

inline int stabilization_radius(const IdealTuple& T, std::int64_t sigma_value, const SigmaOptions& opt = {}) {
    return rel_stabilization_radius(T, MonomialIdeal::max_power(T.dim(), 1), sigma_value, opt);
}

}// namespace nfilt
