#pragma once

#include <optional>
#include <vector>

#include "filtration.hpp"
#include "multiplicity.hpp"
#include "torus.hpp"

namespace nfilt {

struct FaceSystem {
    Face face;
    std::vector<Poly> parts;
    Verdict verdict = Verdict::unknown;  // yes: no zero on the torus
    std::optional<std::vector<Rational>> witness;
};

namespace detail {

inline bool on_face(const Face& D, const ExpVec& k, std::int64_t level) {
    return dot(D.normal, k) == level;
}

inline std::vector<const Facet*> facets_through(const NewtonPolyhedron& P, const Face& D) {
    std::vector<const Facet*> out;
    for (const auto& f : P.facets())
        if (std::all_of(D.vertices.begin(), D.vertices.end(), [&](const ExpVec& v) { return dot(f.normal, v) == f.ell; }))
            out.push_back(&f);
    return out;
}

inline Verdict combine(Verdict a, Verdict b) {
    if (a == Verdict::no || b == Verdict::no) return Verdict::no;
    if (a == Verdict::unknown || b == Verdict::unknown) return Verdict::unknown;
    return Verdict::yes;
}

}// namespace detail

// terms of h on its own level that lie in the cone over the face
inline Poly face_part(const Filtration& F, const Face& D, const Poly& h) {
    require(D.compact, Errc::invalid_argument, "face must be compact");
    require(h.dim() == F.dim(), Errc::dimension_mismatch, "polynomial dimension mismatch");
    Poly out(F.dim());
    auto nu = nu_poly(F, h);
    if (!nu) return out;
    auto through = detail::facets_through(F.polyhedron(), D);
    for (const auto& [k, c] : h.terms()) {
        if (F.phi(k) != *nu) continue;
        const bool in_cone = std::all_of(through.begin(), through.end(), [&](const Facet* f) {
            return F.M() * dot(f->normal, k) == *nu * f->ell;
        });
        if (in_cone) out.add_term(k, c);
    }
    return out;
}

inline std::vector<FaceSystem> face_systems(const Filtration& F, const std::vector<Poly>& g) {
    std::vector<FaceSystem> out;
    for (const auto& D : compact_faces(F.polyhedron())) {
        FaceSystem s;
        s.face = D;
        for (const auto& h : g) s.parts.push_back(face_part(F, D, h));
        auto t = torus_zero_free(s.parts, D);
        s.verdict = t.verdict;
        s.witness = t.witness;
        out.push_back(std::move(s));
    }
    return out;
}

inline Verdict face_route(const Filtration& F, const std::vector<Poly>& g, std::vector<FaceSystem>* systems = nullptr) {
    auto S = face_systems(F, g);
    Verdict v = Verdict::yes;
    for (const auto& s : S) v = detail::combine(v, s.verdict);
    if (systems) *systems = std::move(S);
    return v;
}

inline Verdict is_newton_nondegenerate_ideal(const std::vector<Poly>& J, std::vector<FaceSystem>* systems = nullptr) {
    require(!J.empty(), Errc::invalid_argument, "no generators");
    Ideal I(J[0].dim(), J);
    require(!I.is_zero(), Errc::invalid_argument, "zero ideal");
    if (I.is_monomial()) return Verdict::yes;
    auto P = newton(I);
    Verdict v = Verdict::yes;
    for (const auto& D : compact_faces(P)) {
        const std::int64_t level = ell(D.normal, P);
        FaceSystem s;
        s.face = D;
        for (const auto& g : I.gens()) {
            Poly r(g.dim());
            for (const auto& [k, c] : g.terms())
                if (detail::on_face(D, k, level)) r.add_term(k, c);
            s.parts.push_back(std::move(r));
        }
        auto t = torus_zero_free(s.parts, D);
        s.verdict = t.verdict;
        s.witness = t.witness;
        v = detail::combine(v, s.verdict);
        if (systems) systems->push_back(std::move(s));
    }
    return v;
}

struct NondegResult {
    Verdict verdict = Verdict::unknown;
    Verdict sigma_route = Verdict::unknown;
    Verdict face_route = Verdict::unknown;  // maps only
    SigmaResult sigma;
    Integer e_AM;
    Rational bound;  // r_1...r_n / M^n e(A_M)
    std::vector<std::int64_t> r;
    std::vector<FaceSystem> faces;
};

inline Integer e_AM(const Filtration& F) { return e_polyhedron(F.polyhedron()); }

inline std::vector<std::int64_t> levels(const Filtration& F, const IdealTuple& T) {
    require(T.dim() == F.dim(), Errc::dimension_mismatch, "tuple dimension mismatch");
    std::vector<std::int64_t> r;
    for (const auto& I : T.items()) r.push_back(nu_ideal(F, I));
    return r;
}

inline Rational nondegenerate_value(const Filtration& F, const std::vector<std::int64_t>& r, const Integer& eAM) {
    Rational b = Rational(eAM);
    for (auto x : r) b *= rat(static_cast<long>(x), static_cast<long>(F.M()));
    return b;
}

inline NondegResult is_gamma_nondegenerate(const Filtration& F, const IdealTuple& T, const SigmaOptions& opt = {}) {
    NondegResult res;
    res.r = levels(F, T);
    res.e_AM = e_AM(F);
    res.bound = nondegenerate_value(F, res.r, res.e_AM);
    res.sigma = sigma(T, opt);
    require(res.sigma.certified() && !res.sigma.infinite, Errc::not_certified, "sigma of the tuple is not certified");
    res.sigma_route = Rational(static_cast<long>(res.sigma.value)) == res.bound ? Verdict::yes : Verdict::no;
    res.verdict = res.sigma_route;
    if (T.is_principal()) {
        std::vector<Poly> g;
        for (const auto& I : T.items()) g.push_back(I.gens()[0]);
        res.face_route = face_route(F, g, &res.faces);
        if (res.face_route != Verdict::unknown)
            require(res.face_route == res.sigma_route, Errc::internal, "face criterion and multiplicity criterion disagree");
    }
    return res;
}

// sigma(I_1 + A_M^r, ..., I_n + A_M^r) for a nondegenerate tuple, closed form
inline Integer mixed_with_AM_powers(const Filtration& F, const NondegResult& nd, int r) {
    require(nd.verdict == Verdict::yes, Errc::not_certified, "tuple is not certified nondegenerate");
    require(r >= 1, Errc::invalid_argument, "r must be positive");
    std::vector<std::int64_t> m;
    for (auto x : nd.r) m.push_back(std::min<std::int64_t>(x, std::int64_t(r) * F.M()));
    Rational v = nondegenerate_value(F, m, nd.e_AM);
    require(is_integer(v), Errc::internal, "closed form is not an integer");
    return v.get_num();
}

inline Integer mixed_with_AM_powers(const Filtration& F, const IdealTuple& T, int r, const SigmaOptions& opt = {}) {
    return mixed_with_AM_powers(F, is_gamma_nondegenerate(F, T, opt), r);
}

struct LinkResult {
    Verdict verdict = Verdict::unknown;
    std::optional<std::size_t> index;  // slot replaced by I
    std::int64_t p = 0;                // max level
    std::int64_t q = 0;                // level of I
    std::vector<std::size_t> candidates;
    std::int64_t sigma = 0;
    bool tuple_nondegenerate = false;
    Rational required;  // q sigma / p
    bool prefilter_rejected = false;
    std::optional<std::int64_t> sigma_substituted;
    std::vector<std::uint64_t> seeds;
};

inline LinkResult is_gamma_linked(const Filtration& F, const Ideal& I, const IdealTuple& T, const SigmaOptions& opt = {}) {
    require(I.dim() == F.dim(), Errc::dimension_mismatch, "ideal dimension mismatch");
    LinkResult res;
    auto r = levels(F, T);
    res.p = *std::max_element(r.begin(), r.end());
    res.q = nu_ideal(F, I);
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] == res.p) res.candidates.push_back(i);
    auto s = sigma(T, opt);
    require(s.certified() && !s.infinite, Errc::not_certified, "sigma of the tuple is not certified");
    res.sigma = s.value;
    res.seeds = s.seeds;
    res.required = Rational(static_cast<long>(res.q)) * Rational(static_cast<long>(s.value)) / Rational(static_cast<long>(res.p));
    res.tuple_nondegenerate = Rational(static_cast<long>(s.value)) == nondegenerate_value(F, r, e_AM(F));

    bool undecided = false;
    if (res.tuple_nondegenerate) {
        if (!is_integer(res.required)) {
            res.prefilter_rejected = true;
            res.verdict = Verdict::no;
            return res;
        }
        for (auto i0 : res.candidates) {
            auto t = sigma(T.with(i0, I), opt);
            res.seeds.insert(res.seeds.end(), t.seeds.begin(), t.seeds.end());
            if (t.infinite) continue;
            if (!t.certified()) {
                undecided = true;
                continue;
            }
            if (Rational(static_cast<long>(t.value)) == res.required) {
                res.verdict = Verdict::yes;
                res.index = i0;
                res.sigma_substituted = t.value;
                return res;
            }
        }
    } else {
        for (auto i0 : res.candidates) {
            try {
                auto nd = is_gamma_nondegenerate(F, T.with(i0, I), opt);
                res.seeds.insert(res.seeds.end(), nd.sigma.seeds.begin(), nd.sigma.seeds.end());
                if (nd.verdict == Verdict::yes) {
                    res.verdict = Verdict::yes;
                    res.index = i0;
                    res.sigma_substituted = nd.sigma.value;
                    return res;
                }
            } catch (const Error& e) {
                if (e.code() != Errc::not_certified) throw;
                undecided = true;
            }
        }
    }
    res.verdict = undecided ? Verdict::unknown : Verdict::no;
    return res;
}

}// namespace nfilt
