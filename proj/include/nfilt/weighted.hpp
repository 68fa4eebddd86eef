#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "lojasiewicz.hpp"

namespace nfilt {

class Weights {
public:
    explicit Weights(std::vector<int> w) : w_(std::move(w)) {
        require(!w_.empty() && w_.size() <= kMaxDim, Errc::invalid_argument, "weight vector length must be 1..6");
        int g = 0;
        for (int x : w_) {
            require(x >= 1, Errc::invalid_argument, "weights must be positive");
            g = std::gcd(g, x);
        }
        require(g == 1, Errc::invalid_argument, "weight vector must be primitive");
        w0_ = *std::min_element(w_.begin(), w_.end());
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] == w0_) argmin_.push_back(i);
    }

    std::size_t dim() const { return w_.size(); }
    const std::vector<int>& values() const { return w_; }
    int operator[](std::size_t i) const { return w_[i]; }
    int w0() const { return w0_; }
    const std::vector<std::size_t>& argmin() const { return argmin_; }  // A_w

    std::int64_t product() const {
        std::int64_t p = 1;
        for (int x : w_) p *= x;
        return p;
    }

    std::int64_t degree(const ExpVec& k) const {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) s += std::int64_t(w_[i]) * k[i];
        return s;
    }

    // <x_i : i in A_w>
    MonomialIdeal m_w() const {
        std::vector<ExpVec> g;
        for (auto i : argmin_) g.push_back(ExpVec::unit(dim(), i));
        return MonomialIdeal(dim(), std::move(g));
    }

private:
    std::vector<int> w_;
    int w0_ = 1;
    std::vector<std::size_t> argmin_;
};

inline NewtonPolyhedron w_polyhedron(const Weights& w) {
    const std::int64_t P = w.product();
    std::vector<ExpVec> pts;
    for (std::size_t i = 0; i < w.dim(); ++i) {
        require(P / w[i] <= std::numeric_limits<std::int32_t>::max(), Errc::invalid_argument, "weights too large");
        pts.push_back(ExpVec::unit(w.dim(), i, static_cast<int>(P / w[i])));
    }
    return build(std::span<const ExpVec>(pts));
}

// phi of this filtration is exactly <w, k>
inline Filtration w_filtration(const Weights& w) { return Filtration(w_polyhedron(w)); }

inline std::optional<std::int64_t> d_w(const Poly& h, const Weights& w) {
    require(h.dim() == w.dim(), Errc::dimension_mismatch, "weight dimension mismatch");
    std::optional<std::int64_t> d;
    for (const auto& [k, c] : h.terms()) {
        auto v = w.degree(k);
        if (!d || v < *d) d = v;
    }
    return d;
}

inline std::int64_t d_w(const Ideal& J, const Weights& w) {
    require(!J.is_zero(), Errc::invalid_argument, "zero ideal has no weighted degree");
    std::int64_t d = *d_w(J.gens()[0], w);
    for (const auto& g : J.gens()) d = std::min(d, *d_w(g, w));
    return d;
}

inline Poly p_w(const Poly& h, const Weights& w) {
    Poly out(h.dim());
    auto d = d_w(h, w);
    if (!d) return out;
    for (const auto& [k, c] : h.terms())
        if (w.degree(k) == *d) out.add_term(k, c);
    return out;
}

inline std::vector<Poly> p_w(const std::vector<Poly>& g, const Weights& w) {
    std::vector<Poly> out;
    for (const auto& h : g) out.push_back(p_w(h, w));
    return out;
}

struct PrincipalIdeal {
    Ideal ideal;
    bool generator_basis_caveat = false;  // may be smaller than the ideal of all initial forms
};

inline PrincipalIdeal p_w_ideal(const Ideal& J, const Weights& w) {
    const auto d = d_w(J, w);
    std::vector<Poly> g;
    for (const auto& h : J.gens())
        if (*d_w(h, w) == d) g.push_back(p_w(h, w));
    return {Ideal(J.dim(), std::move(g)), !J.is_monomial() && J.gens().size() > 1};
}

inline IdealTuple p_w(const IdealTuple& T, const Weights& w, bool* caveat = nullptr) {
    std::vector<Ideal> v;
    for (const auto& I : T.items()) {
        auto P = p_w_ideal(I, w);
        if (caveat) *caveat |= P.generator_basis_caveat;
        v.push_back(std::move(P.ideal));
    }
    return IdealTuple(std::move(v));
}

namespace detail {

inline JetOptions weighted_jets(const Weights& w, JetOptions opt) {
    opt.weights = w.values();
    return opt;
}

}// namespace detail

struct SemiWH {
    Verdict verdict = Verdict::unknown;
    std::int64_t d = 0;
    std::optional<std::int64_t> milnor;  // of the principal part
};

inline SemiWH is_semi_weighted_homogeneous(const Poly& f, const Weights& w, const JetOptions& opt = {}) {
    require(f.dim() == w.dim(), Errc::dimension_mismatch, "weight dimension mismatch");
    require(f.coeff(ExpVec(f.dim())) == 0, Errc::invalid_argument, "f must vanish at the origin");
    require(!f.is_zero(), Errc::invalid_argument, "f is zero");
    SemiWH res;
    res.d = *d_w(f, w);
    auto iso = isolated_singularity(p_w(f, w), detail::weighted_jets(w, opt));
    res.verdict = iso.verdict;
    res.milnor = iso.milnor;
    return res;
}

// e(g) = r_1...r_n / (w_1...w_n), checked against the jet oracle
inline Integer semiwh_multiplicity(const std::vector<Poly>& g, const Weights& w, const JetOptions& opt = {}) {
    require(g.size() == w.dim(), Errc::dimension_mismatch, "map length must equal the dimension");
    auto jo = detail::weighted_jets(w, opt);
    auto principal = colength_jets(p_w(g, w), jo);
    require(principal.finite(), Errc::not_certified, "principal part is not certified to have finite colength");
    Rational v = 1;
    for (const auto& h : g) {
        auto d = d_w(h, w);
        require(d.has_value(), Errc::invalid_argument, "zero component");
        v *= Rational(static_cast<long>(*d));
    }
    v /= Rational(static_cast<long>(w.product()));
    require(is_integer(v), Errc::internal, "weighted Bezout value is not an integer");
    require(principal.value == to_int64(v.get_num()), Errc::internal, "principal part colength disagrees with weighted Bezout");
    auto full = colength_jets(g, jo);
    require(full.finite() && full.value == principal.value, Errc::internal, "colength of the map disagrees with its principal part");
    return v.get_num();
}

struct WMatching {
    std::vector<std::size_t> tau;
    std::size_t i0 = 0;
};

namespace detail {

// sufficient membership test for a pure power in a polynomial ideal
inline bool has_pure_power(const Ideal& J, std::size_t i, std::int64_t e) {
    for (const auto& g : J.gens()) {
        if (g.terms().size() != 1) continue;
        const auto& k = g.terms().begin()->first;
        bool ok = k[i] <= e;
        for (std::size_t j = 0; j < k.size(); ++j)
            if (j != i && k[j] != 0) ok = false;
        if (ok) return true;
    }
    return false;
}

}// namespace detail

inline std::optional<WMatching> admits_w_matching(const IdealTuple& T, const Weights& w) {
    require(T.dim() == w.dim(), Errc::dimension_mismatch, "weight dimension mismatch");
    const std::size_t n = T.dim();
    std::vector<std::int64_t> r;
    for (const auto& I : T.items()) r.push_back(d_w(I, w));
    const std::int64_t p = *std::max_element(r.begin(), r.end());
    std::vector<std::size_t> tau(n);
    std::iota(tau.begin(), tau.end(), 0);
    do {
        for (auto i0 : w.argmin()) {
            if (r[tau[i0]] != p) continue;
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) {
                if (i == i0) continue;
                const auto rt = r[tau[i]];
                ok = rt % w[i] == 0 && detail::has_pure_power(T[tau[i]], i, rt / w[i]);
            }
            if (ok) return WMatching{tau, i0};
        }
    } while (std::next_permutation(tau.begin(), tau.end()));
    return std::nullopt;
}

struct WLinkResult {
    Verdict verdict = Verdict::unknown;
    std::optional<std::size_t> index;  // slot replaced by m_w
    std::optional<WMatching> matching;
    bool generator_basis_caveat = false;
    std::vector<std::uint64_t> seeds;
};

inline WLinkResult is_w_linked(const IdealTuple& T, const Weights& w, const SigmaOptions& opt = {}) {
    require(T.dim() == w.dim(), Errc::dimension_mismatch, "weight dimension mismatch");
    WLinkResult res;
    res.matching = admits_w_matching(T, w);
    if (res.matching) {
        res.verdict = Verdict::yes;
        res.index = res.matching->tau[res.matching->i0];
        return res;
    }
    std::vector<std::int64_t> r;
    for (const auto& I : T.items()) r.push_back(d_w(I, w));
    const std::int64_t p = *std::max_element(r.begin(), r.end());
    auto P = p_w(T, w, &res.generator_basis_caveat);
    auto jo = detail::weighted_jets(w, opt.jet);
    bool undecided = false;
    for (std::size_t i0 = 0; i0 < T.dim(); ++i0) {
        if (r[i0] != p) continue;
        auto S = P.with(i0, w.m_w());
        bool decided = false;
        for (int attempt = 0; attempt < 2 && !decided; ++attempt) {
            const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(attempt);
            res.seeds.push_back(seed);
            auto c = colength_jets(generic_combination(S, seed, opt.range), jo);
            if (c.finite()) {
                res.verdict = Verdict::yes;
                res.index = i0;
                return res;
            }
            decided = c.status == ColengthResult::Status::infinite;
        }
        undecided |= !decided;
    }
    res.verdict = undecided ? Verdict::unknown : Verdict::no;
    return res;
}

inline WLinkResult is_w_linked(const std::vector<Poly>& g, const Weights& w, const SigmaOptions& opt = {}) {
    return is_w_linked(IdealTuple::of_map(g), w, opt);
}

struct GradientLoja {
    LojaResult loja;
    SemiWH semi;
    bool sufficient_hypothesis = false;
    std::optional<std::size_t> i0;
    Verdict w_linked = Verdict::unknown;
    std::optional<Integer> c0_determinacy;  // [L] + 1
};

inline GradientLoja gradient_loja(const Poly& f, const Weights& w, const SigmaOptions& opt = {}) {
    GradientLoja res;
    res.semi = is_semi_weighted_homogeneous(f, w, opt.jet);
    require(res.semi.verdict != Verdict::no, Errc::invalid_argument, "f is not semi-weighted homogeneous");
    require(res.semi.verdict == Verdict::yes, Errc::not_certified, "semi-weighted homogeneity is not certified");
    const std::int64_t d = res.semi.d;
    const Rational value = detail::ratio(d - w.w0(), w.w0());
    res.loja.value = value;
    res.loja.bound = value;
    const auto mw = w.m_w();
    for (auto i : w.argmin()) {
        auto df = partial_derivative(f, i);
        const bool inside = std::all_of(df.terms().begin(), df.terms().end(), [&](const auto& t) { return mw.contains(t.first); });
        if (inside) {
            res.sufficient_hypothesis = true;
            res.i0 = i;
            break;
        }
    }
    if (res.sufficient_hypothesis) {
        res.loja.status = LojaStatus::exact_linked;
        res.w_linked = Verdict::yes;
    } else {
        auto L = is_w_linked(gradient(f), w, opt);
        res.w_linked = L.verdict;
        res.loja.seeds = L.seeds;
        if (L.verdict == Verdict::yes) res.loja.status = LojaStatus::exact_linked;
    }
    if (res.loja.exact()) res.c0_determinacy = floor_of(value) + 1;
    return res;
}

struct KopValue {
    Rational value;
    Rational first;   // (d - w0) / w0
    Rational second;  // prod (d / w_i - 1)
    bool first_active = true;
    bool remark_condition = false;  // d >= 2 w_i for all i
};

inline KopValue kop_formula(const std::vector<int>& w, std::int64_t d) {
    require(w.size() == 3, Errc::invalid_argument, "the formula is for three variables");
    for (int x : w) require(x >= 1, Errc::invalid_argument, "weights must be positive");
    require(d >= *std::max_element(w.begin(), w.end()), Errc::invalid_argument, "degree below the largest weight");
    KopValue k;
    const int w0 = *std::min_element(w.begin(), w.end());
    k.first = detail::ratio(d - w0, w0);
    k.second = 1;
    k.remark_condition = true;
    for (int x : w) {
        k.second *= detail::ratio(d - x, x);
        k.remark_condition &= d >= 2 * std::int64_t(x);
    }
    k.first_active = k.first <= k.second;
    k.value = k.first_active ? k.first : k.second;
    return k;
}

// I(h2) inside the closure of m I(h1), tested on Newton polyhedra of supports
inline Verdict pIg_check(const std::vector<Poly>& h1, const std::vector<Poly>& h2, const Weights& w) {
    require(!h1.empty() && h1.size() == h2.size(), Errc::dimension_mismatch, "maps must have equal length");
    for (const auto& h : h1) {
        require(h.dim() == w.dim(), Errc::dimension_mismatch, "weight dimension mismatch");
        if (!h.is_zero() && p_w(h, w) != h) return Verdict::unknown;
    }
    if (std::all_of(h2.begin(), h2.end(), [](const Poly& h) { return h.is_zero(); })) return Verdict::yes;
    if (is_newton_nondegenerate_ideal(h1) != Verdict::yes) return Verdict::unknown;
    const std::size_t n = w.dim();
    std::vector<ExpVec> pts;
    for (const auto& h : h1)
        for (const auto& [k, c] : h.terms())
            for (std::size_t i = 0; i < n; ++i) pts.push_back(k + ExpVec::unit(n, i));
    auto P = build(std::span<const ExpVec>(pts));
    for (const auto& h : h2)
        for (const auto& [k, c] : h.terms())
            if (!P.contains(k)) return Verdict::no;
    return Verdict::yes;
}

// splits g into its principal part and the rest
inline Verdict pIg_check(const std::vector<Poly>& g, const Weights& w) {
    std::vector<Poly> h1 = p_w(g, w), h2;
    for (std::size_t i = 0; i < g.size(); ++i) h2.push_back(g[i] - h1[i]);
    return pIg_check(h1, h2, w);
}

}// namespace nfilt
