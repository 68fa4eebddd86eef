#pragma once

#include <map>
#include <optional>
#include <vector>

#include "detail/intlinalg.hpp"
#include "detail/upoly.hpp"
#include "polyhedron.hpp"
#include "poly.hpp"

namespace nfilt {

struct TorusResult {
    Verdict verdict = Verdict::unknown;
    std::optional<std::vector<Rational>> witness;  // a common zero with no zero coordinate
};

namespace detail {

using Laurent = std::map<IntVec, Rational>;

// saturated lattice spanned by the exponent differences inside each part
inline std::vector<IntVec> difference_lattice(const std::vector<Poly>& parts, std::size_t n) {
    std::vector<IntVec> diffs;
    for (const auto& p : parts) {
        const ExpVec base = p.terms().begin()->first;
        for (const auto& [k, c] : p.terms()) {
            IntVec d(n);
            for (std::size_t i = 0; i < n; ++i) d[i] = std::int64_t(k[i]) - base[i];
            if (std::any_of(d.begin(), d.end(), [](std::int64_t x) { return x != 0; })) diffs.push_back(d);
        }
    }
    if (diffs.empty()) return {};
    auto orth = integer_kernel(diffs, n);
    if (orth.empty()) {
        std::vector<IntVec> id(n, IntVec(n, 0));
        for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
        return id;
    }
    return integer_kernel(orth, n);
}

// coordinates of each part in the lattice basis, shifted to nonnegative exponents
inline std::vector<Laurent> to_lattice(const std::vector<Poly>& parts, const std::vector<IntVec>& B, std::size_t n) {
    const std::size_t k = B.size();
    std::vector<std::vector<Rational>> G(k, std::vector<Rational>(k));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < n; ++i) s += B[a][i] * B[b][i];
            G[a][b] = Rational(static_cast<long>(s));
        }
    std::vector<Laurent> out;
    for (const auto& p : parts) {
        const ExpVec base = p.terms().begin()->first;
        Laurent L;
        for (const auto& [e, c] : p.terms()) {
            std::vector<Rational> rhs(k);
            for (std::size_t a = 0; a < k; ++a) {
                std::int64_t s = 0;
                for (std::size_t i = 0; i < n; ++i) s += B[a][i] * (std::int64_t(e[i]) - base[i]);
                rhs[a] = Rational(static_cast<long>(s));
            }
            auto x = solve(G, rhs);
            IntVec coord(k);
            for (std::size_t a = 0; a < k; ++a) {
                require(is_integer(x[a]), Errc::internal, "exponent outside the face lattice");
                coord[a] = to_int64(x[a].get_num());
            }
            for (std::size_t i = 0; i < n; ++i) {
                std::int64_t s = 0;
                for (std::size_t a = 0; a < k; ++a) s += coord[a] * B[a][i];
                require(s == std::int64_t(e[i]) - base[i], Errc::internal, "exponent outside the face lattice");
            }
            L[coord] = c;
        }
        IntVec lo = L.begin()->first;
        for (const auto& [e, c] : L)
            for (std::size_t a = 0; a < k; ++a) lo[a] = std::min(lo[a], e[a]);
        Laurent S;
        for (const auto& [e, c] : L) {
            IntVec f = e;
            for (std::size_t a = 0; a < k; ++a) f[a] -= lo[a];
            S[f] = c;
        }
        out.push_back(std::move(S));
    }
    return out;
}

inline UPoly to_upoly(const Laurent& L) {
    UPoly p;
    for (const auto& [e, c] : L) {
        if (p.size() <= static_cast<std::size_t>(e[0])) p.resize(e[0] + 1);
        p[e[0]] = c;
    }
    return trim(p);
}

inline BPoly to_bpoly(const Laurent& L) {
    BPoly p;
    for (const auto& [e, c] : L) {
        if (p.size() <= static_cast<std::size_t>(e[1])) p.resize(e[1] + 1);
        auto& q = p[e[1]];
        if (q.size() <= static_cast<std::size_t>(e[0])) q.resize(e[0] + 1);
        q[e[0]] = c;
    }
    return trim(p);
}

inline std::size_t term_count(const BPoly& p) {
    std::size_t t = 0;
    for (const auto& c : p)
        for (const auto& x : c) t += x != 0;
    return t;
}

// polynomials in v over Q[u]/T, with T squarefree; dynamic evaluation splits T on zero divisors
struct Branch {
    UPoly T;
    BPoly g;  // monic in v, or empty
};

inline BPoly reduce(BPoly p, const UPoly& T) {
    for (auto& c : p) c = rem(c, T);
    return trim(p);
}

inline std::vector<Branch> make_monic(const UPoly& T, BPoly p) {
    p = reduce(std::move(p), T);
    if (p.empty()) return {{T, {}}};
    UPoly g = gcd(p.back(), T);
    if (deg(g) == 0) {
        UPoly inv = inverse_mod(p.back(), T);
        for (auto& c : p) c = rem(mul(c, inv), T);
        return {{T, trim(p)}};
    }
    auto out = make_monic(g, p);
    auto rest = make_monic(divmod(T, g).first, p);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

inline BPoly rem_monic(const UPoly& T, BPoly a, const BPoly& b) {
    a = reduce(std::move(a), T);
    while (!a.empty() && deg(a) >= deg(b)) {
        const int shift = deg(a) - deg(b);
        UPoly la = a.back();
        for (int j = 0; j <= deg(b); ++j) a[shift + j] = rem(sub(a[shift + j], mul(la, b[j])), T);
        trim(a);
    }
    return a;
}

inline std::vector<Branch> gcd_branches(const UPoly& T, const BPoly& a, const BPoly& b) {
    std::vector<Branch> out;
    for (auto& [Tk, bk] : make_monic(T, b)) {
        std::vector<Branch> part = bk.empty() ? make_monic(Tk, a) : gcd_branches(Tk, bk, rem_monic(Tk, a, bk));
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// does the monic g have a root v != 0 above every root of T?  (some root suffices)
inline bool has_nonzero_root(const UPoly& T, BPoly g) {
    for (;;) {
        if (deg(g) < 1) return false;
        UPoly c0 = rem(g[0], T);
        if (!c0.empty()) break;
        g.erase(g.begin());
    }
    UPoly c0 = rem(g[0], T);
    UPoly d = gcd(c0, T);
    if (deg(d) == 0) return true;
    return has_nonzero_root(d, g) || has_nonzero_root(divmod(T, d).first, g);
}

inline Verdict decide_univariate(const std::vector<Laurent>& Ls, std::optional<Rational>& root) {
    UPoly g;
    for (const auto& L : Ls) g = gcd(g, to_upoly(L));
    if (deg(g) < 1) return Verdict::yes;
    if (deg(g) == 1) root = -g[0] / g[1];
    return Verdict::no;
}

inline Verdict decide_bivariate(const std::vector<Laurent>& Ls) {
    std::vector<BPoly> Q;
    for (const auto& L : Ls) Q.push_back(to_bpoly(L));
    BPoly G = Q[0];
    for (std::size_t i = 1; i < Q.size(); ++i) G = gcd(G, Q[i]);
    if (term_count(G) > 1) return Verdict::no;
    if (Q.size() == 1) return Verdict::no;

    // Q[0] and a combination S of the rest must be coprime
    BPoly S;
    bool coprime = false;
    for (int attempt = 1; attempt <= 6 && !coprime; ++attempt) {
        S.clear();
        for (std::size_t j = 1; j < Q.size(); ++j) {
            BPoly t = Q[j];
            for (auto& c : t) c = scale(c, Rational(static_cast<long>(1 + (j - 1) * attempt)));
            if (S.size() < t.size()) S.resize(t.size());
            for (std::size_t i = 0; i < t.size(); ++i) S[i] = add(S[i], t[i]);
        }
        trim(S);
        coprime = !S.empty() && term_count(gcd(Q[0], S)) <= 1;
    }
    if (!coprime) return Verdict::unknown;

    UPoly T;
    if (deg(Q[0]) == 0) T = Q[0][0];
    else if (deg(S) == 0) T = S[0];
    else T = resultant_v(Q[0], S);
    T = squarefree(strip_u(T));
    if (deg(T) < 1) return Verdict::yes;
    T = monic(T);

    std::vector<Branch> branches = make_monic(T, Q[0]);
    for (std::size_t i = 1; i < Q.size(); ++i) {
        std::vector<Branch> next;
        for (const auto& [Tk, g] : branches) {
            auto part = gcd_branches(Tk, g, Q[i]);
            next.insert(next.end(), part.begin(), part.end());
        }
        branches = std::move(next);
    }
    for (const auto& [Tk, g] : branches) {
        if (g.empty()) return Verdict::no;
        if (has_nonzero_root(Tk, g)) return Verdict::no;
    }
    return Verdict::yes;
}

inline bool all_vanish(const std::vector<Poly>& parts, const std::vector<Rational>& x) {
    return std::all_of(parts.begin(), parts.end(), [&](const Poly& p) { return p.eval(x) == 0; });
}

// small rational points of the torus
inline std::optional<std::vector<Rational>> grid_search(const std::vector<Poly>& parts, std::size_t n) {
    std::vector<Rational> vals{1, -1, 2, -2};
    if (n <= 4) {
        vals.push_back(rat(1, 2));
        vals.push_back(rat(-1, 2));
        vals.push_back(3);
        vals.push_back(-3);
    }
    std::vector<Rational> x(n);
    std::optional<std::vector<Rational>> found;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (found) return;
        if (i == n) {
            if (all_vanish(parts, x)) found = x;
            return;
        }
        for (const auto& v : vals) {
            x[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return found;
}

}// namespace detail

// does the common zero set of the parts avoid (C*)^n
inline TorusResult torus_zero_free(const std::vector<Poly>& parts_in, const Face& face) {
    require(face.compact, Errc::invalid_argument, "face must be compact");
    require(!parts_in.empty(), Errc::invalid_argument, "no parts");
    const std::size_t n = parts_in[0].dim();
    std::vector<Poly> parts;
    for (const auto& p : parts_in) {
        require(p.dim() == n, Errc::dimension_mismatch, "part dimension mismatch");
        if (!p.is_zero()) parts.push_back(p);
    }
    TorusResult res;
    if (parts.empty()) {
        res.verdict = Verdict::no;
        res.witness = std::vector<Rational>(n, Rational(1));
        return res;
    }
    for (const auto& p : parts)
        if (p.terms().size() == 1) {
            res.verdict = Verdict::yes;
            return res;
        }
    auto B = detail::difference_lattice(parts, n);
    auto Ls = detail::to_lattice(parts, B, n);
    if (B.size() == 1) {
        std::optional<Rational> root;
        res.verdict = detail::decide_univariate(Ls, root);
        if (root) {
            // x^b = root with one coordinate carrying it
            for (std::size_t i = 0; i < n && !res.witness; ++i)
                if (B[0][i] == 1 || B[0][i] == -1) {
                    std::vector<Rational> x(n, Rational(1));
                    x[i] = B[0][i] == 1 ? *root : 1 / *root;
                    if (detail::all_vanish(parts, x)) res.witness = x;
                }
        }
        return res;
    }
    if (B.size() == 2) {
        res.verdict = detail::decide_bivariate(Ls);
        if (res.verdict == Verdict::no) res.witness = detail::grid_search(parts, n);
        return res;
    }
    res.witness = detail::grid_search(parts, n);
    res.verdict = res.witness ? Verdict::no : Verdict::unknown;
    return res;
}

}// namespace nfilt
