#pragma once

#include <utility>
#include <vector>

#include "../rational.hpp"

namespace nfilt::detail {

// dense univariate polynomial over Q, c[i] is the coefficient of u^i; trimmed
using UPoly = std::vector<Rational>;

inline UPoly& trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UPoly add(UPoly a, const UPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return trim(a);
}

inline UPoly sub(UPoly a, const UPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return trim(a);
}

inline UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trim(r);
}

inline UPoly scale(UPoly a, const Rational& s) {
    for (auto& c : a) c *= s;
    return trim(a);
}

inline std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
    require(!b.empty(), Errc::internal, "division by zero polynomial");
    trim(a);
    if (a.size() < b.size()) return {{}, a};
    UPoly q(a.size() - b.size() + 1);
    const Rational lb = b.back();
    for (int i = deg(a); i >= deg(b); --i) {
        Rational f = a[i] / lb;
        q[i - deg(b)] = f;
        if (f == 0) continue;
        for (int j = 0; j <= deg(b); ++j) a[i - deg(b) + j] -= f * b[j];
    }
    trim(a);
    return {trim(q), a};
}

inline UPoly rem(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

inline UPoly monic(UPoly a) {
    if (a.empty()) return a;
    return scale(a, 1 / a.back());
}

inline UPoly gcd(UPoly a, UPoly b) {
    while (!b.empty()) {
        auto r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

inline UPoly derivative(const UPoly& a) {
    UPoly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<long>(i));
    return trim(d);
}

// divide out the largest power of u
inline UPoly strip_u(UPoly a) {
    std::size_t k = 0;
    while (k < a.size() && a[k] == 0) ++k;
    a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k));
    return a;
}

inline UPoly squarefree(const UPoly& a) {
    if (deg(a) < 1) return a;
    return monic(divmod(a, gcd(a, derivative(a))).first);
}

inline Rational eval(const UPoly& a, const Rational& x) {
    Rational s = 0;
    for (int i = deg(a); i >= 0; --i) s = s * x + a[i];
    return s;
}

// inverse of a modulo m when gcd is 1; extended Euclid
inline UPoly inverse_mod(const UPoly& a, const UPoly& m) {
    UPoly r0 = m, r1 = rem(a, m), s0, s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        UPoly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    require(deg(r0) == 0, Errc::internal, "element is not invertible");
    return rem(scale(s0, 1 / r0[0]), m);
}

// bivariate: b[j] is the coefficient of v^j, itself a polynomial in u
using BPoly = std::vector<UPoly>;

inline BPoly& trim(BPoly& p) {
    for (auto& c : p) trim(c);
    while (!p.empty() && p.back().empty()) p.pop_back();
    return p;
}

inline int deg(const BPoly& p) { return static_cast<int>(p.size()) - 1; }

inline int deg_u(const BPoly& p) {
    int d = -1;
    for (const auto& c : p) d = std::max(d, deg(c));
    return d;
}

inline UPoly content(const BPoly& p) {
    UPoly g;
    for (const auto& c : p) g = gcd(g, c);
    return g;
}

inline BPoly primitive_part(BPoly p) {
    auto c = content(p);
    if (c.empty()) return p;
    for (auto& x : p) x = divmod(x, c).first;
    return trim(p);
}

// lc(b)^(deg a - deg b + 1) a mod b, in v
inline BPoly prem(BPoly a, const BPoly& b) {
    const UPoly& lb = b.back();
    while (!a.empty() && deg(a) >= deg(b)) {
        const int shift = deg(a) - deg(b);
        UPoly la = a.back();
        for (auto& c : a) c = mul(c, lb);
        for (int j = 0; j <= deg(b); ++j) a[shift + j] = sub(a[shift + j], mul(la, b[j]));
        trim(a);
    }
    return a;
}

inline BPoly gcd(BPoly a, BPoly b) {
    trim(a);
    trim(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    UPoly c = gcd(content(a), content(b));
    a = primitive_part(a);
    b = primitive_part(b);
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!b.empty() && deg(b) > 0) {
        auto r = prem(a, b);
        a = std::move(b);
        b = r.empty() ? r : primitive_part(r);
    }
    BPoly g = b.empty() ? a : BPoly{UPoly{Rational(1)}};
    for (auto& x : g) x = mul(x, c);
    return trim(g);
}

inline UPoly eval_u(const BPoly& p, const Rational& u) {
    UPoly r;
    for (const auto& c : p) r.push_back(eval(c, u));
    return trim(r);
}

inline Rational det(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return d;
}

// Sylvester resultant of univariate a (formal degree da) and b (formal degree db)
inline Rational sylvester(const UPoly& a, int da, const UPoly& b, int db) {
    const int n = da + db;
    if (n == 0) return 1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
    auto at = [](const UPoly& p, int i) { return i >= 0 && i < static_cast<int>(p.size()) ? p[i] : Rational(0); };
    for (int r = 0; r < db; ++r)
        for (int j = 0; j <= da; ++j) m[r][r + j] = at(a, da - j);
    for (int r = 0; r < da; ++r)
        for (int j = 0; j <= db; ++j) m[db + r][r + j] = at(b, db - j);
    return det(std::move(m));
}

// Res_v(a, b) as a polynomial in u, by evaluation and Newton interpolation
inline UPoly resultant_v(const BPoly& a, const BPoly& b) {
    const int da = deg(a), db = deg(b);
    const int bound = da * std::max(deg_u(b), 0) + db * std::max(deg_u(a), 0);
    std::vector<Rational> xs, ys;
    for (int i = 0; i <= bound; ++i) {
        Rational x = i;
        xs.push_back(x);
        ys.push_back(sylvester(eval_u(a, x), da, eval_u(b, x), db));
    }
    // divided differences
    std::vector<Rational> c = ys;
    for (std::size_t j = 1; j < xs.size(); ++j)
        for (std::size_t i = xs.size() - 1; i >= j; --i) c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
    UPoly r;
    for (std::size_t k = xs.size(); k-- > 0;) {
        r = mul(r, UPoly{-xs[k], Rational(1)});
        r = add(r, UPoly{c[k]});
    }
    return trim(r);
}

}// namespace nfilt::detail
