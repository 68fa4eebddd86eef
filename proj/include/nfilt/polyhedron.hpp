#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "detail/intlinalg.hpp"
#include "expvec.hpp"
#include "rational.hpp"

namespace nfilt {

struct Facet {
    IntVec normal;
    std::int64_t ell = 0;
    std::vector<std::size_t> verts;  // indices into vertices()

    bool compact() const {
        return std::all_of(normal.begin(), normal.end(), [](std::int64_t x) { return x > 0; });
    }
};

struct Face {
    IntVec normal;
    int dimension = 0;
    std::vector<ExpVec> vertices;
    bool compact = false;
};

class NewtonPolyhedron {
public:
    NewtonPolyhedron() = default;

    std::size_t dim() const { return n_; }
    const std::vector<ExpVec>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    bool convenient() const { return convenient_; }

    std::vector<Facet> compact_facets() const {
        std::vector<Facet> r;
        for (const auto& f : facets_)
            if (f.compact()) r.push_back(f);
        return r;
    }

    bool contains(const ExpVec& k) const {
        for (const auto& f : facets_)
            if (dot(f.normal, k) < f.ell) return false;
        return true;
    }

    bool contains(std::span<const Rational> q) const {
        for (const auto& f : facets_) {
            Rational s = 0;
            for (std::size_t i = 0; i < n_; ++i) s += q[i] * static_cast<long>(f.normal[i]);
            if (s < static_cast<long>(f.ell)) return false;
        }
        return true;
    }

    friend bool operator==(const NewtonPolyhedron& a, const NewtonPolyhedron& b) {
        return a.n_ == b.n_ && a.vertices_ == b.vertices_;
    }

    friend NewtonPolyhedron build(std::span<const ExpVec> points);
    friend NewtonPolyhedron scale(const NewtonPolyhedron& P, int s);

private:
    void finish();

    std::size_t n_ = 0;
    std::vector<ExpVec> vertices_;
    std::vector<Facet> facets_;
    bool convenient_ = false;
};

namespace detail {

inline std::vector<ExpVec> prune_dominated(std::span<const ExpVec> pts) {
    std::vector<ExpVec> v(pts.begin(), pts.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    std::vector<ExpVec> keep;
    for (const auto& p : v) {
        bool dominated = false;
        for (const auto& q : v)
            if (q != p && q.divides(p)) {
                dominated = true;
                break;
            }
        if (!dominated) keep.push_back(p);
    }
    return keep;
}

inline std::int64_t cross2(const ExpVec& o, const ExpVec& a, const ExpVec& b) {
    return std::int64_t(a[0] - o[0]) * (b[1] - o[1]) - std::int64_t(a[1] - o[1]) * (b[0] - o[0]);
}

inline std::int64_t primitive(IntVec& v) {
    std::int64_t g = 0;
    for (auto x : v) g = gcd64(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
    return g;
}

// staircase lower hull in the plane
inline void hull2(std::vector<ExpVec> pts, std::vector<ExpVec>& verts, std::vector<std::pair<IntVec, std::int64_t>>& facets) {
    std::sort(pts.begin(), pts.end());
    for (const auto& p : pts) {
        while (verts.size() >= 2 && cross2(verts[verts.size() - 2], verts.back(), p) <= 0) verts.pop_back();
        verts.push_back(p);
    }
    facets.push_back({IntVec{1, 0}, verts.front()[0]});
    facets.push_back({IntVec{0, 1}, verts.back()[1]});
    for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
        IntVec v{verts[i][1] - verts[i + 1][1], verts[i + 1][0] - verts[i][0]};
        primitive(v);
        facets.push_back({v, dot(v, verts[i])});
    }
}

// brute force: each facet is spanned by some points plus recession directions
inline void hulln(const std::vector<ExpVec>& pts, std::size_t n, std::vector<std::pair<IntVec, std::int64_t>>& facets) {
    std::set<IntVec> seen;
    const std::size_t m = pts.size();
    std::vector<std::size_t> pick;
    auto try_candidate = [&](unsigned zero_mask) {
        std::vector<std::size_t> free;
        for (std::size_t i = 0; i < n; ++i)
            if (!(zero_mask >> i & 1)) free.push_back(i);
        std::vector<std::vector<std::int64_t>> rows;
        for (std::size_t a = 1; a < pick.size(); ++a) {
            std::vector<std::int64_t> r;
            for (auto i : free) r.push_back(std::int64_t(pts[pick[a]][i]) - pts[pick[0]][i]);
            rows.push_back(std::move(r));
        }
        auto kv = kernel_vector(rows, free.size());
        bool pos = false, neg = false;
        for (auto x : kv) pos |= x > 0, neg |= x < 0;
        if (pos == neg) return;
        IntVec v(n, 0);
        for (std::size_t j = 0; j < free.size(); ++j) v[free[j]] = neg ? -kv[j] : kv[j];
        if (seen.count(v)) return;
        std::int64_t lvl = dot(v, pts[pick[0]]);
        for (const auto& p : pts)
            if (dot(v, p) < lvl) return;
        seen.insert(v);
        facets.push_back({v, lvl});
    };
    // k points, n-k zero coordinates
    for (std::size_t k = 1; k <= std::min(n, m); ++k) {
        pick.assign(k, 0);
        auto rec = [&](auto&& self, std::size_t pos, std::size_t from) -> void {
            if (pos == k) {
                for (unsigned mask = 0; mask < (1u << n); ++mask)
                    if (static_cast<std::size_t>(__builtin_popcount(mask)) == n - k) try_candidate(mask);
                return;
            }
            for (std::size_t i = from; i < m; ++i) {
                pick[pos] = i;
                self(self, pos + 1, i + 1);
            }
        };
        rec(rec, 0, 0);
    }
}

// double description: extreme rays of {(v,c) : v >= 0, <v,p> >= c for all p}
inline void hull_dd(const std::vector<ExpVec>& pts, std::size_t n, std::vector<std::pair<IntVec, std::int64_t>>& facets) {
    const std::size_t d = n + 1;
    std::vector<IntVec> cons;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec g(d, 0);
        g[i] = 1;
        cons.push_back(std::move(g));
    }
    for (const auto& p : pts) {
        IntVec g(d);
        for (std::size_t i = 0; i < n; ++i) g[i] = p[i];
        g[n] = -1;
        cons.push_back(std::move(g));
    }
    const std::size_t m = cons.size();
    struct Ray {
        IntVec y;
        std::vector<bool> tight;
    };
    auto eval = [&](const IntVec& g, const IntVec& y) {
        i128 s = 0;
        for (std::size_t i = 0; i < d; ++i) s += i128(g[i]) * y[i];
        return s;
    };
    // initial cone from e_1..e_n and the first point: rays are the inverse columns
    std::vector<Ray> rays;
    {
        const auto& p = pts[0];
        for (std::size_t j = 0; j < n; ++j) {
            IntVec y(d, 0);
            y[j] = 1;
            y[n] = p[j];
            rays.push_back({y, {}});
        }
        IntVec y(d, 0);
        y[n] = -1;
        rays.push_back({y, {}});
    }
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < n; ++i) order.push_back(i);
    order.push_back(n);
    for (std::size_t i = n + 1; i < m; ++i) order.push_back(i);
    for (auto& r : rays) {
        r.tight.assign(m, false);
        for (std::size_t k = 0; k <= n; ++k) r.tight[order[k]] = eval(cons[order[k]], r.y) == 0;
    }
    std::vector<bool> processed(m, false);
    for (std::size_t k = 0; k <= n; ++k) processed[order[k]] = true;
    for (std::size_t step = n + 1; step < m; ++step) {
        const auto ci = order[step];
        const auto& g = cons[ci];
        std::vector<std::size_t> pos, neg, zer;
        std::vector<i128> val(rays.size());
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = eval(g, rays[r].y);
            (val[r] > 0 ? pos : val[r] < 0 ? neg : zer).push_back(r);
        }
        if (neg.empty()) {
            for (auto r : zer) rays[r].tight[ci] = true;
            processed[ci] = true;
            continue;
        }
        std::vector<Ray> next;
        for (auto r : pos) next.push_back(rays[r]);
        for (auto r : zer) {
            next.push_back(rays[r]);
            next.back().tight[ci] = true;
        }
        for (auto a : pos)
            for (auto b : neg) {
                std::vector<std::size_t> common;
                for (std::size_t c = 0; c < m; ++c)
                    if (processed[c] && rays[a].tight[c] && rays[b].tight[c]) common.push_back(c);
                if (common.size() + 2 < d) continue;
                bool adjacent = true;
                for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
                    if (o == a || o == b) continue;
                    bool sup = true;
                    for (auto c : common)
                        if (!rays[o].tight[c]) {
                            sup = false;
                            break;
                        }
                    if (sup) adjacent = false;
                }
                if (!adjacent) continue;
                std::vector<i128> y(d);
                i128 ga = val[a], gb = -val[b];
                for (std::size_t i = 0; i < d; ++i) y[i] = ga * rays[b].y[i] + gb * rays[a].y[i];
                i128 h = 0;
                for (auto x : y) {
                    i128 ax = x < 0 ? -x : x;
                    while (ax) {
                        i128 t = h % ax;
                        h = ax;
                        ax = t;
                    }
                }
                Ray nr;
                nr.y.resize(d);
                for (std::size_t i = 0; i < d; ++i) {
                    i128 q = h > 1 ? y[i] / h : y[i];
                    require(q < (i128(1) << 62) && q > -(i128(1) << 62), Errc::internal, "hull coordinate overflow");
                    nr.y[i] = static_cast<std::int64_t>(q);
                }
                nr.tight.assign(m, false);
                for (std::size_t c = 0; c < m; ++c)
                    if (processed[c] || c == ci) nr.tight[c] = eval(cons[c], nr.y) == 0;
                next.push_back(std::move(nr));
            }
        rays = std::move(next);
        processed[ci] = true;
    }
    for (const auto& r : rays) {
        IntVec v(r.y.begin(), r.y.begin() + static_cast<std::ptrdiff_t>(n));
        if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; })) continue;
        facets.push_back({v, r.y[n]});
    }
}

}// namespace detail

inline void NewtonPolyhedron::finish() {
    std::sort(facets_.begin(), facets_.end(), [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
    for (auto& f : facets_) {
        f.verts.clear();
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (dot(f.normal, vertices_[i]) == f.ell) f.verts.push_back(i);
    }
    convenient_ = true;
    for (std::size_t i = 0; i < n_; ++i) {
        bool hit = false;
        for (const auto& v : vertices_) {
            bool on_axis = true;
            for (std::size_t j = 0; j < n_; ++j)
                if (j != i && v[j] != 0) on_axis = false;
            hit |= on_axis;
        }
        convenient_ &= hit;
    }
}

inline NewtonPolyhedron build(std::span<const ExpVec> points) {
    require(!points.empty(), Errc::invalid_argument, "empty point set");
    const std::size_t n = points[0].size();
    for (const auto& p : points) require(p.size() == n, Errc::dimension_mismatch, "point dimension mismatch");
    NewtonPolyhedron P;
    P.n_ = n;
    auto pts = detail::prune_dominated(points);
    std::vector<std::pair<IntVec, std::int64_t>> fs;
    if (n == 1) {
        P.vertices_ = {pts.front()};
        fs.push_back({IntVec{1}, pts.front()[0]});
    } else if (n == 2) {
        detail::hull2(pts, P.vertices_, fs);
    } else {
        detail::hull_dd(pts, n, fs);
        // vertex iff the normals of facets through it span R^n
        for (const auto& p : pts) {
            std::vector<std::vector<std::int64_t>> normals;
            for (const auto& [v, l] : fs)
                if (dot(v, p) == l) normals.push_back(v);
            if (detail::rank(normals) == n) P.vertices_.push_back(p);
        }
    }
    for (auto& [v, l] : fs) P.facets_.push_back(Facet{v, l, {}});
    P.finish();
    return P;
}

// exhaustive facet search, kept as an independent check on the default path
inline std::vector<std::pair<IntVec, std::int64_t>> facets_bruteforce(std::span<const ExpVec> points) {
    auto pts = detail::prune_dominated(points);
    std::vector<std::pair<IntVec, std::int64_t>> fs;
    detail::hulln(pts, points[0].size(), fs);
    std::sort(fs.begin(), fs.end());
    return fs;
}

inline NewtonPolyhedron build(std::initializer_list<ExpVec> pts) {
    std::vector<ExpVec> v(pts);
    return build(std::span<const ExpVec>(v));
}

inline std::int64_t ell(const IntVec& v, const NewtonPolyhedron& P) {
    require(v.size() == P.dim(), Errc::dimension_mismatch, "vector dimension mismatch");
    bool nz = false;
    for (auto x : v) {
        require(x >= 0, Errc::invalid_argument, "support vector must be non-negative");
        nz |= x > 0;
    }
    require(nz, Errc::invalid_argument, "support vector must be nonzero");
    std::int64_t best = dot(v, P.vertices().front());
    for (const auto& p : P.vertices()) best = std::min(best, dot(v, p));
    return best;
}

namespace detail {

inline int affine_dim(const std::vector<ExpVec>& vs, const IntVec& normal) {
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t a = 1; a < vs.size(); ++a) {
        std::vector<std::int64_t> r;
        for (std::size_t i = 0; i < vs[0].size(); ++i) r.push_back(std::int64_t(vs[a][i]) - vs[0][i]);
        rows.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < normal.size(); ++i)
        if (normal[i] == 0) {
            std::vector<std::int64_t> r(normal.size(), 0);
            r[i] = 1;
            rows.push_back(std::move(r));
        }
    return static_cast<int>(rank(rows));
}

}// namespace detail

inline Face face(const IntVec& v, const NewtonPolyhedron& P) {
    const std::int64_t l = ell(v, P);
    Face F;
    F.normal = v;
    for (const auto& p : P.vertices())
        if (dot(v, p) == l) F.vertices.push_back(p);
    F.compact = std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x > 0; });
    F.dimension = detail::affine_dim(F.vertices, v);
    return F;
}

inline NewtonPolyhedron scale(const NewtonPolyhedron& P, int s) {
    require(s >= 1, Errc::invalid_argument, "scale factor must be >= 1");
    NewtonPolyhedron Q = P;
    for (auto& v : Q.vertices_) v = v.scaled(s);
    for (auto& f : Q.facets_) f.ell *= s;
    return Q;
}

inline NewtonPolyhedron minkowski_sum(const NewtonPolyhedron& P, const NewtonPolyhedron& Q) {
    require(P.dim() == Q.dim(), Errc::dimension_mismatch, "polyhedron dimension mismatch");
    std::vector<ExpVec> pts;
    for (const auto& p : P.vertices())
        for (const auto& q : Q.vertices()) pts.push_back(p + q);
    return build(std::span<const ExpVec>(pts));
}

namespace detail {

// fan triangulation of a compact face given by vertex indices
inline void triangulate(const NewtonPolyhedron& P, const std::vector<std::size_t>& V, int d,
                        std::vector<std::vector<std::size_t>>& out) {
    const auto& X = P.vertices();
    if (d == 0) {
        out.push_back({V[0]});
        return;
    }
    std::size_t v0 = V[0];
    for (auto i : V)
        if (X[i] < X[v0]) v0 = i;
    std::set<std::vector<std::size_t>> seen;
    for (const auto& H : P.facets()) {
        std::vector<std::size_t> G;
        std::set_intersection(V.begin(), V.end(), H.verts.begin(), H.verts.end(), std::back_inserter(G));
        if (G.empty() || std::find(G.begin(), G.end(), v0) != G.end() || seen.count(G)) continue;
        std::vector<ExpVec> pts;
        for (auto i : G) pts.push_back(X[i]);
        IntVec pos(P.dim(), 1);
        if (affine_dim(pts, pos) != d - 1) continue;
        seen.insert(G);
        std::vector<std::vector<std::size_t>> sub;
        triangulate(P, G, d - 1, sub);
        for (auto& s : sub) {
            s.push_back(v0);
            out.push_back(std::move(s));
        }
    }
}

}// namespace detail

// volume of the region under the Newton boundary
inline Rational covolume(const NewtonPolyhedron& P) {
    require(P.convenient(), Errc::not_convenient, "covolume needs a convenient polyhedron");
    const std::size_t n = P.dim();
    Integer total = 0;
    for (const auto& F : P.facets()) {
        if (!F.compact()) continue;
        std::vector<std::vector<std::size_t>> simplices;
        detail::triangulate(P, F.verts, static_cast<int>(n) - 1, simplices);
        for (const auto& s : simplices) {
            detail::Matrix<Integer> m;
            for (auto i : s) {
                std::vector<Integer> row;
                for (std::size_t j = 0; j < n; ++j) row.emplace_back(P.vertices()[i][j]);
                m.push_back(std::move(row));
            }
            total += abs(detail::bareiss_det(m));
        }
    }
    Rational r(total, factorial(static_cast<unsigned>(n)));
    r.canonicalize();
    return r;
}

inline Rational dilation_factor(const ExpVec& u, const NewtonPolyhedron& P) {
    require(P.convenient(), Errc::not_convenient, "dilation factor needs a convenient polyhedron");
    require(!u.is_zero(), Errc::invalid_argument, "zero direction");
    Rational best = 0;
    for (const auto& f : P.facets()) {
        if (!f.compact()) continue;
        Rational t(Integer(static_cast<long>(f.ell)), Integer(static_cast<long>(dot(f.normal, u))));
        t.canonicalize();
        if (t > best) best = t;
    }
    return best;
}

// all compact faces, highest dimension first
inline std::vector<Face> compact_faces(const NewtonPolyhedron& P) {
    std::set<std::vector<std::size_t>> sets;
    std::vector<std::vector<std::size_t>> work;
    for (const auto& f : P.facets())
        if (sets.insert(f.verts).second) work.push_back(f.verts);
    for (std::size_t i = 0; i < P.vertices().size(); ++i)
        if (sets.insert({i}).second) work.push_back({i});
    for (std::size_t a = 0; a < work.size(); ++a)
        for (std::size_t b = 0; b < a; ++b) {
            std::vector<std::size_t> G;
            std::set_intersection(work[a].begin(), work[a].end(), work[b].begin(), work[b].end(), std::back_inserter(G));
            if (!G.empty() && sets.insert(G).second) work.push_back(G);
        }
    std::vector<Face> out;
    for (const auto& S : work) {
        IntVec sup(P.dim(), 0);
        for (const auto& f : P.facets())
            if (std::includes(f.verts.begin(), f.verts.end(), S.begin(), S.end()))
                for (std::size_t i = 0; i < sup.size(); ++i) sup[i] += f.normal[i];
        if (!std::all_of(sup.begin(), sup.end(), [](std::int64_t x) { return x > 0; })) continue;
        Face F;
        F.normal = sup;
        detail::primitive(F.normal);
        for (auto i : S) F.vertices.push_back(P.vertices()[i]);
        F.compact = true;
        F.dimension = detail::affine_dim(F.vertices, F.normal);
        out.push_back(std::move(F));
    }
    std::stable_sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        if (a.dimension != b.dimension) return a.dimension > b.dimension;
        return a.vertices < b.vertices;
    });
    return out;
}

inline std::vector<Face> inner_facets(const NewtonPolyhedron& P) {
    std::vector<Face> out;
    for (const auto& f : P.facets()) {
        if (!f.compact()) continue;
        bool touches_axis = false;
        for (auto i : f.verts) {
            int nz = 0;
            for (int c : P.vertices()[i].coords()) nz += c != 0;
            touches_axis |= nz <= 1;
        }
        if (!touches_axis) out.push_back(face(f.normal, P));
    }
    return out;
}

}// namespace nfilt
