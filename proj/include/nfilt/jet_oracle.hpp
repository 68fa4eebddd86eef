#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "ideal.hpp"

namespace nfilt {

enum class Field { rationals, prime };

struct JetOptions {
    std::int64_t n_start = 0;  // 0: one more than the largest generator degree
    std::int64_t n_max = 64;   // in units of the largest weight
    Field field = Field::prime;
    std::uint32_t prime = 2147483647u;
    std::vector<int> weights;  // empty: total degree
};

struct ColengthResult {
    enum class Status { finite, infinite, cap };
    Status status = Status::cap;
    std::int64_t value = 0;         // valid when finite
    std::int64_t truncation = 0;    // N of the last elimination
    std::int64_t certified_at = 0;  // K with d_K = d_{K+wmax}

    bool finite() const { return status == Status::finite; }
};

namespace detail {

struct ModP {
    using T = std::uint32_t;
    std::uint64_t p;

    T from(const Rational& q) const {
        auto red = [&](const Integer& z) {
            Integer r;
            mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p));
            return static_cast<std::uint64_t>(r.get_ui());
        };
        std::uint64_t d = red(q.get_den());
        require(d != 0, Errc::internal, "denominator vanishes modulo the prime");
        return static_cast<T>(red(q.get_num()) * inv(static_cast<T>(d)) % p);
    }
    T mul(T a, T b) const { return static_cast<T>(std::uint64_t(a) * b % p); }
    T sub(T a, T b) const { return a >= b ? a - b : static_cast<T>(a + p - b); }
    T inv(T a) const {
        std::uint64_t r = 1, b = a, e = p - 2;
        for (; e; e >>= 1, b = b * b % p)
            if (e & 1) r = r * b % p;
        return static_cast<T>(r);
    }
    static bool zero(T a) { return a == 0; }
    static T one() { return 1; }
};

struct QField {
    using T = Rational;
    T from(const Rational& q) const { return q; }
    T mul(const T& a, const T& b) const { return a * b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T inv(const T& a) const { return 1 / a; }
    static bool zero(const T& a) { return a == 0; }
    static T one() { return 1; }
};

template <class Fld>
class Eliminator {
public:
    using T = typename Fld::T;
    using Row = std::vector<std::pair<std::uint32_t, T>>;

    Eliminator(Fld f, std::size_t cols) : f_(f), piv_(cols) {}

    // returns true when the row becomes a new pivot
    bool insert(Row row) {
        Row tmp;
        while (!row.empty()) {
            const auto c = row.front().first;
            const Row& p = piv_[c];
            if (p.empty()) {
                T s = f_.inv(row.front().second);
                for (auto& [col, v] : row) v = f_.mul(v, s);
                piv_[c] = std::move(row);
                return true;
            }
            const T fac = row.front().second;
            tmp.clear();
            std::size_t i = 1, j = 1;
            while (i < row.size() || j < p.size()) {
                if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
                    tmp.push_back(std::move(row[i++]));
                } else if (i == row.size() || p[j].first < row[i].first) {
                    tmp.emplace_back(p[j].first, f_.sub(T(0), f_.mul(fac, p[j].second)));
                    ++j;
                } else {
                    T v = f_.sub(row[i].second, f_.mul(fac, p[j].second));
                    if (!Fld::zero(v)) tmp.emplace_back(row[i].first, std::move(v));
                    ++i, ++j;
                }
            }
            std::swap(row, tmp);
        }
        return false;
    }

    bool has_pivot(std::size_t c) const { return !piv_[c].empty(); }

private:
    Fld f_;
    std::vector<Row> piv_;
};

inline std::int64_t wdeg(const ExpVec& k, const std::vector<int>& w) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < k.size(); ++i) s += std::int64_t(w[i]) * k[i];
    return s;
}

// all exponents with weighted degree < N
inline std::vector<ExpVec> monomials_below(std::size_t n, const std::vector<int>& w, std::int64_t N) {
    std::vector<ExpVec> out;
    ExpVec k(n);
    auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
        if (i == n) {
            out.push_back(k);
            return;
        }
        for (int a = 0; std::int64_t(a) * w[i] < left; ++a) {
            k.set(i, a);
            self(self, i + 1, left - std::int64_t(a) * w[i]);
        }
        k.set(i, 0);
    };
    rec(rec, 0, N);
    return out;
}

// d_K for K = 0..N from one elimination at truncation N
template <class Fld>
std::vector<std::int64_t> jet_defects(const std::vector<Poly>& gens, const std::vector<int>& w, std::int64_t N, Fld fld) {
    const std::size_t n = gens[0].dim();
    auto cols = monomials_below(n, w, N);
    std::stable_sort(cols.begin(), cols.end(), [&](const ExpVec& a, const ExpVec& b) { return wdeg(a, w) < wdeg(b, w); });
    std::unordered_map<ExpVec, std::uint32_t, ExpVecHash> index;
    index.reserve(cols.size() * 2);
    for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], static_cast<std::uint32_t>(i));

    using Row = typename Eliminator<Fld>::Row;
    std::vector<Row> rows;
    for (const auto& g : gens) {
        std::vector<std::pair<ExpVec, typename Fld::T>> terms;
        std::int64_t ord = -1;
        for (const auto& [k, c] : g.terms()) {
            terms.emplace_back(k, fld.from(c));
            auto d = wdeg(k, w);
            if (ord < 0 || d < ord) ord = d;
        }
        if (ord < 0 || ord >= N) continue;
        for (const auto& a : monomials_below(n, w, N - ord)) {
            Row r;
            for (const auto& [k, c] : terms) {
                auto it = index.find(a + k);
                if (it != index.end() && !Fld::zero(c)) r.emplace_back(it->second, c);
            }
            if (r.empty()) continue;
            std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            rows.push_back(std::move(r));
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front().first < b.front().first;
    });
    Eliminator<Fld> el(fld, cols.size());
    for (auto& r : rows) el.insert(std::move(r));

    std::vector<std::int64_t> free_by_deg(static_cast<std::size_t>(N), 0);
    for (std::size_t i = 0; i < cols.size(); ++i)
        if (!el.has_pivot(i)) ++free_by_deg[static_cast<std::size_t>(wdeg(cols[i], w))];
    std::vector<std::int64_t> d(static_cast<std::size_t>(N) + 1, 0);
    for (std::int64_t K = 1; K <= N; ++K) d[K] = d[K - 1] + free_by_deg[K - 1];
    return d;
}

// every term of every generator avoids some coordinate subspace: it lies in the zero set
inline bool contains_coordinate_subspace(const std::vector<Poly>& gens, std::size_t n) {
    for (unsigned S = 1; S < (1u << n); ++S) {
        bool all = true;
        for (const auto& g : gens)
            for (const auto& [k, c] : g.terms()) {
                bool outside = false;
                for (std::size_t i = 0; i < n; ++i)
                    if (!(S >> i & 1) && k[i] > 0) outside = true;
                if (!outside) all = false;
            }
        if (all) return true;
    }
    return false;
}

}// namespace detail

inline ColengthResult colength_jets(const std::vector<Poly>& gens_in, const JetOptions& opt = {}) {
    require(!gens_in.empty(), Errc::invalid_argument, "no generators");
    const std::size_t n = gens_in[0].dim();
    std::vector<Poly> gens;
    for (const auto& g : gens_in) {
        require(g.dim() == n, Errc::dimension_mismatch, "generator dimension mismatch");
        if (!g.is_zero()) gens.push_back(g);
    }
    std::vector<int> w = opt.weights.empty() ? std::vector<int>(n, 1) : opt.weights;
    require(w.size() == n, Errc::dimension_mismatch, "weight vector dimension");
    for (int x : w) require(x >= 1, Errc::invalid_argument, "weights must be positive");
    const int wmax = *std::max_element(w.begin(), w.end());

    ColengthResult res;
    if (gens.size() < n && std::none_of(gens.begin(), gens.end(), [&](const Poly& g) { return g.coeff(ExpVec(n)) != 0; })) {
        res.status = ColengthResult::Status::infinite;
        return res;
    }
    if (detail::contains_coordinate_subspace(gens, n)) {
        res.status = ColengthResult::Status::infinite;
        return res;
    }
    std::int64_t top = 0;
    for (const auto& g : gens)
        for (const auto& [k, c] : g.terms()) top = std::max(top, detail::wdeg(k, w));
    std::int64_t N = opt.n_start > 0 ? opt.n_start : top + 1;
    N = std::max<std::int64_t>(N, 2 * wmax + 1);
    const std::int64_t cap = opt.n_max * wmax;
    for (;;) {
        std::vector<std::int64_t> d = opt.field == Field::prime
                                          ? detail::jet_defects(gens, w, N, detail::ModP{opt.prime})
                                          : detail::jet_defects(gens, w, N, detail::QField{});
        res.truncation = N;
        for (std::int64_t K = 0; K + wmax <= N; ++K)
            if (d[K] == d[K + wmax]) {
                res.status = ColengthResult::Status::finite;
                res.value = d[K];
                res.certified_at = K;
                return res;
            }
        if (N >= cap) return res;
        N = std::min(cap, std::max(N + wmax, N * 3 / 2));
    }
}

inline std::int64_t draw_coefficient(std::mt19937_64& rng, std::int64_t range) {
    std::int64_t u = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * range)) - range;
    return u >= 0 ? u + 1 : u;
}

inline std::vector<Poly> generic_combination(const IdealTuple& T, std::uint64_t seed, std::int64_t range = 10000) {
    std::mt19937_64 rng(seed);
    std::vector<Poly> out;
    for (const auto& I : T.items()) {
        Poly g(T.dim());
        for (const auto& a : I.gens()) g += a.scaled(Rational(Integer(static_cast<long>(draw_coefficient(rng, range)))));
        out.push_back(std::move(g));
    }
    return out;
}

struct IsolatedResult {
    Verdict verdict = Verdict::unknown;
    std::optional<std::int64_t> milnor;
};

inline IsolatedResult isolated_singularity(const Poly& f, const JetOptions& opt = {}) {
    require(f.coeff(ExpVec(f.dim())) == 0, Errc::invalid_argument, "f must vanish at the origin");
    auto r = colength_jets(gradient(f), opt);
    if (r.status == ColengthResult::Status::finite) return {Verdict::yes, r.value};
    if (r.status == ColengthResult::Status::infinite) return {Verdict::no, std::nullopt};
    return {};
}

}// namespace nfilt
