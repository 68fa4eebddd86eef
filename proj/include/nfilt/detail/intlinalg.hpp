#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "../rational.hpp"

namespace nfilt::detail {

using i128 = __int128;

template <class T>
using Matrix = std::vector<std::vector<T>>;

// fraction-free Gaussian elimination; every intermediate is a minor
template <class T>
T bareiss_det(Matrix<T> a) {
    const std::size_t n = a.size();
    if (n == 0) return T(1);
    T sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return T(0);
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// vector orthogonal to the k-1 rows of a (k-1) x k matrix, made primitive;
// zero when rows are dependent
inline std::vector<std::int64_t> kernel_vector(const std::vector<std::vector<std::int64_t>>& rows, std::size_t k) {
    std::vector<std::int64_t> v(k, 0);
    std::int64_t big = 1;
    for (const auto& r : rows)
        for (auto x : r) big = std::max<std::int64_t>(big, x < 0 ? -x : x);
    const bool narrow = k <= 1 || 2 * (k - 1) * (64 - __builtin_clzll(static_cast<unsigned long long>(big)) + 2) < 120;
    for (std::size_t j = 0; j < k; ++j) {
        if (narrow) {
            Matrix<i128> m;
            for (const auto& r : rows) {
                std::vector<i128> row;
                for (std::size_t c = 0; c < k; ++c)
                    if (c != j) row.push_back(r[c]);
                m.push_back(std::move(row));
            }
            i128 d = bareiss_det(m);
            require(d < (i128(1) << 62) && d > -(i128(1) << 62), Errc::internal, "normal overflow");
            v[j] = static_cast<std::int64_t>(d) * ((j % 2) ? -1 : 1);
        } else {
            Matrix<Integer> m;
            for (const auto& r : rows) {
                std::vector<Integer> row;
                for (std::size_t c = 0; c < k; ++c)
                    if (c != j) row.emplace_back(static_cast<long>(r[c]));
                m.push_back(std::move(row));
            }
            Integer d = bareiss_det(m);
            v[j] = to_int64(d) * ((j % 2) ? -1 : 1);
        }
    }
    std::int64_t g = 0;
    for (auto x : v) g = gcd64(g, x);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

// rank over Q
inline std::size_t rank(std::vector<std::vector<Rational>> a) {
    std::size_t r = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[r], a[p]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

inline std::size_t rank(const std::vector<std::vector<std::int64_t>>& a) {
    std::vector<std::vector<Rational>> q;
    for (const auto& r : a) {
        std::vector<Rational> row;
        for (auto x : r) row.emplace_back(static_cast<long>(x));
        q.push_back(std::move(row));
    }
    return rank(std::move(q));
}

// solve A x = b over Q (A square, nonsingular)
inline std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        require(p < n, Errc::internal, "singular system");
        std::swap(a[c], a[p]);
        std::swap(b[c], b[p]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
    return b;
}

// basis of the integer kernel {x in Z^n : A x = 0}, which is a saturated lattice.
// column-style Hermite reduction with a unimodular transform.
inline std::vector<std::vector<std::int64_t>> integer_kernel(const std::vector<std::vector<std::int64_t>>& a, std::size_t n) {
    Matrix<Integer> m;
    for (const auto& r : a) {
        std::vector<Integer> row;
        for (auto x : r) row.emplace_back(static_cast<long>(x));
        m.push_back(std::move(row));
    }
    Matrix<Integer> u(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
    auto colop = [&](std::size_t dst, std::size_t src, const Integer& f) {
        for (auto& row : m) row[dst] -= f * row[src];
        for (auto& row : u) row[dst] -= f * row[src];
    };
    auto swapcol = [&](std::size_t x, std::size_t y) {
        for (auto& row : m) std::swap(row[x], row[y]);
        for (auto& row : u) std::swap(row[x], row[y]);
    };
    std::size_t piv = 0;
    for (std::size_t r = 0; r < m.size() && piv < n; ++r) {
        // euclid across columns piv..n-1 on row r
        for (;;) {
            std::size_t best = n;
            for (std::size_t c = piv; c < n; ++c)
                if (m[r][c] != 0 && (best == n || abs(m[r][c]) < abs(m[r][best]))) best = c;
            if (best == n) break;
            swapcol(piv, best);
            bool done = true;
            for (std::size_t c = piv + 1; c < n; ++c) {
                if (m[r][c] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[r][piv].get_mpz_t());
                colop(c, piv, q);
                if (m[r][c] != 0) done = false;
            }
            if (done) {
                ++piv;
                break;
            }
        }
    }
    std::vector<std::vector<std::int64_t>> basis;
    for (std::size_t c = piv; c < n; ++c) {
        std::vector<std::int64_t> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(to_int64(u[i][c]));
        basis.push_back(std::move(v));
    }
    return basis;
}

}// namespace nfilt::detail
