#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "expvec.hpp"
#include "rational.hpp"

namespace nfilt {

class Poly {
public:
    using Terms = std::map<ExpVec, Rational>;

    explicit Poly(std::size_t n = 1) : n_(n) {
        require(n >= 1 && n <= kMaxDim, Errc::invalid_argument, "dimension must be in 1..6");
    }

    static Poly monomial(const ExpVec& k, const Rational& c = 1) {
        Poly p(k.size());
        p.add_term(k, c);
        return p;
    }

    static Poly constant(std::size_t n, const Rational& c) { return monomial(ExpVec(n), c); }

    std::size_t dim() const { return n_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    void add_term(const ExpVec& k, const Rational& c) {
        require(k.size() == n_, Errc::dimension_mismatch, "term dimension mismatch");
        if (c == 0) return;
        auto [it, fresh] = terms_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coeff(const ExpVec& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Poly& operator+=(const Poly& o) {
        require(n_ == o.n_, Errc::dimension_mismatch, "polynomial dimension mismatch");
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        require(n_ == o.n_, Errc::dimension_mismatch, "polynomial dimension mismatch");
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        require(a.n_ == b.n_, Errc::dimension_mismatch, "polynomial dimension mismatch");
        Poly r(a.n_);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
        return r;
    }

    Poly scaled(const Rational& s) const {
        Poly r(n_);
        if (s == 0) return r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
        return r;
    }

    Poly pow(unsigned e) const {
        Poly r = constant(n_, 1), b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r = r * b;
            if (e > 1) b = b * b;
        }
        return r;
    }

    Rational eval(std::span<const Rational> x) const {
        require(x.size() == n_, Errc::dimension_mismatch, "evaluation point dimension");
        Rational s = 0;
        for (const auto& [k, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < n_; ++i) {
                Rational p;
                mpz_pow_ui(p.get_num_mpz_t(), x[i].get_num_mpz_t(), k[i]);
                mpz_pow_ui(p.get_den_mpz_t(), x[i].get_den_mpz_t(), k[i]);
                p.canonicalize();
                t *= p;
            }
            s += t;
        }
        return s;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

private:
    std::size_t n_;
    Terms terms_;
};

inline std::set<ExpVec> support(const Poly& h) {
    std::set<ExpVec> s;
    for (const auto& [k, c] : h.terms()) s.insert(k);
    return s;
}

// axis is 0-based
inline Poly partial_derivative(const Poly& h, std::size_t axis) {
    require(axis < h.dim(), Errc::invalid_argument, "axis out of range");
    Poly r(h.dim());
    for (const auto& [k, c] : h.terms()) {
        if (k[axis] == 0) continue;
        ExpVec d = k;
        d.set(axis, k[axis] - 1);
        r.add_term(d, c * k[axis]);
    }
    return r;
}

inline std::vector<Poly> gradient(const Poly& f) {
    std::vector<Poly> g;
    for (std::size_t i = 0; i < f.dim(); ++i) g.push_back(partial_derivative(f, i));
    return g;
}

inline std::vector<std::string> default_names(std::size_t n) {
    static const char* small[] = {"x", "y", "z", "t", "u", "v"};
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(small[i]);
    return v;
}

// highest total degree first; parses back to an equal Poly
inline std::string to_string(const Poly& h, std::span<const std::string> names) {
    if (h.is_zero()) return "0";
    std::vector<std::pair<ExpVec, Rational>> ts(h.terms().begin(), h.terms().end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        if (a.first.total() != b.first.total()) return a.first.total() > b.first.total();
        return a.first > b.first;
    });
    std::string s;
    bool first = true;
    for (const auto& [k, c] : ts) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        first = false;
        bool unit = k.is_zero();
        std::string mono;
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (k[i] > 1) mono += "^" + std::to_string(k[i]);
        }
        if (unit) {
            s += a.get_str();
        } else if (a == 1) {
            s += mono;
        } else {
            s += a.get_str() + "*" + mono;
        }
    }
    return s;
}

inline std::string to_string(const Poly& h) {
    auto names = default_names(h.dim());
    return to_string(h, names);
}

}// namespace nfilt
