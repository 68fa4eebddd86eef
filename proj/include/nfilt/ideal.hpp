#pragma once

#include <algorithm>
#include <vector>

#include "poly.hpp"

namespace nfilt {

class MonomialIdeal {
public:
    explicit MonomialIdeal(std::size_t n = 1, std::vector<ExpVec> gens = {}) : n_(n), gens_(std::move(gens)) {
        require(n >= 1 && n <= kMaxDim, Errc::invalid_argument, "dimension must be in 1..6");
        for (const auto& g : gens_) require(g.size() == n_, Errc::dimension_mismatch, "generator dimension mismatch");
        normalize();
    }

    static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
    static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {ExpVec(n)}); }

    // m^r
    static MonomialIdeal max_power(std::size_t n, int r) {
        require(r >= 0, Errc::invalid_argument, "negative power");
        std::vector<ExpVec> g;
        ExpVec k(n);
        auto rec = [&](auto&& self, std::size_t i, int left) -> void {
            if (i + 1 == n) {
                k.set(i, left);
                g.push_back(k);
                return;
            }
            for (int a = 0; a <= left; ++a) {
                k.set(i, a);
                self(self, i + 1, left - a);
            }
        };
        rec(rec, 0, r);
        return MonomialIdeal(n, std::move(g));
    }

    std::size_t dim() const { return n_; }
    const std::vector<ExpVec>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_zero(); }

    bool contains(const ExpVec& k) const {
        for (const auto& g : gens_)
            if (g.divides(k)) return true;
        return false;
    }

    // pure power exponent on each axis, or -1
    std::vector<int> axis_powers() const {
        std::vector<int> a(n_, -1);
        for (const auto& g : gens_) {
            int nz = 0;
            std::size_t at = 0;
            for (std::size_t i = 0; i < n_; ++i)
                if (g[i]) ++nz, at = i;
            if (nz == 0) std::fill(a.begin(), a.end(), 0);
            else if (nz == 1 && (a[at] < 0 || g[at] < a[at])) a[at] = g[at];
        }
        return a;
    }

    bool finite_colength() const {
        if (is_zero()) return false;
        auto a = axis_powers();
        return std::all_of(a.begin(), a.end(), [](int v) { return v >= 0; });
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    void normalize() {
        std::sort(gens_.begin(), gens_.end());
        gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
        std::vector<ExpVec> keep;
        for (const auto& g : gens_) {
            bool redundant = false;
            for (const auto& h : gens_)
                if (h != g && h.divides(g)) {
                    redundant = true;
                    break;
                }
            if (!redundant) keep.push_back(g);
        }
        gens_ = std::move(keep);
    }

    std::size_t n_;
    std::vector<ExpVec> gens_;
};

inline MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    require(a.dim() == b.dim(), Errc::dimension_mismatch, "ideal dimension mismatch");
    std::vector<ExpVec> g;
    for (const auto& p : a.gens())
        for (const auto& q : b.gens()) g.push_back(p + q);
    return MonomialIdeal(a.dim(), std::move(g));
}

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    require(a.dim() == b.dim(), Errc::dimension_mismatch, "ideal dimension mismatch");
    std::vector<ExpVec> g = a.gens();
    g.insert(g.end(), b.gens().begin(), b.gens().end());
    return MonomialIdeal(a.dim(), std::move(g));
}

inline MonomialIdeal power(const MonomialIdeal& a, int s) {
    require(s >= 1, Errc::invalid_argument, "power must be >= 1");
    MonomialIdeal r = a;
    for (int i = 1; i < s; ++i) r = product(r, a);
    return r;
}

inline MonomialIdeal add_m_power(const MonomialIdeal& a, int r) {
    require(r >= 1, Errc::invalid_argument, "radius must be >= 1");
    return sum(a, MonomialIdeal::max_power(a.dim(), r));
}

// ideal of O_n given by explicit polynomial generators
class Ideal {
public:
    explicit Ideal(std::size_t n = 1, std::vector<Poly> gens = {}) : n_(n) {
        for (auto& g : gens) {
            require(g.dim() == n_, Errc::dimension_mismatch, "generator dimension mismatch");
            if (!g.is_zero()) gens_.push_back(std::move(g));
        }
    }

    Ideal(const MonomialIdeal& m) : n_(m.dim()) {  // NOLINT: implicit by design
        for (const auto& k : m.gens()) gens_.push_back(Poly::monomial(k));
    }

    static Ideal principal(const Poly& g) { return Ideal(g.dim(), {g}); }

    std::size_t dim() const { return n_; }
    const std::vector<Poly>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    bool is_monomial() const {
        return std::all_of(gens_.begin(), gens_.end(), [](const Poly& g) { return g.is_monomial(); });
    }

    MonomialIdeal monomial() const {
        require(is_monomial(), Errc::invalid_argument, "ideal is not monomial");
        std::vector<ExpVec> k;
        for (const auto& g : gens_) k.push_back(g.terms().begin()->first);
        return MonomialIdeal(n_, std::move(k));
    }

    // monomial ideal of all support monomials
    MonomialIdeal support_ideal() const {
        std::vector<ExpVec> k;
        for (const auto& g : gens_)
            for (const auto& [e, c] : g.terms()) k.push_back(e);
        return MonomialIdeal(n_, std::move(k));
    }

    std::vector<ExpVec> support_points() const {
        std::set<ExpVec> s;
        for (const auto& g : gens_)
            for (const auto& [e, c] : g.terms()) s.insert(e);
        return {s.begin(), s.end()};
    }

    bool is_proper() const {
        for (const auto& g : gens_)
            if (g.coeff(ExpVec(n_)) != 0) return false;
        return true;
    }

    friend bool operator==(const Ideal& a, const Ideal& b) { return a.n_ == b.n_ && a.gens_ == b.gens_; }

private:
    std::size_t n_;
    std::vector<Poly> gens_;
};

inline Ideal sum(const Ideal& a, const Ideal& b) {
    require(a.dim() == b.dim(), Errc::dimension_mismatch, "ideal dimension mismatch");
    if (a.is_monomial() && b.is_monomial()) return sum(a.monomial(), b.monomial());
    std::vector<Poly> g = a.gens();
    g.insert(g.end(), b.gens().begin(), b.gens().end());
    return Ideal(a.dim(), std::move(g));
}

inline Ideal power(const Ideal& a, int s) {
    require(s >= 1, Errc::invalid_argument, "power must be >= 1");
    if (a.is_monomial()) return power(a.monomial(), s);
    if (a.gens().size() == 1) return Ideal::principal(a.gens()[0].pow(static_cast<unsigned>(s)));
    std::vector<Poly> cur = a.gens();
    for (int i = 1; i < s; ++i) {
        std::vector<Poly> next;
        for (const auto& p : cur)
            for (const auto& q : a.gens()) next.push_back(p * q);
        cur = std::move(next);
    }
    return Ideal(a.dim(), std::move(cur));
}

// n ideals in dimension n
class IdealTuple {
public:
    IdealTuple() = default;

    explicit IdealTuple(std::vector<Ideal> items) : items_(std::move(items)) {
        require(!items_.empty(), Errc::invalid_argument, "empty ideal tuple");
        for (const auto& I : items_) {
            require(I.dim() == items_.size(), Errc::dimension_mismatch, "tuple length must equal the dimension");
            require(!I.is_zero(), Errc::invalid_argument, "zero ideal in tuple");
        }
    }

    static IdealTuple diagonal(const Ideal& I) { return IdealTuple(std::vector<Ideal>(I.dim(), I)); }

    static IdealTuple of_map(const std::vector<Poly>& g) {
        std::vector<Ideal> v;
        for (const auto& p : g) v.push_back(Ideal::principal(p));
        return IdealTuple(std::move(v));
    }

    std::size_t dim() const { return items_.size(); }
    std::size_t size() const { return items_.size(); }
    const Ideal& operator[](std::size_t i) const { return items_[i]; }
    const std::vector<Ideal>& items() const { return items_; }

    bool is_monomial() const {
        return std::all_of(items_.begin(), items_.end(), [](const Ideal& I) { return I.is_monomial(); });
    }

    bool is_principal() const {
        return std::all_of(items_.begin(), items_.end(), [](const Ideal& I) { return I.gens().size() == 1; });
    }

    IdealTuple with(std::size_t slot, const Ideal& I) const {
        auto v = items_;
        v.at(slot) = I;
        return IdealTuple(std::move(v));
    }

    IdealTuple powered(int s) const {
        std::vector<Ideal> v;
        for (const auto& I : items_) v.push_back(power(I, s));
        return IdealTuple(std::move(v));
    }

    IdealTuple plus(const Ideal& J) const {
        std::vector<Ideal> v;
        for (const auto& I : items_) v.push_back(sum(I, J));
        return IdealTuple(std::move(v));
    }

private:
    std::vector<Ideal> items_;
};

}// namespace nfilt
