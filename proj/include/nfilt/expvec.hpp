#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace nfilt {

inline constexpr std::size_t kMaxDim = 6;

// exponent vector, coordinates >= 0
class ExpVec {
public:
    ExpVec() = default;

    explicit ExpVec(std::size_t n) : n_(static_cast<std::uint8_t>(n)) {
        require(n >= 1 && n <= kMaxDim, Errc::invalid_argument, "dimension must be in 1..6");
    }

    ExpVec(std::initializer_list<int> c) : ExpVec(c.size()) {
        std::size_t i = 0;
        for (int v : c) set(i++, v);
    }

    explicit ExpVec(std::span<const int> c) : ExpVec(c.size()) {
        for (std::size_t i = 0; i < c.size(); ++i) set(i, c[i]);
    }

    static ExpVec unit(std::size_t n, std::size_t i, int power = 1) {
        ExpVec e(n);
        e.set(i, power);
        return e;
    }

    std::size_t size() const { return n_; }
    int operator[](std::size_t i) const { return c_[i]; }

    void set(std::size_t i, int v) {
        require(i < n_, Errc::invalid_argument, "axis out of range");
        require(v >= 0, Errc::invalid_argument, "negative exponent");
        c_[i] = v;
    }

    std::span<const int> coords() const { return {c_.data(), n_}; }

    std::int64_t total() const {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < n_; ++i) s += c_[i];
        return s;
    }

    bool is_zero() const { return total() == 0; }

    ExpVec operator+(const ExpVec& o) const {
        require(n_ == o.n_, Errc::dimension_mismatch, "exponent dimension mismatch");
        ExpVec r = *this;
        for (std::size_t i = 0; i < n_; ++i) r.c_[i] += o.c_[i];
        return r;
    }

    ExpVec scaled(int s) const {
        ExpVec r = *this;
        for (std::size_t i = 0; i < n_; ++i) r.c_[i] *= s;
        return r;
    }

    // this <= o coordinatewise
    bool divides(const ExpVec& o) const {
        for (std::size_t i = 0; i < n_; ++i)
            if (c_[i] > o.c_[i]) return false;
        return true;
    }

    friend auto operator<=>(const ExpVec&, const ExpVec&) = default;
    friend bool operator==(const ExpVec&, const ExpVec&) = default;

private:
    std::array<std::int32_t, kMaxDim> c_{};
    std::uint8_t n_ = 0;
};

struct ExpVecHash {
    std::size_t operator()(const ExpVec& e) const noexcept {
        std::size_t h = e.size();
        for (int c : e.coords()) h = h * 1000003u ^ static_cast<std::size_t>(c);
        return h;
    }
};

using IntVec = std::vector<std::int64_t>;

inline std::int64_t dot(const IntVec& v, const ExpVec& k) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < k.size(); ++i) s += v[i] * k[i];
    return s;
}

inline std::string to_string(const ExpVec& e) {
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + ")";
}

inline std::string to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

inline std::ostream& operator<<(std::ostream& os, const ExpVec& e) { return os << to_string(e); }

}// namespace nfilt
