#pragma once

#include "besk/common.hpp"

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace besk {

// Exact rational on int64 with lowest-terms normalization after every
// operation. Products go through 128-bit intermediates and are range-checked;
// the certificate chain must be exact at boundaries like (k-2)/2 * 2/(k-2).
class rational {
public:
    rational() = default;
    rational(std::int64_t value) : num_(value) {}
    rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    rational operator+(const rational& o) const {
        return from_i128(static_cast<__int128>(num_) * o.den_ +
                             static_cast<__int128>(o.num_) * den_,
                         static_cast<__int128>(den_) * o.den_);
    }
    rational operator-(const rational& o) const {
        return from_i128(static_cast<__int128>(num_) * o.den_ -
                             static_cast<__int128>(o.num_) * den_,
                         static_cast<__int128>(den_) * o.den_);
    }
    rational operator*(const rational& o) const {
        return from_i128(static_cast<__int128>(num_) * o.num_,
                         static_cast<__int128>(den_) * o.den_);
    }
    rational operator/(const rational& o) const {
        if (o.num_ == 0) throw error(errc::invalid_argument, "division by zero rational");
        return from_i128(static_cast<__int128>(num_) * o.den_,
                         static_cast<__int128>(den_) * o.num_);
    }
    rational& operator+=(const rational& o) { return *this = *this + o; }

    std::strong_ordering operator<=>(const rational& o) const {
        __int128 lhs = static_cast<__int128>(num_) * o.den_;
        __int128 rhs = static_cast<__int128>(o.num_) * den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    bool operator==(const rational& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    double approx() const { return static_cast<double>(num_) / static_cast<double>(den_); }

private:
    static rational from_i128(__int128 n, __int128 d) {
        if (d == 0) throw error(errc::invalid_argument, "zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi)
            throw error(errc::too_large, "rational out of 64-bit range");
        rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        auto r = from_i128(num_, den_);
        num_ = r.num_;
        den_ = r.den_;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace besk
