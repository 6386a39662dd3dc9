#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace d4u {

// Exact rational number on 64-bit integers. All intermediates are computed
// in 128 bits; a result that does not fit in 64 bits after reduction throws
// std::overflow_error. The magnitudes reachable in this project (character
// values bounded by q^4, inner-product numerators bounded by q^20 for q <= 5)
// stay far below the limit.
class Rat {
public:
    constexpr Rat() = default;
    constexpr Rat(long long n) : num_(n) {}
    Rat(long long n, long long d) { assign(n, d); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return make128((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                       (__int128)a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return make128((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
                       (__int128)a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return make128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }
    Rat operator-() const { Rat r; r.num_ = -num_; r.den_ = den_; return r; }

    Rat& operator+=(const Rat& b) { *this = *this + b; return *this; }
    Rat& operator-=(const Rat& b) { *this = *this - b; return *this; }
    Rat& operator*=(const Rat& b) { *this = *this * b; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    long long num_ = 0;
    long long den_ = 1;

    void assign(long long n, long long d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        num_ = n;
        den_ = d;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a;
    }

    static Rat make128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr __int128 lo = -(__int128)INT64_MAX - 1, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("Rat: 64-bit overflow");
        Rat r;
        r.num_ = (long long)n;
        r.den_ = (long long)d;
        return r;
    }
};

}  // namespace d4u
