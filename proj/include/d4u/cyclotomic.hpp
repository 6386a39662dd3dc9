#pragma once

#include <vector>

#include "d4u/rational.hpp"

namespace d4u {

// Exact element of the p-th cyclotomic field Q(zeta_p), stored on the basis
// 1, zeta, ..., zeta^(p-2). The relation zeta^(p-1) = -(1 + zeta + ... +
// zeta^(p-2)) makes the representation unique, so equality is coefficient
// comparison. For p = 2 this degenerates to plain rationals.
class Cyc {
public:
    Cyc() : p_(2), c_(1) {}
    explicit Cyc(int p) : p_(p), c_(p - 1) {}

    static Cyc zero(int p) { return Cyc(p); }
    static Cyc one(int p) { return from_rat(p, Rat(1)); }
    static Cyc from_rat(int p, const Rat& r) {
        Cyc x(p);
        x.c_[0] = r;
        return x;
    }
    // zeta^k, k arbitrary (reduced mod p, and folded when k = p-1).
    static Cyc zeta_pow(int p, long long k);

    int p() const { return p_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rat_value() const;  // throws if not rational

    Cyc conj() const;  // zeta -> zeta^(-1)
    Cyc scaled(const Rat& r) const;

    friend Cyc operator+(const Cyc& a, const Cyc& b);
    friend Cyc operator-(const Cyc& a, const Cyc& b);
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    Cyc operator-() const { return Cyc(p_) - *this; }
    Cyc& operator+=(const Cyc& b) { *this = *this + b; return *this; }

    friend bool operator==(const Cyc& a, const Cyc& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    std::string str() const;

private:
    int p_;
    std::vector<Rat> c_;

    static void check_same(const Cyc& a, const Cyc& b);
    void add_zeta_pow(long long k, const Rat& coeff);
};

}  // namespace d4u
