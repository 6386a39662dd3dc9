#include "d4u/cyclotomic.hpp"

#include <stdexcept>

namespace d4u {

void Cyc::check_same(const Cyc& a, const Cyc& b) {
    if (a.p_ != b.p_)
        throw std::invalid_argument("Cyc: mixed cyclotomic orders");
}

// coeff * zeta^k added in place, with zeta^(p-1) folded onto the basis.
void Cyc::add_zeta_pow(long long k, const Rat& coeff) {
    k %= p_;
    if (k < 0) k += p_;
    if (k < p_ - 1) {
        c_[(size_t)k] += coeff;
    } else {
        for (int i = 0; i < p_ - 1; ++i) c_[(size_t)i] -= coeff;
    }
}

Cyc Cyc::zeta_pow(int p, long long k) {
    Cyc x(p);
    x.add_zeta_pow(k, Rat(1));
    return x;
}

bool Cyc::is_zero() const {
    for (const Rat& r : c_)
        if (!r.is_zero()) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rat Cyc::rat_value() const {
    if (!is_rational()) throw std::domain_error("Cyc: not rational");
    return c_[0];
}

Cyc Cyc::conj() const {
    Cyc r(p_);
    r.c_[0] = c_[0];
    for (int k = 1; k < p_ - 1; ++k) r.add_zeta_pow(p_ - k, c_[(size_t)k]);
    return r;
}

Cyc Cyc::scaled(const Rat& s) const {
    Cyc r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
    return r;
}

Cyc operator+(const Cyc& a, const Cyc& b) {
    Cyc::check_same(a, b);
    Cyc r(a.p_);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

Cyc operator-(const Cyc& a, const Cyc& b) {
    Cyc::check_same(a, b);
    Cyc r(a.p_);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
    Cyc::check_same(a, b);
    Cyc r(a.p_);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.add_zeta_pow((long long)(i + j), a.c_[i] * b.c_[j]);
        }
    }
    return r;
}

std::string Cyc::str() const {
    std::string s = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += c_[i].str();
    }
    s += "]";
    return s;
}

}  // namespace d4u
