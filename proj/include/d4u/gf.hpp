#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "d4u/cyclotomic.hpp"

namespace d4u {

// Element index into a Field's canonical enumeration (see Field).
using fe = std::uint8_t;

// GF(p^n) with exact table-driven arithmetic.
//
// Elements are coefficient vectors (c_0, ..., c_{n-1}) with respect to the
// power basis of the modulus, c_0 the constant term. They are enumerated in
// lexicographic order of the coefficient vector; an element's index in that
// enumeration is its `fe` value and the order used everywhere an element
// ordering matters (packing, canonical representatives, the t_{c,d,e,f}
// choice). For prime fields the index is just the residue.
//
// The modulus is given constant-term first and must be monic and irreducible;
// construction verifies irreducibility by exhaustive trial division, which is
// instant at the degrees in scope. Built-in defaults (Conway polynomials) are
// provided for q in {2,3,4,5,7,8,9,16,25,27} and any prime q.
class Field {
public:
    Field(int p, int n, std::vector<int> modulus);
    static Field make(int p, int n);                           // default modulus
    static Field make(int p, int n, std::vector<int> modulus); // explicit
    static Field of_order(int q);                              // factors q = p^n

    int p() const { return p_; }
    int n() const { return n_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return mod_; }

    fe zero() const { return 0; }
    fe one() const { return one_; }

    fe add(fe a, fe b) const { return add_[(size_t)a * q_ + b]; }
    fe sub(fe a, fe b) const { return add_[(size_t)a * q_ + neg_[b]]; }
    fe mul(fe a, fe b) const { return mul_[(size_t)a * q_ + b]; }
    fe neg(fe a) const { return neg_[a]; }
    fe inv(fe a) const;
    // sign * a with sign in {+1, -1}
    fe signed_of(int sign, fe a) const { return sign > 0 ? a : neg_[a]; }

    // Tr(a) = a + a^p + ... + a^(p^(n-1)), as a residue in [0, p).
    int trace(fe a) const { return trace_[a]; }

    // The fixed additive character phi(a) = zeta_p^Tr(a).
    Cyc phi(fe a) const { return Cyc::zeta_pow(p_, trace_[a]); }
    // phi(s*t), the character phi_{alpha,s} evaluated at x_alpha(t).
    Cyc additive_character(fe s, fe t) const { return phi(mul(s, t)); }

    std::vector<int> coeffs(fe a) const;
    fe from_coeffs(std::span<const int> c) const;
    // Embeds a residue from the prime field.
    fe from_int(long long a) const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.p_ == b.p_ && a.n_ == b.n_ && a.mod_ == b.mod_;
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

private:
    int p_, n_, q_;
    std::vector<int> mod_;
    fe one_;
    std::vector<fe> add_, mul_, neg_, inv_;
    std::vector<int> trace_;

    void build_tables();
};

// Checked element wrapper for user-facing arithmetic; mixing operands from
// different fields throws.
struct FieldElem {
    const Field* field = nullptr;
    fe v = 0;

    friend FieldElem operator+(FieldElem a, FieldElem b) {
        check(a, b);
        return {a.field, a.field->add(a.v, b.v)};
    }
    friend FieldElem operator-(FieldElem a, FieldElem b) {
        check(a, b);
        return {a.field, a.field->sub(a.v, b.v)};
    }
    friend FieldElem operator*(FieldElem a, FieldElem b) {
        check(a, b);
        return {a.field, a.field->mul(a.v, b.v)};
    }
    FieldElem operator-() const { return {field, field->neg(v)}; }
    FieldElem inverse() const { return {field, field->inv(v)}; }
    friend bool operator==(FieldElem a, FieldElem b) {
        check(a, b);
        return a.v == b.v;
    }

private:
    static void check(const FieldElem& a, const FieldElem& b);
};

bool is_prime(long long m);

}  // namespace d4u
