#include "d4u/gf.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace d4u {

bool is_prime(long long m) {
    if (m < 2) return false;
    for (long long d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

namespace {

using Poly = std::vector<int>;  // constant term first, coefficients in [0,p)

int degree(const Poly& a) {
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (a[(size_t)i] != 0) return i;
    return -1;
}

// a mod b over GF(p); b monic of positive degree
Poly poly_mod(Poly a, const Poly& b, int p) {
    int db = degree(b);
    for (int i = degree(a); i >= db; --i) {
        int c = a[(size_t)i];
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) {
            int& x = a[(size_t)(i - db + j)];
            x = ((x - c * b[(size_t)j]) % p + p) % p;
        }
    }
    a.resize((size_t)std::max(db, 1));
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

bool divides(const Poly& d, const Poly& a, int p) {
    Poly r = poly_mod(a, d, p);
    return degree(r) < 0;
}

// Exhaustive: no monic divisor of degree 1..deg/2.
bool poly_irreducible(const Poly& m, int p) {
    int n = degree(m);
    if (n <= 0) return false;
    if (n == 1) return true;
    for (int d = 1; 2 * d <= n; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long c = 0; c < count; ++c) {
            Poly f((size_t)d + 1, 0);
            long long t = c;
            for (int i = 0; i < d; ++i) { f[(size_t)i] = (int)(t % p); t /= p; }
            f[(size_t)d] = 1;
            if (divides(f, m, p)) return false;
        }
    }
    return true;
}

const std::map<int, Poly>& default_moduli() {
    // Conway polynomials, constant term first.
    static const std::map<int, Poly> table = {
        {4, {1, 1, 1}},     {8, {1, 1, 0, 1}},  {16, {1, 1, 0, 0, 1}},
        {9, {2, 2, 1}},     {27, {1, 2, 0, 1}}, {25, {2, 4, 1}},
    };
    return table;
}

}  // namespace

Field::Field(int p, int n, std::vector<int> modulus)
    : p_(p), n_(n), mod_(std::move(modulus)) {
    if (!is_prime(p)) throw std::invalid_argument("Field: p must be prime");
    if (n < 1) throw std::invalid_argument("Field: n must be >= 1");
    long long q = 1;
    for (int i = 0; i < n; ++i) {
        q *= p;
        if (q > 256) throw std::invalid_argument("Field: q > 256 unsupported");
    }
    q_ = (int)q;
    if ((int)mod_.size() != n + 1)
        throw std::invalid_argument("Field: modulus degree != n");
    for (int& c : mod_) {
        c %= p;
        if (c < 0) c += p;
    }
    if (mod_[(size_t)n] != 1)
        throw std::invalid_argument("Field: modulus must be monic");
    if (!poly_irreducible(mod_, p))
        throw std::invalid_argument("Field: modulus is reducible");
    build_tables();
}

Field Field::make(int p, int n) {
    if (n == 1) return Field(p, 1, {0, 1});
    long long q = 1;
    for (int i = 0; i < n; ++i) q *= p;
    auto it = default_moduli().find((int)q);
    if (it == default_moduli().end())
        throw std::invalid_argument(
            "Field: no default modulus for q=" + std::to_string(q) +
            "; supply one explicitly");
    return Field(p, n, it->second);
}

Field Field::make(int p, int n, std::vector<int> modulus) {
    return Field(p, n, std::move(modulus));
}

Field Field::of_order(int q) {
    if (q < 2) throw std::invalid_argument("Field: q must be >= 2");
    int p = 2;
    while (q % p != 0) ++p;
    int n = 0;
    int m = q;
    while (m % p == 0) { m /= p; ++n; }
    if (m != 1)
        throw std::invalid_argument("Field: q is not a prime power");
    return make(p, n);
}

std::vector<int> Field::coeffs(fe a) const {
    // lex rank: c_0 is the most significant base-p digit
    std::vector<int> c((size_t)n_);
    int x = a;
    for (int i = n_ - 1; i >= 0; --i) {
        c[(size_t)i] = x % p_;
        x /= p_;
    }
    return c;
}

fe Field::from_coeffs(std::span<const int> c) const {
    if ((int)c.size() != n_)
        throw std::invalid_argument("Field: coefficient vector length != n");
    int idx = 0;
    for (int i = 0; i < n_; ++i) {
        int ci = c[(size_t)i] % p_;
        if (ci < 0) ci += p_;
        idx = idx * p_ + ci;
    }
    return (fe)idx;
}

fe Field::from_int(long long a) const {
    a %= p_;
    if (a < 0) a += p_;
    std::vector<int> c((size_t)n_, 0);
    c[0] = (int)a;
    return from_coeffs(c);
}

fe Field::inv(fe a) const {
    if (a == 0) throw std::domain_error("Field: inverse of zero");
    return inv_[a];
}

void Field::build_tables() {
    add_.resize((size_t)q_ * q_);
    mul_.resize((size_t)q_ * q_);
    neg_.resize((size_t)q_);
    inv_.resize((size_t)q_, 0);
    trace_.resize((size_t)q_);

    std::vector<std::vector<int>> vec((size_t)q_);
    for (int a = 0; a < q_; ++a) vec[(size_t)a] = coeffs((fe)a);
    one_ = from_int(1);

    for (int a = 0; a < q_; ++a) {
        std::vector<int> nc((size_t)n_);
        for (int i = 0; i < n_; ++i)
            nc[(size_t)i] = (p_ - vec[(size_t)a][(size_t)i]) % p_;
        neg_[(size_t)a] = from_coeffs(nc);
        for (int b = 0; b < q_; ++b) {
            std::vector<int> sc((size_t)n_);
            for (int i = 0; i < n_; ++i)
                sc[(size_t)i] =
                    (vec[(size_t)a][(size_t)i] + vec[(size_t)b][(size_t)i]) % p_;
            add_[(size_t)a * q_ + b] = from_coeffs(sc);
            Poly prod = poly_mod(poly_mul(vec[(size_t)a], vec[(size_t)b], p_),
                                 mod_, p_);
            prod.resize((size_t)n_, 0);
            mul_[(size_t)a * q_ + b] = from_coeffs(prod);
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul_[(size_t)a * q_ + b] == one_) inv_[(size_t)a] = (fe)b;

    // Tr(a) = sum of Frobenius images; the result lies in the prime field.
    for (int a = 0; a < q_; ++a) {
        fe frob = (fe)a, acc = (fe)a;
        for (int i = 1; i < n_; ++i) {
            fe f = frob;
            for (int e = 1; e < p_; ++e) f = mul(f, frob);  // frob^p
            frob = f;
            acc = add(acc, frob);
        }
        auto c = coeffs(acc);
        for (int i = 1; i < n_; ++i)
            if (c[(size_t)i] != 0)
                throw std::logic_error("Field: trace not in prime field");
        trace_[(size_t)a] = c[0];
    }
}

void FieldElem::check(const FieldElem& a, const FieldElem& b) {
    if (a.field == nullptr || b.field == nullptr || *a.field != *b.field)
        throw std::invalid_argument("FieldElem: mixed-field operands");
}

}  // namespace d4u
