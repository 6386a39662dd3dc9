#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "d4u/gf.hpp"

using namespace d4u;

TEST_CASE("field construction and defaults") {
    Field f2 = Field::make(2, 1);
    CHECK(f2.q() == 2);
    CHECK(f2.modulus() == std::vector<int>{0, 1});

    Field f4 = Field::make(2, 2);
    CHECK(f4.q() == 4);
    // only irreducible quadratic over GF(2)
    CHECK(f4.modulus() == std::vector<int>{1, 1, 1});

    Field f3 = Field::make(3, 1);
    CHECK(f3.q() == 3);

    CHECK_THROWS(Field::make(4, 1));              // composite p
    CHECK_THROWS(Field(2, 2, {1, 0, 1}));         // x^2+1 = (x+1)^2
    CHECK_THROWS(Field(2, 2, {0, 0, 1}));         // x^2 reducible
    CHECK_THROWS(Field(2, 2, {1, 1, 1, 1}));      // degree mismatch
    CHECK_THROWS(Field(2, 3, {1, 0, 0, 1}));      // x^3+1 = (x+1)(x^2+x+1)
    CHECK_NOTHROW(Field(2, 3, {1, 1, 0, 1}));
}

TEST_CASE("arithmetic examples") {
    Field f3 = Field::make(3, 1);
    CHECK(f3.add(2, 2) == 1);

    Field f4 = Field::make(2, 2);
    fe x = f4.from_coeffs(std::vector<int>{0, 1});
    fe xp1 = f4.from_coeffs(std::vector<int>{1, 1});
    CHECK(f4.mul(x, x) == xp1);  // x^2 = x+1 mod x^2+x+1

    Field f5 = Field::make(5, 1);
    CHECK(f5.inv(2) == 3);
    CHECK_THROWS(f5.inv(0));
}

TEST_CASE("mixed-field operands rejected") {
    Field f3 = Field::make(3, 1);
    Field f5 = Field::make(5, 1);
    FieldElem a{&f3, 1}, b{&f5, 1};
    CHECK_THROWS(a + b);
    FieldElem c{&f3, 2};
    CHECK((a + c).v == f3.add(1, 2));
}

TEST_CASE("field axioms exhaustively at small q") {
    for (int q : {2, 3, 4, 5, 8, 9}) {
        Field f = Field::of_order(q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add((fe)a, f.neg((fe)a)) == 0);
            if (a != 0) CHECK(f.mul((fe)a, f.inv((fe)a)) == f.one());
            for (int b = 0; b < q; ++b) {
                CHECK(f.add((fe)a, (fe)b) == f.add((fe)b, (fe)a));
                CHECK(f.mul((fe)a, (fe)b) == f.mul((fe)b, (fe)a));
                for (int c = 0; c < q; ++c) {
                    CHECK(f.mul((fe)a, f.add((fe)b, (fe)c)) ==
                          f.add(f.mul((fe)a, (fe)b), f.mul((fe)a, (fe)c)));
                    CHECK(f.mul(f.mul((fe)a, (fe)b), (fe)c) ==
                          f.mul((fe)a, f.mul((fe)b, (fe)c)));
                }
            }
        }
    }
}

TEST_CASE("trace") {
    Field f2 = Field::make(2, 1);
    CHECK(f2.trace(1) == 1);

    Field f4 = Field::make(2, 2);
    fe x = f4.from_coeffs(std::vector<int>{0, 1});
    CHECK(f4.trace(x) == 1);  // x + x^2 = x + (x+1) = 1

    Field f9 = Field::make(3, 2);
    CHECK(f9.trace(0) == 0);
    // additivity and the prime-field formula Tr(a) = n*a
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b)
            CHECK(f9.trace(f9.add((fe)a, (fe)b)) ==
                  (f9.trace((fe)a) + f9.trace((fe)b)) % 3);
    for (int a = 0; a < 3; ++a)
        CHECK(f9.trace(f9.from_int(a)) == (2 * a) % 3);
    // surjectivity
    for (int q : {2, 3, 4, 8, 9, 27}) {
        Field f = Field::of_order(q);
        std::vector<bool> hit((size_t)f.p(), false);
        for (int a = 0; a < q; ++a) hit[(size_t)f.trace((fe)a)] = true;
        for (bool h : hit) CHECK(h);
    }
}

TEST_CASE("additive character") {
    Field f2 = Field::make(2, 1);
    CHECK(f2.phi(0) == Cyc::one(2));
    CHECK(f2.phi(1) == Cyc::from_rat(2, Rat(-1)));

    Field f3 = Field::make(3, 1);
    CHECK(f3.phi(1) == Cyc::zeta_pow(3, 1));

    Field f4 = Field::make(2, 2);
    fe x = f4.from_coeffs(std::vector<int>{0, 1});
    // Tr(x^2) = Tr(x+1) = Tr(x) + Tr(1) = 1 + 0 = 1
    CHECK(f4.additive_character(x, x) == Cyc::from_rat(2, Rat(-1)));

    // phi(a)phi(b) = phi(a+b), and nontriviality
    for (int q : {2, 3, 4, 5, 9, 27}) {
        Field f = Field::of_order(q);
        bool nontrivial = false;
        for (int a = 0; a < q; ++a) {
            if (!(f.phi((fe)a) == Cyc::one(f.p()))) nontrivial = true;
            for (int b = 0; b < q; ++b)
                CHECK(f.phi((fe)a) * f.phi((fe)b) ==
                      f.phi(f.add((fe)a, (fe)b)));
        }
        CHECK(nontrivial);
    }
}

TEST_CASE("character orthogonality for q <= 27") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) {
        Field f = Field::of_order(q);
        for (int s = 0; s < q; ++s) {
            Cyc sum = Cyc::zero(f.p());
            for (int t = 0; t < q; ++t)
                sum += f.additive_character((fe)s, (fe)t);
            if (s == 0)
                CHECK(sum == Cyc::from_rat(f.p(), Rat(q)));
            else
                CHECK(sum.is_zero());
        }
    }
}

TEST_CASE("cyclotomic arithmetic") {
    // 1 + zeta + zeta^2 = 0 at p = 3
    Cyc z = Cyc::zeta_pow(3, 1), z2 = Cyc::zeta_pow(3, 2);
    CHECK(z + z2 == Cyc::from_rat(3, Rat(-1)));
    CHECK(z * z2 == Cyc::one(3));
    CHECK(Cyc::from_rat(2, Rat(-1)).conj() == Cyc::from_rat(2, Rat(-1)));

    // basis reduction at p = 5: zeta^4 = -(1+zeta+zeta^2+zeta^3)
    Cyc z4 = Cyc::zeta_pow(5, 4);
    Cyc sum = Cyc::zero(5);
    for (int k = 0; k < 4; ++k) sum += Cyc::zeta_pow(5, k);
    CHECK(z4 + sum == Cyc::zero(5));

    // conj is a ring involution; multiplication commutes and distributes
    for (int p : {2, 3, 5}) {
        std::vector<Cyc> sample;
        for (int k = 0; k < p; ++k) sample.push_back(Cyc::zeta_pow(p, k));
        sample.push_back(Cyc::from_rat(p, Rat(3, 2)));
        sample.push_back(Cyc::zeta_pow(p, 1).scaled(Rat(-2)) + Cyc::one(p));
        for (const Cyc& a : sample)
            for (const Cyc& b : sample) {
                CHECK(a * b == b * a);
                CHECK((a * b).conj() == a.conj() * b.conj());
                CHECK(a.conj().conj() == a);
                for (const Cyc& c : sample)
                    CHECK(a * (b + c) == a * b + a * c);
            }
    }

    // zeta^k * conj(zeta^k) = 1
    for (int k = 0; k < 5; ++k)
        CHECK(Cyc::zeta_pow(5, k) * Cyc::zeta_pow(5, k).conj() == Cyc::one(5));
}

TEST_CASE("rationals") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(1, -2) == Rat(-1, 2));
    CHECK((Rat(3, 7) * Rat(7, 3)) == Rat(1));
    CHECK_THROWS(Rat(1, 0));
    CHECK(Rat(1, 3).str() == "1/3");
    CHECK(Rat(-4).str() == "-4");
}

TEST_CASE("element enumeration order") {
    // lexicographic on coefficient vectors, constant term first
    Field f4 = Field::make(2, 2);
    CHECK(f4.coeffs(0) == std::vector<int>{0, 0});
    CHECK(f4.coeffs(1) == std::vector<int>{0, 1});
    CHECK(f4.coeffs(2) == std::vector<int>{1, 0});
    CHECK(f4.coeffs(3) == std::vector<int>{1, 1});
    CHECK(f4.one() == 2);
    // prime fields enumerate as residues
    Field f5 = Field::make(5, 1);
    for (int a = 0; a < 5; ++a) CHECK(f5.from_int(a) == (fe)a);
}
