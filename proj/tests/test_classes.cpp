#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "d4u/classes.hpp"

using namespace d4u;

TEST_CASE("class-count polynomials") {
    CHECK(class_count_polynomial(3, Parity::odd) == 753);
    CHECK(class_count_polynomial(2, Parity::even) == 103);
    CHECK(class_count_polynomial(4, Parity::even) == 3259);
    CHECK(class_count_polynomial(5, Parity::odd) == 8785);
    CHECK_THROWS(class_count_polynomial(3, Parity::even));
    CHECK_THROWS(class_count_polynomial(2, Parity::odd));
}

TEST_CASE("conjugacy classes of U(2) and U(3)") {
    for (int q : {2, 3}) {
        Field f = Field::of_order(q);
        Group g(f);
        ClassData serial = conjugacy_classes_serial(g);
        ClassOptions par;
        par.parallel = true;
        ClassData parallel = conjugacy_classes(g, {}, par);

        long long want = class_count_polynomial(q, parity_of(q));
        CHECK((long long)serial.count() == want);

        // the parallel kernel reproduces the serial reference exactly
        CHECK(parallel.count() == serial.count());
        CHECK(parallel.sizes == serial.sizes);
        CHECK(parallel.reps == serial.reps);
        CHECK(parallel.index_of == serial.index_of);

        // partition: sizes sum to the group order and are p-powers
        std::uint64_t total = 0;
        for (std::uint64_t s : serial.sizes) {
            total += s;
            std::uint64_t x = s;
            while (x % (unsigned)f.p() == 0) x /= (unsigned)f.p();
            CHECK(x == 1);
        }
        CHECK(total == serial.group_order);

        // identity is class 0 with size 1; singletons are exactly the center
        CHECK(serial.reps[0] == g.identity());
        CHECK(serial.sizes[0] == 1);
        int singletons = 0;
        for (std::size_t i = 0; i < serial.count(); ++i)
            if (serial.sizes[i] == 1) {
                ++singletons;
                CHECK((g.support(serial.reps[i]) - RootSet::of({12})).empty());
            }
        CHECK(singletons == q);

        // canonical representatives are minimal pack codes, ascending
        PackCodec codec = serial.codec();
        for (std::size_t i = 1; i < serial.count(); ++i)
            CHECK(codec.pack(serial.reps[i - 1]) < codec.pack(serial.reps[i]));

        // class_of is conjugation-invariant
        std::mt19937 rng(17);
        for (int it = 0; it < 300; ++it) {
            Coords a, h;
            for (int i = 0; i < kNumRoots; ++i) {
                a[(size_t)i] = (fe)(rng() % (unsigned)q);
                h[(size_t)i] = (fe)(rng() % (unsigned)q);
            }
            CHECK(serial.class_of(g, a) == serial.class_of(g, g.conj(a, h)));
        }

        // centralizer orders: orbit-stabilizer
        CHECK(serial.centralizer_order(0) == serial.group_order);
        CHECK(serial.centralizer_order(
                  serial.class_of(g, g.x(12, 1))) == serial.group_order);
        for (std::size_t i = 0; i < serial.count(); ++i)
            CHECK(serial.group_order % serial.sizes[i] == 0);
    }
}

TEST_CASE("abelianization has q^4 singleton classes") {
    for (int q : {2, 3, 5}) {
        Field f = Field::of_order(q);
        Group g(f);
        RootSet killed = RootSet::of({5, 6, 7, 8, 9, 10, 11, 12});
        ClassData cd = conjugacy_classes(g, Quotient(killed));
        CHECK((long long)cd.count() == (long long)q * q * q * q);
        for (std::uint64_t s : cd.sizes) CHECK(s == 1);
    }
}

TEST_CASE("quotient classes: serial equals parallel") {
    Field f = Field::make(3, 1);
    Group g(f);
    for (RootSet killed : {RootSet::of({11, 12}), RootSet::of({10, 11, 12}),
                           RootSet::of({9, 10, 11, 12})}) {
        ClassData a = conjugacy_classes_serial(g, Quotient(killed));
        ClassData b = conjugacy_classes(g, Quotient(killed));
        CHECK(a.reps == b.reps);
        CHECK(a.sizes == b.sizes);
        std::uint64_t total = 0;
        for (std::uint64_t s : a.sizes) total += s;
        CHECK(total == a.group_order);
    }
}

TEST_CASE("determinism") {
    Field f = Field::make(2, 1);
    Group g(f);
    ClassData a = conjugacy_classes(g);
    ClassData b = conjugacy_classes(g);
    CHECK(a.reps == b.reps);
    CHECK(a.sizes == b.sizes);
    CHECK(a.index_of == b.index_of);
}

TEST_CASE("state guard") {
    Field f = Field::make(5, 1);
    Group g(f);
    ClassOptions opts;
    opts.state_guard = 1 << 20;
    CHECK_THROWS(conjugacy_classes(g, {}, opts));  // 5^12 over the guard
    // a quotient fits
    ClassData cd = conjugacy_classes(
        g, Quotient(RootSet::of({8, 9, 10, 11, 12})), opts);
    CHECK(cd.group_order == 78125);  // 5^7
}
