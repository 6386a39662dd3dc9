#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "d4u/chars.hpp"

using namespace d4u;

namespace {

std::array<fe, kNumRoots> params_of(std::initializer_list<std::pair<int, int>> ps,
                                    const Field& f) {
    std::array<fe, kNumRoots> s{};
    for (auto [r, v] : ps) s[(size_t)(r - 1)] = f.from_int(v);
    return s;
}

}  // namespace

TEST_CASE("linear character validation") {
    Field f3 = Field::make(3, 1);
    Group g(f3);

    PatternSubgroup v12(f3, v_alpha(12));
    CHECK_NOTHROW(linear_character(g, v12, params_of({{12, 1}}, f3)));
    CHECK_NOTHROW(linear_character(g, v12, {}));  // trivial

    // H_12 contains 3+11 = 12 as a derived direction: s_12 must vanish
    PatternSubgroup h12(f3, hook(12));
    CHECK_NOTHROW(linear_character(g, h12, params_of({{3, 1}}, f3)));
    CHECK_THROWS(linear_character(g, h12, params_of({{3, 1}, {12, 1}}, f3)));

    // parameters outside the domain are rejected
    CHECK_THROWS(linear_character(g, h12, params_of({{1, 1}}, f3)));

    // validated characters are homomorphisms (exhaustive at q = 2)
    Field f2 = Field::make(2, 1);
    Group g2(f2);
    PatternSubgroup p(f2, v_alpha(11));
    LinearChar l = linear_character(
        g2, p, params_of({{11, 1}, {3, 1}, {5, 1}}, f2));
    auto elems = enumerate(g2, p);
    for (const Coords& a : elems)
        for (const Coords& b : elems)
            CHECK(linear_value(g2, l, g2.mul(a, b)) ==
                  linear_value(g2, l, a) * linear_value(g2, l, b));
}

TEST_CASE("induction: degrees, reference cross-check, reducible example") {
    Field f2 = Field::make(2, 1);
    Group g(f2);
    ClassData cd = conjugacy_classes(g);

    // midafi degrees are q^|leg|
    CHECK(midafi(g, 12, 1, cd).degree() == 16);
    CHECK(midafi(g, 11, 1, cd).degree() == 8);
    CHECK(midafi(g, 8, 1, cd).degree() == 4);
    CHECK(midafi(g, 5, 1, cd).degree() == 2);
    CHECK(midafi(g, 1, 1, cd).degree() == 1);

    // the transversal computation agrees with the full |G|-sum reference
    for (int alpha : {5, 8, 12}) {
        PatternSubgroup v(f2, v_alpha(alpha));
        std::array<fe, kNumRoots> s{};
        s[(size_t)(alpha - 1)] = 1;
        LinearChar l = linear_character(g, v, s);
        ClassFunction fast = induce(g, l, cd);
        ClassFunction ref = induce_full_sum(g, l, cd);
        CHECK(fast == ref);
    }

    // trivial character induced from U itself is trivial
    PatternSubgroup whole(f2, RootSet::all());
    ClassFunction triv = induce(g, linear_character(g, whole, {}), cd);
    for (const Cyc& v : triv.values()) CHECK(v == Cyc::one(2));

    // induction from the center is reducible with norm q^11
    PatternSubgroup z(f2, RootSet::of({12}));
    std::array<fe, kNumRoots> s{};
    s[11] = 1;
    ClassFunction big = induce(g, linear_character(g, z, s), cd);
    CHECK(big.degree() == 2048);
    CHECK_FALSE(is_irreducible(big));
    CHECK(inner_product(big, big) == Cyc::from_rat(2, Rat(2048)));
}

TEST_CASE("inner products of midafis") {
    Field f3 = Field::make(3, 1);
    Group g(f3);
    ClassData cd = conjugacy_classes(g);

    ClassFunction mu1 = midafi(g, 12, 1, cd);
    ClassFunction mu2 = midafi(g, 12, 2, cd);
    CHECK(inner_product(mu1, mu1) == Cyc::one(3));
    CHECK(inner_product(mu2, mu2) == Cyc::one(3));
    CHECK(inner_product(mu1, mu2).is_zero());
    CHECK(is_irreducible(mu1));

    // a sum of two linear characters has norm 2
    ClassFunction l1 = linear_class_function(g, cd, params_of({{1, 1}}, f3));
    ClassFunction l2 = linear_class_function(g, cd, params_of({{2, 1}}, f3));
    std::vector<Cyc> sum;
    for (std::size_t i = 0; i < cd.count(); ++i)
        sum.push_back(l1.value((std::uint32_t)i) + l2.value((std::uint32_t)i));
    ClassFunction s(cd, std::move(sum));
    CHECK(inner_product(s, s) == Cyc::from_rat(3, Rat(2)));
    CHECK_FALSE(is_irreducible(s));
}

TEST_CASE("restriction to root subgroups") {
    Field f3 = Field::make(3, 1);
    Group g(f3);
    ClassData cd = conjugacy_classes(g);

    ClassFunction mu = midafi(g, 12, 1, cd);
    auto parts = restrict_to_root_subgroup(g, mu, 12);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].first == 1);
    CHECK(parts[0].second == 81);

    ClassFunction triv = linear_class_function(g, cd, {});
    auto tparts = restrict_to_root_subgroup(g, triv, 7);
    REQUIRE(tparts.size() == 1);
    CHECK(tparts[0].first == 0);
    CHECK(tparts[0].second == 1);

    // midafi at alpha_11 restricted to X_12: only s = 0 appears
    ClassFunction mu11 = midafi(g, 11, 1, cd);
    auto parts12 = restrict_to_root_subgroup(g, mu11, 12);
    REQUIRE(parts12.size() == 1);
    CHECK(parts12[0].first == 0);
}

TEST_CASE("kernel roots") {
    Field f3 = Field::make(3, 1);
    Group g(f3);
    ClassData cd = conjugacy_classes(g);

    ClassFunction triv = linear_class_function(g, cd, {});
    CHECK(kernel_roots(g, triv) == RootSet::all());

    ClassFunction mu8 = midafi(g, 8, 1, cd);
    RootSet k8 = kernel_roots(g, mu8);
    CHECK(k8.contains(9));
    CHECK(k8.contains(10));
    CHECK(k8.contains(11));
    CHECK(k8.contains(12));
    CHECK_FALSE(k8.contains(8));

    ClassFunction mu12 = midafi(g, 12, 1, cd);
    CHECK_FALSE(kernel_roots(g, mu12).contains(12));
}

TEST_CASE("tensor with linear characters") {
    Field f2 = Field::make(2, 1);
    Group g(f2);
    ClassData cd = conjugacy_classes(g);

    ClassFunction mu = midafi(g, 12, 1, cd);
    ClassFunction triv = linear_class_function(g, cd, {});
    CHECK(tensor(mu, triv) == mu);

    ClassFunction beta = linear_class_function(g, cd, params_of({{1, 1}}, f2));
    ClassFunction tb = tensor(mu, beta);
    CHECK(tb.degree() == mu.degree());
    CHECK(is_irreducible(tb));
    CHECK(tensor(tb, beta) == mu);  // beta has order 2

    // Gallagher distinctness: the q^3 twists of one midafi are distinct
    std::set<std::string> keys;
    for (int b1 = 0; b1 < 2; ++b1)
        for (int b2 = 0; b2 < 2; ++b2)
            for (int b4 = 0; b4 < 2; ++b4) {
                std::array<fe, kNumRoots> s{};
                s[0] = (fe)b1;
                s[1] = (fe)b2;
                s[3] = (fe)b4;
                ClassFunction t =
                    tensor(mu, linear_class_function(g, cd, s));
                std::string key;
                for (const Cyc& v : t.values()) key += v.str() + ";";
                keys.insert(key);
            }
    CHECK(keys.size() == 8);
}

TEST_CASE("inflation") {
    Field f3 = Field::make(3, 1);
    Group g(f3);
    ClassData cd = conjugacy_classes(g);
    RootSet killed = RootSet::of({11, 12});
    ClassData cdq = conjugacy_classes(g, Quotient(killed));

    ClassFunction triv_q = linear_class_function(g, cdq, {});
    ClassFunction triv_u = inflate(triv_q, cd);
    for (const Cyc& v : triv_u.values()) CHECK(v == Cyc::one(3));

    ClassFunction mu8 = midafi(g, 8, 1, cdq);
    ClassFunction up = inflate(mu8, cd);
    CHECK(up.degree() == mu8.degree());
    RootSet ker = kernel_roots(g, up);
    CHECK((killed - ker).empty());
    // norms agree across inflation
    CHECK(inner_product(up, up) == inner_product(mu8, mu8));
}

TEST_CASE("midafi suite at q = 2 and q = 3") {
    for (int q : {2, 3}) {
        Field f = Field::of_order(q);
        Group g(f);
        ClassData cd = conjugacy_classes(g);
        std::set<std::string> keys;
        for (int alpha = 1; alpha <= 12; ++alpha) {
            long long want = 1;
            for (int i = 0; i < leg(alpha).size(); ++i) want *= q;
            for (int s = 1; s < q; ++s) {
                ClassFunction mu = midafi(g, alpha, (fe)s, cd);
                CHECK(mu.degree() == want);
                CHECK(is_irreducible(mu));
                auto parts = restrict_to_root_subgroup(g, mu, alpha);
                REQUIRE(parts.size() == 1);
                CHECK(parts[0].first == (fe)s);
                CHECK(parts[0].second == want);
                std::string key;
                for (const Cyc& v : mu.values()) key += v.str() + ";";
                keys.insert(key);
            }
        }
        CHECK((int)keys.size() == 12 * (q - 1));
    }
}

TEST_CASE("Frobenius reciprocity via Mackey double cosets at q = 2") {
    // (lambda^U, lambda^U) = sum over double cosets V t V of
    // <lambda^t, lambda> on V cap tVt^-1, each term 0 or 1 for linear lambda
    Field f = Field::make(2, 1);
    Group g(f);
    ClassData cd = conjugacy_classes(g);
    PackCodec codec(f, RootSet::all());

    for (int alpha : {5, 11, 12}) {
        PatternSubgroup vp(f, v_alpha(alpha));
        std::array<fe, kNumRoots> s{};
        s[(size_t)(alpha - 1)] = 1;
        LinearChar lam = linear_character(g, vp, s);
        ClassFunction mu = induce(g, lam, cd);

        std::vector<Coords> velems = enumerate(g, vp);
        std::vector<bool> seen(codec.size(), false);
        Cyc mackey = Cyc::zero(2);
        for (std::uint64_t code = 0; code < codec.size(); ++code) {
            if (seen[code]) continue;
            Coords t = codec.unpack(code);
            for (const Coords& v1 : velems)
                for (const Coords& v2 : velems)
                    seen[codec.pack(g.mul(g.mul(v1, t), v2))] = true;
            // <lambda^t, lambda> on I = V cap t V t^-1, lambda^t(x) = lambda(t^-1 x t)
            Cyc acc = Cyc::zero(2);
            long long isize = 0;
            Coords tinv = g.inv(t);
            for (const Coords& x : velems) {
                Coords txt = g.conj(x, tinv);  // t x t^-1
                if (!vp.contains(g, txt)) continue;  // x in t^-1 V t?
                ++isize;
                acc += linear_value(g, lam, txt).conj() *
                       linear_value(g, lam, x);
            }
            mackey += acc.scaled(Rat(1, isize));
        }
        CHECK(inner_product(mu, mu) == mackey);
        CHECK(mackey == Cyc::one(2));
    }
}

TEST_CASE("midafi rejects s = 0") {
    Field f2 = Field::make(2, 1);
    Group g(f2);
    ClassData cd = conjugacy_classes(g);
    CHECK_THROWS(midafi(g, 12, 0, cd));
}

TEST_CASE("K-action representative sets (odd and even)") {
    {
        Field f3 = Field::make(3, 1);
        Group g(f3);
        KOrbitReport rep = k_orbit_analysis(g);
        CHECK(rep.parity == Parity::odd);
        CHECK(rep.pass());
        CHECK(rep.rep_count == 3 * 2 * 2 * 2);          // q(q-1)^3
        CHECK(rep.stratum_size == 81ull * 8);           // q^4 (q-1)^3
    }
    {
        Field f2 = Field::make(2, 1);
        Group g(f2);
        KOrbitReport rep = k_orbit_analysis(g);
        CHECK(rep.parity == Parity::even);
        CHECK(rep.pass());
        CHECK(rep.rep_count == 1 + 2);                  // (q-1)^3 + 2(q-1)^4
        CHECK(rep.stratum_size == 16);                  // q^4 (q-1)^3
    }
}

TEST_CASE("inertia extensions at q = 2") {
    Field f2 = Field::make(2, 1);
    Group g(f2);
    RootSet killed = RootSet::of({11, 12});
    Quotient qctx(killed);
    ClassData cdq = conjugacy_classes(g, qctx);
    PatternSubgroup abar(f2, RootSet::of({3, 5, 6, 7, 8, 9, 10}), qctx);

    // lambda_{0,0,0,1,1,1,1}: s_7 = s_8 = s_9 = s_10 = 1
    std::array<fe, kNumRoots> s{};
    s[6] = s[7] = s[8] = s[9] = 1;
    LinearChar lam = linear_character(g, abar, s);

    // its stabilizer in K has exactly one nontrivial element
    PackCodec kbar(f2, RootSet::of({1, 2, 4}));
    std::vector<Coords> stab;
    for (std::uint64_t kc = 1; kc < kbar.size(); ++kc) {
        Coords k = kbar.unpack(kc);
        if (conj_params(g, abar, s, k) == s) stab.push_back(k);
    }
    REQUIRE(stab.size() == 1);

    auto exts = extend_to_inertia(g, lam, stab[0]);
    REQUIRE(exts.size() == 2);
    CHECK(exts[0].mu0 == 1);
    CHECK(exts[1].mu0 == -1);

    // both extensions are homomorphisms on T = A + k0 A (exhaustive)
    for (const InertiaChar& ic : exts) {
        auto value = [&](const Coords& y) {
            RootSet aset = ic.domain_a.roots();
            if ((g.support(y) - aset).empty())
                return linear_value(g, LinearChar{ic.domain_a, ic.params}, y);
            Coords z = g.mul(g.inv(ic.k0, qctx), y, qctx);
            REQUIRE((g.support(z) - aset).empty());
            return linear_value(g, LinearChar{ic.domain_a, ic.params}, z)
                .scaled(Rat(ic.mu0));
        };
        std::vector<Coords> telems;
        for (const Coords& a : enumerate(g, abar)) {
            telems.push_back(a);
            telems.push_back(g.mul(ic.k0, a, qctx));
        }
        for (const Coords& x : telems)
            for (const Coords& y : telems)
                CHECK(value(g.mul(x, y, qctx)) == value(x) * value(y));
    }

    // transversal K/<k0> and induction to degree q^3/2 = 4 irreducibles
    std::vector<Coords> transversal;
    std::set<std::uint64_t> used;
    for (std::uint64_t kc = 0; kc < kbar.size(); ++kc) {
        if (used.count(kc)) continue;
        Coords k = kbar.unpack(kc);
        transversal.push_back(k);
        used.insert(kc);
        used.insert(kbar.pack(g.mul(k, stab[0], qctx)));
    }
    CHECK(transversal.size() == 4);

    std::vector<ClassFunction> induced;
    for (const InertiaChar& ic : exts) {
        ClassFunction chi = induce_inertia(g, ic, cdq, transversal);
        CHECK(chi.degree() == 4);
        CHECK(is_irreducible(chi));
        induced.push_back(chi);
    }
    // the two extensions induce distinct characters
    CHECK_FALSE(induced[0] == induced[1]);
}

TEST_CASE("t_cdef picks outside the index-2 subgroup") {
    Field f2 = Field::make(2, 1);
    CHECK(t_cdef(f2, 1, 1, 1, 1) == 1);  // image {z^2+z} = {0}

    Field f4 = Field::make(2, 2);
    for (int c = 1; c < 4; ++c)
        for (int d = 1; d < 4; ++d)
            for (int e = 1; e < 4; ++e)
                for (int f = 1; f < 4; ++f) {
                    fe t = t_cdef(f4, (fe)c, (fe)d, (fe)e, (fe)f);
                    // t is genuinely outside the image
                    fe def = f4.mul(f4.mul((fe)d, (fe)e), (fe)f);
                    fe cd = f4.mul((fe)c, (fe)d);
                    for (int z = 0; z < 4; ++z)
                        CHECK(f4.add(f4.mul(def, f4.mul((fe)z, (fe)z)),
                                     f4.mul(cd, (fe)z)) != t);
                }
}
