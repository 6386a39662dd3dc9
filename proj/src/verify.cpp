#include "d4u/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <random>
#include <sstream>

namespace d4u {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Check make_check(const std::string& name, const std::string& expected,
                 const std::string& computed, bool pass, Clock::time_point t0) {
    return Check{name, expected, computed, pass, ms_since(t0)};
}

[[maybe_unused]] std::string root_set_str(RootSet s) {
    std::string r = "{";
    bool first = true;
    for (int m : s.members()) {
        if (!first) r += ",";
        r += std::to_string(m);
        first = false;
    }
    return r + "}";
}

}  // namespace

std::vector<Check> check_commutator_fidelity(const Field& f) {
    auto t0 = Clock::now();
    Group g(f);
    const int q = f.q();
    long long checked = 0, bad = 0;
    for (int i = 1; i <= kNumRoots; ++i)
        for (int j = i + 1; j <= kNumRoots; ++j) {
            auto rel = comm(i, j);
            for (int t = 0; t < q; ++t)
                for (int u = 0; u < q; ++u) {
                    Coords c = g.commutator(g.x(i, (fe)t), g.x(j, (fe)u));
                    Coords want{};
                    if (rel)
                        want[(size_t)(rel->k - 1)] =
                            f.signed_of(rel->sign, f.mul((fe)t, (fe)u));
                    ++checked;
                    if (c != want) ++bad;
                }
        }
    std::ostringstream ex, co;
    ex << "all " << checked
       << " commutators match the 16 relations (others trivial)";
    co << bad << " mismatches";
    return {make_check("commutator fidelity q=" + std::to_string(q), ex.str(),
                       co.str(), bad == 0, t0)};
}

std::vector<Check> check_class_count(const Field& f, bool parallel) {
    auto t0 = Clock::now();
    Group g(f);
    const long long q = f.q();
    long long want = class_count_polynomial(q, parity_of(q));
    ClassOptions opts;
    opts.parallel = parallel;
    ClassData cd = conjugacy_classes(g, {}, opts);
    std::ostringstream ex;
    ex << want << " (class-number polynomial "
       << (q % 2 ? "2q^5+5q^4-4q^3-4q^2+2q" : "2q^5+8q^4-16q^3+14q^2-10q+3")
       << ")";
    return {make_check("class count q=" + std::to_string(q), ex.str(),
                       std::to_string(cd.count()),
                       (long long)cd.count() == want, t0)};
}

std::vector<Check> check_midafi_suite(const Field& f, bool parallel) {
    auto t0 = Clock::now();
    Group g(f);
    const int q = f.q();
    ClassOptions copts;
    copts.parallel = parallel;
    ClassData cd = conjugacy_classes(g, {}, copts);

    bool norms = true, degrees = true, restriction = true, distinct = true;
    std::set<std::string> keys;
    int count = 0;
    for (int alpha = 1; alpha <= kNumRoots; ++alpha) {
        long long want_deg = 1;
        for (int i = 0; i < leg(alpha).size(); ++i) want_deg *= q;
        for (int s = 1; s < q; ++s) {
            ClassFunction mu = midafi(g, alpha, (fe)s, cd, parallel);
            ++count;
            if (!is_irreducible(mu)) norms = false;
            if (mu.degree() != want_deg) degrees = false;
            auto parts = restrict_to_root_subgroup(g, mu, alpha);
            if (parts.size() != 1 || parts[0].first != (fe)s ||
                parts[0].second != want_deg)
                restriction = false;
            std::ostringstream k;
            for (const Cyc& v : mu.values()) k << v.str() << ";";
            if (!keys.insert(k.str()).second) distinct = false;
        }
    }
    std::vector<Check> out;
    std::string qs = " q=" + std::to_string(q);
    out.push_back(make_check(
        "midafi count" + qs, std::to_string(12 * (q - 1)) + " midafis built",
        std::to_string(count), count == 12 * (q - 1), t0));
    out.push_back(make_check("midafi norms" + qs,
                             "norm 1 for all (each midafi is irreducible)",
                             norms ? "all norm 1" : "norm != 1 found", norms, t0));
    out.push_back(make_check(
        "midafi degrees" + qs, "degree q^|leg(alpha)| for all",
        degrees ? "all match" : "mismatch found", degrees, t0));
    out.push_back(make_check(
        "midafi restriction law" + qs,
        "mu|_{X_alpha} = mu(1) phi_{alpha,s} for all",
        restriction ? "all match" : "mismatch found", restriction, t0));
    out.push_back(make_check("midafi distinctness" + qs,
                             "pairwise distinct value vectors",
                             distinct ? "all distinct" : "collision found",
                             distinct, t0));
    return out;
}

std::vector<Check> check_structural_lemmas(const Field& f) {
    std::vector<Check> out;
    Group g(f);
    const int q = f.q();
    std::string qs = " q=" + std::to_string(q);

    {
        auto t0 = Clock::now();
        bool closed = true;
        for (int a = 1; a <= kNumRoots; ++a)
            if (!is_closed(v_alpha(a))) closed = false;
        out.push_back(make_check("lemma (a): Phi+ minus leg closed",
                                 "closed for all 12 roots",
                                 closed ? "all closed" : "failure", closed, t0));
    }
    {
        // X_alpha intersects [V_alpha, V_alpha] trivially
        auto t0 = Clock::now();
        bool ok = true;
        for (int a = 1; a <= kNumRoots; ++a) {
            PatternSubgroup v(f, v_alpha(a));
            std::vector<std::uint64_t> derived = derived_subgroup(g, v);
            PackCodec codec(f, RootSet::all());
            for (int t = 1; t < q; ++t) {
                std::uint64_t code = codec.pack(g.x(a, (fe)t));
                if (std::binary_search(derived.begin(), derived.end(), code))
                    ok = false;
            }
        }
        out.push_back(make_check(
            "lemma (c): X_alpha meets [V_alpha,V_alpha] trivially" + qs,
            "trivial intersection for all 12 roots", ok ? "all trivial" : "failure",
            ok, t0));
    }
    {
        // hook subgroups are special of type q^(1+2|leg|)
        auto t0 = Clock::now();
        bool ok = true;
        std::ostringstream bad;
        for (int a = 1; a <= kNumRoots; ++a) {
            PatternSubgroup h(f, hook(a));
            int legs = leg(a).size();
            if (legs == 0) continue;  // simple roots: hook is X_alpha itself
            SubgroupAnalysis an = derived_and_center(g, h);
            PackCodec codec(f, RootSet::all());
            std::vector<std::uint64_t> xa;
            for (int t = 0; t < q; ++t) xa.push_back(codec.pack(g.x(a, (fe)t)));
            std::sort(xa.begin(), xa.end());
            bool special = (an.derived == xa) && (an.center == xa);
            // elementary abelian quotient: g^p lands in the center
            PackCodec sub(f, hook(a));
            for (std::uint64_t c = 0; c < sub.size() && special; ++c) {
                Coords x = sub.unpack(c);
                Coords xp = x;
                for (int e = 1; e < f.p(); ++e) xp = g.mul(xp, x);
                if (!std::binary_search(xa.begin(), xa.end(), codec.pack(xp)))
                    special = false;
            }
            std::uint64_t want_order = 1;
            for (int i = 0; i < 1 + 2 * legs; ++i) want_order *= (std::uint64_t)q;
            if (h.order() != want_order) special = false;
            if (!special) {
                ok = false;
                bad << " alpha_" << a;
            }
        }
        out.push_back(make_check(
            "hook subgroups special of type q^(1+2|leg|)" + qs,
            "derived = center = X_alpha, order q^(1+2|leg|), exponent-p quotient",
            ok ? "all special" : "failed at" + bad.str(), ok, t0));
    }
    return out;
}

std::vector<Check> check_representative_sets(const Field& f) {
    auto t0 = Clock::now();
    Group g(f);
    KOrbitReport rep = k_orbit_analysis(g);
    std::ostringstream ex, co;
    ex << "transversal of the nondegenerate stratum (" << rep.stratum_size
       << " characters), stabilizer order "
       << (rep.parity == Parity::odd ? "1" : "1 / 2 by stratum");
    co << rep.rep_count << " representatives, cover=" << rep.orbits_cover
       << " disjoint=" << rep.orbits_disjoint
       << " stabilizers=" << rep.stabilizers_ok;
    return {make_check("K-action representative set q=" + std::to_string(f.q()),
                       ex.str(), co.str(), rep.pass(), t0)};
}

std::vector<Check> check_full_table(const Field& f, bool parallel) {
    auto t0 = Clock::now();
    Group g(f);
    const long long q = f.q();
    ClassOptions copts;
    copts.parallel = parallel;
    ClassData cd = conjugacy_classes(g, {}, copts);
    BuildAllOptions opts;
    opts.parallel = parallel;
    TableReport rep = build_all(g, cd, opts);

    std::vector<Check> out;
    std::string qs = " q=" + std::to_string(q);
    out.push_back(make_check(
        "family constructions" + qs,
        "all 17 families match their table row (count, degree, kernel)",
        rep.families_ok ? "all match" : rep.diagnostic, rep.families_ok, t0));
    out.push_back(make_check(
        "completeness: count" + qs,
        std::to_string(cd.count()) + " (class count)",
        std::to_string(rep.characters.size()), rep.count_ok, t0));
    out.push_back(make_check("completeness: orthonormality" + qs,
                             "pairwise orthogonal, each norm 1",
                             rep.orthonormal_ok && rep.families_ok
                                 ? "verified"
                                 : "failed",
                             rep.orthonormal_ok, t0));
    long long order = 1;
    for (int i = 0; i < kNumRoots; ++i) order *= q;
    long long degsq = 0;
    for (const ClassFunction& chi : rep.characters)
        degsq += chi.degree() * chi.degree();
    out.push_back(make_check("completeness: sum of squared degrees" + qs,
                             std::to_string(order) + " (= q^12)",
                             std::to_string(degsq), rep.degree_sum_ok, t0));
    std::ostringstream ex, co;
    for (auto [d, c] : expected_degree_multiplicities(q))
        ex << d << ":" << c << " ";
    for (auto [d, c] : rep.by_degree) co << d << ":" << c << " ";
    out.push_back(make_check("degree multiplicities" + qs,
                             ex.str() + "(polynomials in v=q-1)", co.str(),
                             rep.multiplicities_ok, t0));
    out.push_back(make_check("distinctness" + qs, "no value-vector collisions",
                             rep.distinct_ok ? "all distinct" : "collision",
                             rep.distinct_ok, t0));
    return out;
}

std::vector<Check> check_property_suite(const Field& f, bool parallel) {
    std::vector<Check> out;
    Group g(f);
    const int q = f.q();
    std::string qs = " q=" + std::to_string(q);
    std::mt19937 rng(20091105);
    auto rand_elem = [&]() {
        Coords c;
        for (int i = 0; i < kNumRoots; ++i)
            c[(size_t)i] = (fe)(rng() % (unsigned)q);
        return c;
    };

    {
        auto t0 = Clock::now();
        bool ok = true;
        for (int it = 0; it < 2000; ++it) {
            Coords a = rand_elem(), b = rand_elem(), c = rand_elem();
            if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) ok = false;
        }
        out.push_back(make_check("associativity fuzz" + qs,
                                 "(ab)c = a(bc) on 2000 random triples",
                                 ok ? "all pass" : "failure", ok, t0));
    }
    {
        auto t0 = Clock::now();
        bool ok = true;
        for (int it = 0; it < 2000; ++it) {
            Coords a = rand_elem();
            Word w;
            for (int r = 1; r <= kNumRoots; ++r)
                if (a[(size_t)(r - 1)]) w.push_back({r, a[(size_t)(r - 1)]});
            if (g.normalize(w) != a) ok = false;
            if (g.mul(a, g.inv(a)) != g.identity()) ok = false;
        }
        out.push_back(make_check(
            "normal form soundness" + qs,
            "normalize(letters of g) = g and g*g^-1 = 1 on 2000 samples",
            ok ? "all pass" : "failure", ok, t0));
    }
    {
        auto t0 = Clock::now();
        bool ok = true;
        for (int s = 0; s < q; ++s) {
            Cyc sum = Cyc::zero(f.p());
            for (int t = 0; t < q; ++t)
                sum += f.additive_character((fe)s, (fe)t);
            Cyc want = s == 0 ? Cyc::from_rat(f.p(), Rat(q)) : Cyc::zero(f.p());
            if (!(sum == want)) ok = false;
        }
        out.push_back(make_check(
            "additive character orthogonality" + qs,
            "sum_t phi(st) = q if s = 0 else 0",
            ok ? "all pass" : "failure", ok, t0));
    }
    {
        auto t0 = Clock::now();
        ClassOptions copts;
        copts.parallel = parallel;
        ClassData cd = conjugacy_classes(g, {}, copts);
        bool ok = true;
        for (int alpha : {5, 8, 11, 12}) {
            ClassFunction mu = midafi(g, alpha, f.one(), cd, parallel);
            long long idx = 1;
            for (int i = 0; i < leg(alpha).size(); ++i) idx *= q;
            if (mu.degree() != idx) ok = false;
        }
        out.push_back(make_check("induction degree law" + qs,
                                 "deg(lambda^U) = [U:V_alpha]",
                                 ok ? "all pass" : "failure", ok, t0));
        auto t1 = Clock::now();
        RootSet killed = RootSet::of({11, 12});
        ClassData cdq = conjugacy_classes(g, Quotient(killed), copts);
        bool infl = true;
        ClassFunction mu8 = midafi(g, 8, f.one(), cdq, parallel);
        ClassFunction up = inflate(mu8, cd);
        if (up.degree() != mu8.degree()) infl = false;
        RootSet ker = kernel_roots(g, up);
        if ((killed - ker) != RootSet()) infl = false;
        out.push_back(make_check("inflation kernel law" + qs,
                                 "killed roots lie in the kernel, degree kept",
                                 infl ? "pass" : "failure", infl, t1));
    }
    return out;
}

VerifyReport run_verify(const Field& f, VerifyOptions opts) {
    VerifyReport rep;
    auto add = [&rep](std::vector<Check> cs) {
        for (Check& c : cs) rep.checks.push_back(std::move(c));
    };
    add(check_commutator_fidelity(f));
    add(check_structural_lemmas(f));
    add(check_class_count(f, opts.parallel));
    add(check_midafi_suite(f, opts.parallel));
    add(check_representative_sets(f));
    add(check_full_table(f, opts.parallel));
    add(check_property_suite(f, opts.parallel));
    return rep;
}

}  // namespace d4u
