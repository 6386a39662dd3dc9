#include "d4u/families.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace d4u {

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

using Params = std::array<fe, kNumRoots>;

std::string value_key(const ClassFunction& chi) {
    std::ostringstream os;
    for (const Cyc& v : chi.values()) os << v.str() << ";";
    return os.str();
}

}  // namespace

std::vector<std::pair<long long, long long>> FamilyDescriptor::expected(
    long long q) const {
    const long long v = q - 1;
    switch (id) {
        case FamilyId::F12: return {{ipow(q, 4), ipow(q, 3) * v}};
        case FamilyId::F11: return {{ipow(q, 3), ipow(q, 4) * v}};
        case FamilyId::F8910odd: return {{ipow(q, 3), q * ipow(v, 3)}};
        case FamilyId::F8910even:
            return {{ipow(q, 3), ipow(v, 3)}, {ipow(q, 3) / 2, 4 * ipow(v, 4)}};
        case FamilyId::F89:
        case FamilyId::F810:
        case FamilyId::F910:
            return {{ipow(q, 3), ipow(v, 3)}, {q * q, q * q * v * v}};
        case FamilyId::F8:
        case FamilyId::F9:
        case FamilyId::F10:
            return {{ipow(q, 3), v * v}, {q * q, q * q * v}};
        case FamilyId::F567: return {{q, q * q * ipow(v, 3)}};
        case FamilyId::F56:
        case FamilyId::F57:
        case FamilyId::F67:
            return {{q, q * q * v * v}};
        case FamilyId::F5:
        case FamilyId::F6:
        case FamilyId::F7:
            return {{q, q * q * v}};
        case FamilyId::Flin: return {{1, ipow(q, 4)}};
    }
    return {};
}

const std::vector<FamilyDescriptor>& family_descriptors() {
    static const std::vector<FamilyDescriptor> table = {
        {FamilyId::F12, "F12", std::nullopt, RootSet::of({12}), RootSet::of({})},
        {FamilyId::F11, "F11", std::nullopt, RootSet::of({11}), RootSet::of({12})},
        {FamilyId::F8910odd, "F8910odd", Parity::odd, RootSet::of({8, 9, 10}),
         RootSet::of({11, 12})},
        {FamilyId::F8910even, "F8910even", Parity::even, RootSet::of({8, 9, 10}),
         RootSet::of({11, 12})},
        {FamilyId::F89, "F89", std::nullopt, RootSet::of({8, 9}),
         RootSet::of({10, 11, 12})},
        {FamilyId::F810, "F810", std::nullopt, RootSet::of({8, 10}),
         RootSet::of({9, 11, 12})},
        {FamilyId::F910, "F910", std::nullopt, RootSet::of({9, 10}),
         RootSet::of({8, 11, 12})},
        {FamilyId::F8, "F8", std::nullopt, RootSet::of({8}),
         RootSet::of({9, 10, 11, 12})},
        {FamilyId::F9, "F9", std::nullopt, RootSet::of({9}),
         RootSet::of({8, 10, 11, 12})},
        {FamilyId::F10, "F10", std::nullopt, RootSet::of({10}),
         RootSet::of({8, 9, 11, 12})},
        {FamilyId::F567, "F567", std::nullopt, RootSet::of({5, 6, 7}),
         RootSet::of({8, 9, 10, 11, 12})},
        {FamilyId::F56, "F56", std::nullopt, RootSet::of({5, 6}),
         RootSet::of({7, 8, 9, 10, 11, 12})},
        {FamilyId::F57, "F57", std::nullopt, RootSet::of({5, 7}),
         RootSet::of({6, 8, 9, 10, 11, 12})},
        {FamilyId::F67, "F67", std::nullopt, RootSet::of({6, 7}),
         RootSet::of({5, 8, 9, 10, 11, 12})},
        {FamilyId::F5, "F5", std::nullopt, RootSet::of({5}),
         RootSet::of({6, 7, 8, 9, 10, 11, 12})},
        {FamilyId::F6, "F6", std::nullopt, RootSet::of({6}),
         RootSet::of({5, 7, 8, 9, 10, 11, 12})},
        {FamilyId::F7, "F7", std::nullopt, RootSet::of({7}),
         RootSet::of({5, 6, 8, 9, 10, 11, 12})},
        {FamilyId::Flin, "Flin", std::nullopt, RootSet::of({}),
         RootSet::of({5, 6, 7, 8, 9, 10, 11, 12})},
    };
    return table;
}

const FamilyDescriptor& descriptor(FamilyId id) {
    for (const FamilyDescriptor& d : family_descriptors())
        if (d.id == id) return d;
    throw std::logic_error("descriptor: unknown family");
}

std::optional<FamilyId> family_by_name(const std::string& name) {
    for (const FamilyDescriptor& d : family_descriptors())
        if (d.name == name) return d.id;
    return std::nullopt;
}

FamilyId classify(const Group& g, const ClassFunction& chi) {
    RootSet ker = kernel_roots(g, chi);
    if (!ker.contains(12)) return FamilyId::F12;
    if (!ker.contains(11)) return FamilyId::F11;
    RootSet top3 = RootSet::of({8, 9, 10}) - ker;
    if (!top3.empty()) {
        if (top3 == RootSet::of({8, 9, 10}))
            return g.field().p() == 2 ? FamilyId::F8910even : FamilyId::F8910odd;
        if (top3 == RootSet::of({8, 9})) return FamilyId::F89;
        if (top3 == RootSet::of({8, 10})) return FamilyId::F810;
        if (top3 == RootSet::of({9, 10})) return FamilyId::F910;
        if (top3 == RootSet::of({8})) return FamilyId::F8;
        if (top3 == RootSet::of({9})) return FamilyId::F9;
        return FamilyId::F10;
    }
    RootSet top2 = RootSet::of({5, 6, 7}) - ker;
    if (!top2.empty()) {
        if (top2 == RootSet::of({5, 6, 7})) return FamilyId::F567;
        if (top2 == RootSet::of({5, 6})) return FamilyId::F56;
        if (top2 == RootSet::of({5, 7})) return FamilyId::F57;
        if (top2 == RootSet::of({6, 7})) return FamilyId::F67;
        if (top2 == RootSet::of({5})) return FamilyId::F5;
        if (top2 == RootSet::of({6})) return FamilyId::F6;
        return FamilyId::F7;
    }
    return FamilyId::Flin;
}

BuildContext::BuildContext(const Group& g, const ClassData& cd_u, bool parallel)
    : g_(&g), cd_u_(&cd_u), parallel_(parallel) {}

const ClassData& BuildContext::quotient(RootSet killed) {
    auto it = cache_.find(killed);
    if (it != cache_.end()) return it->second;
    ClassOptions opts;
    opts.parallel = parallel_;
    ClassData cd = conjugacy_classes(*g_, Quotient(killed), opts);
    return cache_.emplace(killed, std::move(cd)).first->second;
}

namespace {

// ---- per-family construction ----

void build_lin(BuildContext& ctx, std::vector<ClassFunction>& out) {
    const Group& g = ctx.group();
    const int q = g.field().q();
    for (int b1 = 0; b1 < q; ++b1)
        for (int b2 = 0; b2 < q; ++b2)
            for (int b3 = 0; b3 < q; ++b3)
                for (int b4 = 0; b4 < q; ++b4) {
                    Params s{};
                    s[0] = (fe)b1;
                    s[1] = (fe)b2;
                    s[2] = (fe)b3;
                    s[3] = (fe)b4;
                    out.push_back(linear_class_function(g, ctx.ambient(), s));
                }
}

void build_f12(BuildContext& ctx, std::vector<ClassFunction>& out) {
    const Group& g = ctx.group();
    const int q = g.field().q();
    for (int a = 1; a < q; ++a) {
        ClassFunction mu = midafi(g, 12, (fe)a, ctx.ambient(), ctx.parallel());
        // Gallagher twists: the q^3 linear characters trivial on the hook
        // subgroup H_12 (parameters on roots 1, 2, 4)
        for (int b1 = 0; b1 < q; ++b1)
            for (int b2 = 0; b2 < q; ++b2)
                for (int b4 = 0; b4 < q; ++b4) {
                    Params s{};
                    s[0] = (fe)b1;
                    s[1] = (fe)b2;
                    s[3] = (fe)b4;
                    out.push_back(
                        tensor(mu, linear_class_function(g, ctx.ambient(), s)));
                }
    }
}

void build_f11(BuildContext& ctx, std::vector<ClassFunction>& out) {
    const Group& g = ctx.group();
    const int q = g.field().q();
    PatternSubgroup v11(g.field(), v_alpha(11));
    // s_11 = a pins the central character; s_3 gives the X_3 extension
    // parameter and s_5, s_6, s_7 the Gallagher parameters at the middle
    // level. Conjugation by x_1, x_2, x_4 moves the s_8, s_9, s_10
    // coordinates off zero, so these q^4(q-1) inductions are pairwise
    // non-conjugate and exhaust the family.
    for (int a = 1; a < q; ++a)
        for (int s3 = 0; s3 < q; ++s3)
            for (int s5 = 0; s5 < q; ++s5)
                for (int s6 = 0; s6 < q; ++s6)
                    for (int s7 = 0; s7 < q; ++s7) {
                        Params s{};
                        s[10] = (fe)a;
                        s[2] = (fe)s3;
                        s[4] = (fe)s5;
                        s[5] = (fe)s6;
                        s[6] = (fe)s7;
                        out.push_back(induce(g, linear_character(g, v11, s),
                                             ctx.ambient(), ctx.parallel()));
                    }
}

void build_f8910_odd(BuildContext& ctx, std::vector<ClassFunction>& out) {
    const Group& g = ctx.group();
    const int q = g.field().q();
    RootSet killed = RootSet::of({11, 12});
    const ClassData& cdq = ctx.quotient(killed);
    PatternSubgroup abar(g.field(), RootSet::of({3, 5, 6, 7, 8, 9, 10}),
                         Quotient(killed));
    // the representative characters lambda_{x,0,0,0,d,e,f}
    for (int x = 0; x < q; ++x)
        for (int d = 1; d < q; ++d)
            for (int e = 1; e < q; ++e)
                for (int f = 1; f < q; ++f) {
                    Params s{};
                    s[2] = (fe)x;
                    s[7] = (fe)d;
                    s[8] = (fe)e;
                    s[9] = (fe)f;
                    out.push_back(inflate(induce(g, linear_character(g, abar, s),
                                                 cdq, ctx.parallel()),
                                          ctx.ambient()));
                }
}

void build_f8910_even(BuildContext& ctx, std::vector<ClassFunction>& out,
                      std::string& note) {
    const Group& g = ctx.group();
    const Field& F = g.field();
    const int q = F.q();
    RootSet killed = RootSet::of({11, 12});
    const ClassData& cdq = ctx.quotient(killed);
    Quotient qctx(killed);
    PatternSubgroup abar(F, RootSet::of({3, 5, 6, 7, 8, 9, 10}), qctx);

    // free-orbit representatives lambda_{0,0,0,0,d,e,f}: induce directly
    for (int d = 1; d < q; ++d)
        for (int e = 1; e < q; ++e)
            for (int f = 1; f < q; ++f) {
                Params s{};
                s[7] = (fe)d;
                s[8] = (fe)e;
                s[9] = (fe)f;
                out.push_back(inflate(
                    induce(g, linear_character(g, abar, s), cdq, ctx.parallel()),
                    ctx.ambient()));
            }

    // order-2 stabilizer stratum: extend to the inertia subgroup in two ways
    // and induce from there
    PackCodec kbar(F, RootSet::of({1, 2, 4}));
    for (int c = 1; c < q; ++c)
        for (int d = 1; d < q; ++d)
            for (int e = 1; e < q; ++e)
                for (int f = 1; f < q; ++f) {
                    fe tc = t_cdef(F, (fe)c, (fe)d, (fe)e, (fe)f);
                    for (fe x : {(fe)0, tc}) {
                        Params s{};
                        s[2] = x;
                        s[6] = (fe)c;
                        s[7] = (fe)d;
                        s[8] = (fe)e;
                        s[9] = (fe)f;
                        // the nontrivial stabilizing element of K
                        std::vector<Coords> stab;
                        for (std::uint64_t kc = 1; kc < kbar.size(); ++kc) {
                            Coords k = kbar.unpack(kc);
                            if (conj_params(g, abar, s, k) == s)
                                stab.push_back(k);
                        }
                        if (stab.size() != 1) {
                            note = "stabilizer order != 2 at c,d,e,f stratum";
                            continue;
                        }
                        const Coords& k0 = stab[0];
                        // transversal of T = A + k0 A: half of K
                        std::vector<Coords> transversal;
                        std::unordered_set<std::uint64_t> used;
                        for (std::uint64_t kc = 0; kc < kbar.size(); ++kc) {
                            if (used.count(kc)) continue;
                            Coords k = kbar.unpack(kc);
                            transversal.push_back(k);
                            used.insert(kc);
                            used.insert(kbar.pack(g.mul(k, k0, qctx)));
                        }
                        LinearChar lam =
                            linear_character(g, abar, s);
                        for (const InertiaChar& ext :
                             extend_to_inertia(g, lam, k0))
                            out.push_back(inflate(
                                induce_inertia(g, ext, cdq, transversal,
                                               ctx.parallel()),
                                ctx.ambient()));
                    }
                }
}

struct LayerConfig {
    RootSet killed;          // quotient in which the spine is induced
    RootSet spine_roots;     // inducing pattern subgroup
    std::vector<int> spine_dirs;  // directions carrying nonzero parameters
    RootSet twist_killed;    // quotient whose Irr supplies the twists
    int twist_u, twist_v, twist_w;  // u + v = w; linears on (u,v), deg-q on w
    int twist_x;             // the pattern {twist_x, twist_w} induces deg q
};

LayerConfig layer_config(FamilyId id) {
    switch (id) {
        case FamilyId::F89:
            return {RootSet::of({10, 11, 12}), RootSet::of({2, 3, 4, 6, 7, 8, 9}),
                    {8, 9}, RootSet::of({1, 2, 5, 6, 8, 9, 10, 11, 12}),
                    3, 4, 7, 3};
        case FamilyId::F810:
            return {RootSet::of({9, 11, 12}), RootSet::of({1, 3, 4, 5, 7, 8, 10}),
                    {8, 10}, RootSet::of({1, 2, 5, 6, 8, 9, 10, 11, 12}),
                    3, 4, 7, 3};
        case FamilyId::F910:
            return {RootSet::of({8, 11, 12}), RootSet::of({1, 2, 3, 5, 6, 9, 10}),
                    {9, 10}, RootSet::of({1, 4, 5, 7, 8, 9, 10, 11, 12}),
                    2, 3, 6, 2};
        case FamilyId::F8:
            return {RootSet::of({9, 10, 11, 12}), RootSet::of({3, 4, 5, 6, 7, 8}),
                    {8}, RootSet::of({1, 2, 5, 6, 8, 9, 10, 11, 12}),
                    3, 4, 7, 3};
        case FamilyId::F9:
            return {RootSet::of({8, 10, 11, 12}), RootSet::of({2, 3, 5, 6, 7, 9}),
                    {9}, RootSet::of({1, 4, 5, 7, 8, 9, 10, 11, 12}),
                    2, 3, 6, 2};
        case FamilyId::F10:
            return {RootSet::of({8, 9, 11, 12}), RootSet::of({1, 3, 5, 6, 7, 10}),
                    {10}, RootSet::of({2, 4, 6, 7, 8, 9, 10, 11, 12}),
                    1, 3, 5, 1};
        default:
            throw std::logic_error("layer_config: not a layer family");
    }
}

// F89/F810/F910 and F8/F9/F10: a spine of extensions induced in the kernel
// quotient, tensored with the irreducible characters of the complementary
// q^(1+2) quotient (q^2 linears and q-1 characters of degree q).
void build_layer(BuildContext& ctx, FamilyId id, std::vector<ClassFunction>& out) {
    const Group& g = ctx.group();
    const Field& F = g.field();
    const int q = F.q();
    LayerConfig cfg = layer_config(id);
    const ClassData& cdq = ctx.quotient(cfg.killed);

    // spines, inflated to U
    std::vector<ClassFunction> spines;
    PatternSubgroup sp(F, cfg.spine_roots, Quotient(cfg.killed));
    std::vector<int> a((size_t)cfg.spine_dirs.size(), 1);
    while (true) {
        Params s{};
        for (std::size_t i = 0; i < cfg.spine_dirs.size(); ++i)
            s[(size_t)(cfg.spine_dirs[i] - 1)] = (fe)a[i];
        spines.push_back(inflate(
            induce(g, linear_character(g, sp, s), cdq, ctx.parallel()),
            ctx.ambient()));
        std::size_t i = 0;
        while (i < a.size() && ++a[i] == q) a[i++] = 1;
        if (i == a.size()) break;
    }

    // twists, inflated to U: linear characters in the (u, v) directions and
    // the degree-q characters of the small quotient
    std::vector<ClassFunction> twists;
    for (int su = 0; su < q; ++su)
        for (int sv = 0; sv < q; ++sv) {
            Params s{};
            s[(size_t)(cfg.twist_u - 1)] = (fe)su;
            s[(size_t)(cfg.twist_v - 1)] = (fe)sv;
            twists.push_back(linear_class_function(g, ctx.ambient(), s));
        }
    const ClassData& cdt = ctx.quotient(cfg.twist_killed);
    PatternSubgroup tw(F, RootSet::of({cfg.twist_x, cfg.twist_w}),
                       Quotient(cfg.twist_killed));
    for (int c = 1; c < q; ++c) {
        Params s{};
        s[(size_t)(cfg.twist_w - 1)] = (fe)c;
        twists.push_back(inflate(
            induce(g, linear_character(g, tw, s), cdt, ctx.parallel()),
            ctx.ambient()));
    }

    for (const ClassFunction& spine : spines)
        for (const ClassFunction& t : twists) out.push_back(tensor(spine, t));
}

// All seven height-2 families come from the pattern subgroup on Phi+ \ {3}
// in the quotient killing roots 8..12; the (s_5, s_6, s_7) zero pattern
// drives the kernel signature and the X_3 conjugation action identifies
// parameter triples (s_1, s_2, s_4) along one line.
void build_height2(BuildContext& ctx, RootSet sig,
                   std::vector<ClassFunction>& out) {
    const Group& g = ctx.group();
    const Field& F = g.field();
    const int q = F.q();
    RootSet killed = RootSet::of({8, 9, 10, 11, 12});
    const ClassData& cdq = ctx.quotient(killed);
    PatternSubgroup sub(F, RootSet::of({1, 2, 4, 5, 6, 7}), Quotient(killed));

    std::set<std::string> seen;
    for (int s5 = 0; s5 < q; ++s5)
        for (int s6 = 0; s6 < q; ++s6)
            for (int s7 = 0; s7 < q; ++s7) {
                RootSet nz;
                if (s5) nz.insert(5);
                if (s6) nz.insert(6);
                if (s7) nz.insert(7);
                if (nz != sig) continue;
                for (int s1 = 0; s1 < q; ++s1)
                    for (int s2 = 0; s2 < q; ++s2)
                        for (int s4 = 0; s4 < q; ++s4) {
                            Params s{};
                            s[0] = (fe)s1;
                            s[1] = (fe)s2;
                            s[3] = (fe)s4;
                            s[4] = (fe)s5;
                            s[5] = (fe)s6;
                            s[6] = (fe)s7;
                            ClassFunction chi =
                                inflate(induce(g, linear_character(g, sub, s),
                                               cdq, ctx.parallel()),
                                        ctx.ambient());
                            if (seen.insert(value_key(chi)).second)
                                out.push_back(chi);
                        }
            }
}

}  // namespace

FamilyReport build_family(BuildContext& ctx, FamilyId id,
                          std::vector<ClassFunction>& out) {
    const Group& g = ctx.group();
    const FamilyDescriptor& d = descriptor(id);
    const long long q = g.field().q();
    FamilyReport rep;
    rep.name = d.name;
    if (d.parity && *d.parity != parity_of(q))
        throw std::invalid_argument("build_family: parity mismatch for " + d.name);

    std::vector<ClassFunction> built;
    switch (id) {
        case FamilyId::Flin: build_lin(ctx, built); break;
        case FamilyId::F12: build_f12(ctx, built); break;
        case FamilyId::F11: build_f11(ctx, built); break;
        case FamilyId::F8910odd: build_f8910_odd(ctx, built); break;
        case FamilyId::F8910even: build_f8910_even(ctx, built, rep.note); break;
        case FamilyId::F89:
        case FamilyId::F810:
        case FamilyId::F910:
        case FamilyId::F8:
        case FamilyId::F9:
        case FamilyId::F10:
            build_layer(ctx, id, built);
            break;
        default:
            build_height2(ctx, d.nonkernel, built);
            break;
    }

    // dedupe by exact value vectors
    std::set<std::string> seen;
    std::vector<ClassFunction> unique;
    for (ClassFunction& chi : built)
        if (seen.insert(value_key(chi)).second) {
            chi.set_family(d.name);
            unique.push_back(std::move(chi));
        }

    rep.irreducible_ok = true;
    rep.signature_ok = true;
    for (const ClassFunction& chi : unique) {
        if (!is_irreducible(chi)) rep.irreducible_ok = false;
        RootSet ker = kernel_roots(g, chi);
        if (!(d.nonkernel & ker).empty() ||
            (d.required_kernel - ker) != RootSet() || classify(g, chi) != id)
            rep.signature_ok = false;
        ++rep.by_degree[chi.degree()];
    }
    rep.built = unique.size();

    std::map<long long, long long> want;
    for (auto [deg, cnt] : d.expected(q)) want[deg] += cnt;
    rep.degrees_ok = (rep.by_degree == want);
    long long total = 0;
    for (auto [deg, cnt] : want) total += cnt;
    rep.count_ok = ((long long)rep.built == total);

    for (ClassFunction& chi : unique) out.push_back(std::move(chi));
    return rep;
}

std::map<long long, long long> expected_degree_multiplicities(long long q) {
    const long long v = q - 1;
    auto poly = [v](std::initializer_list<long long> cs) {
        // coefficients from the constant term up
        long long x = 1, r = 0;
        for (long long c : cs) {
            r += c * x;
            x *= v;
        }
        return r;
    };
    std::map<long long, long long> m;
    m[q * q * q * q] += poly({0, 1, 3, 3, 1});
    if (q % 2)
        m[q * q * q] += poly({0, 1, 7, 10, 5, 1});
    else {
        m[q * q * q] += poly({0, 1, 7, 10, 4, 1});
        m[q * q * q / 2] += poly({0, 0, 0, 0, 4});
    }
    m[q * q] += poly({0, 3, 9, 9, 3});
    m[q] += poly({0, 3, 9, 10, 5, 1});
    m[1] += poly({1, 4, 6, 4, 1});
    return m;
}

TableReport build_all(const Group& g, const ClassData& cd_u,
                      BuildAllOptions opts) {
    const long long q = g.field().q();
    BuildContext ctx(g, cd_u, opts.parallel);
    TableReport rep;
    rep.families_ok = true;
    std::ostringstream diag;

    for (const FamilyDescriptor& d : family_descriptors()) {
        if (d.parity && *d.parity != parity_of(q)) continue;
        FamilyReport fr = build_family(ctx, d.id, rep.characters);
        if (!fr.pass()) {
            rep.families_ok = false;
            diag << d.name << ": count/degree/signature verification failed ("
                 << fr.built << " built";
            if (!fr.note.empty()) diag << ", " << fr.note;
            diag << "); ";
        }
        rep.families.push_back(std::move(fr));
    }

    // completeness certificate
    rep.count_ok = (rep.characters.size() == cd_u.count());
    if (!rep.count_ok)
        diag << "total " << rep.characters.size() << " != class count "
             << cd_u.count() << "; ";

    std::set<std::string> keys;
    for (const ClassFunction& chi : rep.characters) keys.insert(value_key(chi));
    rep.distinct_ok = (keys.size() == rep.characters.size());
    if (!rep.distinct_ok) diag << "duplicate characters across families; ";

    long long degsq = 0;
    for (const ClassFunction& chi : rep.characters) {
        long long dg = chi.degree();
        degsq += dg * dg;
        ++rep.by_degree[dg];
    }
    long long order = 1;
    for (int i = 0; i < kNumRoots; ++i) order *= q;
    rep.degree_sum_ok = (degsq == order);
    if (!rep.degree_sum_ok)
        diag << "sum of squared degrees " << degsq << " != " << order << "; ";

    rep.multiplicities_ok = (rep.by_degree == expected_degree_multiplicities(q));
    if (!rep.multiplicities_ok) diag << "degree multiplicities mismatch; ";

    rep.orthonormal_ok = true;
    if (opts.check_orthogonality) {
        // flatten to integer coefficient arrays once; characters of a p-group
        // constructed by induction and products always have integral values
        const int m = g.field().p() - 1;
        const std::size_t nch = rep.characters.size();
        const std::size_t ncl = cd_u.count();
        std::vector<long long> flat(nch * ncl * (size_t)m);
        bool integral = true;
        for (std::size_t i = 0; i < nch && integral; ++i)
            for (std::size_t c = 0; c < ncl && integral; ++c) {
                const auto& co = rep.characters[i].value((std::uint32_t)c).coeffs();
                for (int j = 0; j < m; ++j) {
                    if (!co[(size_t)j].is_integer()) {
                        integral = false;
                        break;
                    }
                    flat[(i * ncl + c) * (size_t)m + (size_t)j] =
                        co[(size_t)j].num();
                }
            }
        const int p = g.field().p();
        bool ortho = true;
        if (integral) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) reduction(&& : ortho)
#endif
            for (long long i = 0; i < (long long)nch; ++i) {
                bool ok = true;
                std::vector<long long> acc((size_t)m);
                for (std::size_t j = (std::size_t)i + 1; j < nch; ++j) {
                    std::fill(acc.begin(), acc.end(), 0);
                    for (std::size_t c = 0; c < ncl; ++c) {
                        const long long* va = &flat[((size_t)i * ncl + c) * (size_t)m];
                        const long long* vb = &flat[(j * ncl + c) * (size_t)m];
                        long long w = (long long)cd_u.sizes[c];
                        for (int s = 0; s < m; ++s) {
                            if (va[s] == 0) continue;
                            for (int t = 0; t < m; ++t) {
                                if (vb[t] == 0) continue;
                                long long coef = w * va[s] * vb[t];
                                int e = (s - t) % p;
                                if (e < 0) e += p;
                                if (e < m)
                                    acc[(size_t)e] += coef;
                                else
                                    for (int u = 0; u < m; ++u)
                                        acc[(size_t)u] -= coef;
                            }
                        }
                    }
                    for (int s = 0; s < m; ++s)
                        if (acc[(size_t)s] != 0) ok = false;
                }
                ortho = ortho && ok;
            }
        } else {
            for (std::size_t i = 0; i < nch && ortho; ++i)
                for (std::size_t j = i + 1; j < nch && ortho; ++j)
                    if (!inner_product(rep.characters[i], rep.characters[j])
                             .is_zero())
                        ortho = false;
        }
        rep.orthonormal_ok = ortho;
        if (!ortho) diag << "orthogonality failed; ";
    }

    rep.diagnostic = diag.str();
    return rep;
}

}  // namespace d4u
