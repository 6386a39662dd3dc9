#include "d4u/chars.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace d4u {

namespace {

// t^-1 g t with the inverse precomputed
Coords conj_pre(const Group& g, const Coords& x, const Coords& t,
                const Coords& t_inv, const Quotient& ctx) {
    Coords r = t_inv;
    for (int i = 1; i <= kNumRoots; ++i)
        if (x[(size_t)(i - 1)]) g.rmul_letter(r, i, x[(size_t)(i - 1)]);
    for (int i = 1; i <= kNumRoots; ++i)
        if (t[(size_t)(i - 1)]) g.rmul_letter(r, i, t[(size_t)(i - 1)]);
    ctx.mask(r);
    return r;
}

bool supported_on(const Coords& c, RootSet s) {
    for (int r = 1; r <= kNumRoots; ++r)
        if (c[(size_t)(r - 1)] && !s.contains(r)) return false;
    return true;
}

Cyc value_from_counts(int p, const std::vector<long long>& counts) {
    Cyc v = Cyc::zero(p);
    for (int r = 0; r < p; ++r)
        if (counts[(size_t)r])
            v += Cyc::zeta_pow(p, r).scaled(Rat(counts[(size_t)r]));
    return v;
}

}  // namespace

LinearChar linear_character(const Group&, const PatternSubgroup& p,
                            const std::array<fe, kNumRoots>& params) {
    RootSet s = p.roots();
    for (int r = 1; r <= kNumRoots; ++r)
        if (params[(size_t)(r - 1)] != 0 && !s.contains(r))
            throw std::invalid_argument(
                "linear_character: parameter outside the domain");
    // homomorphism: parameters must vanish on the derived directions, the
    // roots that are sums of two members of the set (killed sums impose
    // nothing, the quotient zeroes them)
    for (int i : s.members())
        for (int j : s.members()) {
            if (j <= i) continue;
            auto k = root_sum(i, j);
            if (k && s.contains(*k) && params[(size_t)(*k - 1)] != 0)
                throw std::invalid_argument(
                    "linear_character: nonzero parameter on a derived direction "
                    "(root " + std::to_string(*k) + ")");
        }
    return LinearChar{p, params};
}

int linear_exp(const Group& g, const LinearChar& l, const Coords& c) {
    const Field& F = g.field();
    int e = 0;
    for (int r = 1; r <= kNumRoots; ++r) {
        fe s = l.params[(size_t)(r - 1)];
        if (s) e += F.trace(F.mul(s, c[(size_t)(r - 1)]));
    }
    return e % F.p();
}

Cyc linear_value(const Group& g, const LinearChar& l, const Coords& c) {
    return Cyc::zeta_pow(g.field().p(), linear_exp(g, l, c));
}

ClassFunction::ClassFunction(const ClassData& cd, std::vector<Cyc> values,
                             std::string family)
    : cd_(&cd), v_(std::move(values)), family_(std::move(family)) {
    if (v_.size() != cd.count())
        throw std::invalid_argument("ClassFunction: value count mismatch");
}

long long ClassFunction::degree() const {
    Rat d = v_[0].rat_value();
    if (!d.is_integer())
        throw std::domain_error("ClassFunction: non-integral degree");
    return d.num();
}

namespace {

struct Transversal {
    std::vector<Coords> t, t_inv;
};

Transversal complement_transversal(const Group& g, const ClassData& cd,
                                   RootSet domain_roots) {
    RootSet comp = cd.active() - domain_roots;
    PackCodec codec(g.field(), comp);
    Transversal tr;
    tr.t.reserve(codec.size());
    tr.t_inv.reserve(codec.size());
    for (std::uint64_t code = 0; code < codec.size(); ++code) {
        Coords c = codec.unpack(code);
        tr.t.push_back(c);
        tr.t_inv.push_back(g.inv(c));
    }
    return tr;
}

}  // namespace

ClassFunction induce(const Group& g, const LinearChar& l, const ClassData& cd,
                     bool parallel) {
    if (l.domain.ctx().killed() != cd.killed)
        throw std::invalid_argument("induce: domain quotient != ambient quotient");
    const Field& F = g.field();
    const int p = F.p();
    Quotient ctx(cd.killed);
    RootSet s = l.domain.roots();
    Transversal tr = complement_transversal(g, cd, s);
    const std::size_t nt = tr.t.size();
    const std::size_t nc = cd.count();

    std::vector<Cyc> vals(nc, Cyc::zero(p));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (parallel && nc * nt > 4096)
#endif
    for (long long ci = 0; ci < (long long)nc; ++ci) {
        std::vector<long long> counts((size_t)p, 0);
        const Coords& rep = cd.reps[(size_t)ci];
        for (std::size_t k = 0; k < nt; ++k) {
            Coords y = conj_pre(g, rep, tr.t[k], tr.t_inv[k], ctx);
            if (supported_on(y, s)) ++counts[(size_t)linear_exp(g, l, y)];
        }
        vals[(size_t)ci] = value_from_counts(p, counts);
    }
    ClassFunction chi(cd, std::move(vals));
    if ((std::uint64_t)chi.degree() != nt)
        throw std::logic_error("induce: degree != index of the domain");
    return chi;
}

ClassFunction induce_full_sum(const Group& g, const LinearChar& l,
                              const ClassData& cd) {
    if (l.domain.ctx().killed() != cd.killed)
        throw std::invalid_argument("induce: domain quotient != ambient quotient");
    const Field& F = g.field();
    const int p = F.p();
    Quotient ctx(cd.killed);
    RootSet s = l.domain.roots();
    PackCodec codec = cd.codec();
    std::uint64_t dom_order = l.domain.order();

    std::vector<Cyc> vals;
    vals.reserve(cd.count());
    for (std::size_t ci = 0; ci < cd.count(); ++ci) {
        std::vector<long long> counts((size_t)p, 0);
        const Coords& rep = cd.reps[ci];
        for (std::uint64_t code = 0; code < codec.size(); ++code) {
            Coords x = codec.unpack(code);
            Coords y = g.conj(rep, x, ctx);
            if (supported_on(y, s)) ++counts[(size_t)linear_exp(g, l, y)];
        }
        Cyc v = value_from_counts(p, counts);
        // every term is counted |domain| times
        vals.push_back(v.scaled(Rat(1, (long long)dom_order)));
    }
    return ClassFunction(cd, std::move(vals));
}

ClassFunction inflate(const ClassFunction& chi, const ClassData& target) {
    const ClassData& src = chi.classes();
    if (src.field != target.field)
        throw std::invalid_argument("inflate: field mismatch");
    if ((target.killed - src.killed) != RootSet())
        throw std::invalid_argument("inflate: target kills more than the source");
    Quotient proj(src.killed);
    PackCodec codec = src.codec();
    std::vector<Cyc> vals;
    vals.reserve(target.count());
    for (std::size_t ci = 0; ci < target.count(); ++ci) {
        Coords c = target.reps[ci];
        proj.mask(c);
        vals.push_back(chi.value(src.index_of[codec.pack(c)]));
    }
    return ClassFunction(target, std::move(vals), chi.family());
}

ClassFunction tensor(const ClassFunction& a, const ClassFunction& b) {
    if (&a.classes() != &b.classes())
        throw std::invalid_argument("tensor: class data mismatch");
    std::vector<Cyc> vals;
    vals.reserve(a.values().size());
    for (std::size_t i = 0; i < a.values().size(); ++i)
        vals.push_back(a.value((std::uint32_t)i) * b.value((std::uint32_t)i));
    return ClassFunction(a.classes(), std::move(vals), a.family());
}

ClassFunction linear_class_function(const Group& g, const ClassData& cd,
                                    const std::array<fe, kNumRoots>& params) {
    PatternSubgroup whole(g.field(), cd.active(), Quotient(cd.killed));
    LinearChar l = linear_character(g, whole, params);
    std::vector<Cyc> vals;
    vals.reserve(cd.count());
    for (const Coords& rep : cd.reps) vals.push_back(linear_value(g, l, rep));
    return ClassFunction(cd, std::move(vals));
}

namespace {

// integral coefficient view of a value vector, or empty on failure
bool int_view(const ClassFunction& f, std::vector<long long>& flat, int p) {
    flat.resize(f.values().size() * (size_t)(p - 1));
    for (std::size_t i = 0; i < f.values().size(); ++i) {
        const auto& c = f.value((std::uint32_t)i).coeffs();
        for (int j = 0; j < p - 1; ++j) {
            if (!c[(size_t)j].is_integer()) return false;
            flat[i * (size_t)(p - 1) + (size_t)j] = c[(size_t)j].num();
        }
    }
    return true;
}

}  // namespace

Cyc inner_product(const ClassFunction& a, const ClassFunction& b) {
    const ClassData& cd = a.classes();
    if (&cd != &b.classes())
        throw std::invalid_argument("inner_product: class data mismatch");
    const int p = cd.field->p();
    const int m = p - 1;

    std::vector<long long> fa, fb;
    if (int_view(a, fa, p) && int_view(b, fb, p)) {
        // integer accumulation: acc += size * a(c) * conj(b(c)); exponent
        // arithmetic on the basis 1..zeta^(p-2) with the zeta^(p-1) fold
        std::vector<long long> acc((size_t)m, 0);
        for (std::size_t ci = 0; ci < cd.count(); ++ci) {
            const long long* va = &fa[ci * (size_t)m];
            const long long* vb = &fb[ci * (size_t)m];
            long long w = (long long)cd.sizes[ci];
            for (int i = 0; i < m; ++i) {
                if (va[i] == 0) continue;
                for (int j = 0; j < m; ++j) {
                    if (vb[j] == 0) continue;
                    long long coef = w * va[i] * vb[j];
                    int e = (i - j) % p;
                    if (e < 0) e += p;
                    if (e < m)
                        acc[(size_t)e] += coef;
                    else
                        for (int t = 0; t < m; ++t) acc[(size_t)t] -= coef;
                }
            }
        }
        Cyc r = Cyc::zero(p);
        for (int i = 0; i < m; ++i)
            if (acc[(size_t)i])
                r += Cyc::zeta_pow(p, i).scaled(Rat(acc[(size_t)i]));
        return r.scaled(Rat(1, (long long)cd.group_order));
    }

    Cyc sum = Cyc::zero(p);
    for (std::size_t ci = 0; ci < cd.count(); ++ci)
        sum += (a.value((std::uint32_t)ci) * b.value((std::uint32_t)ci).conj())
                   .scaled(Rat((long long)cd.sizes[ci]));
    return sum.scaled(Rat(1, (long long)cd.group_order));
}

bool is_irreducible(const ClassFunction& chi) {
    return inner_product(chi, chi) == Cyc::one(chi.classes().field->p());
}

RootSet kernel_roots(const Group& g, const ClassFunction& chi) {
    const ClassData& cd = chi.classes();
    const Cyc& deg = chi.value(0);
    RootSet ker = cd.killed;  // killed roots project to the identity
    for (int r : cd.active().members()) {
        bool in_ker = true;
        for (int t = 1; t < g.field().q(); ++t) {
            std::uint32_t cls = cd.class_of(g, g.x(r, (fe)t));
            if (chi.value(cls) != deg) {
                in_ker = false;
                break;
            }
        }
        if (in_ker) ker.insert(r);
    }
    return ker;
}

std::vector<std::pair<fe, long long>> restrict_to_root_subgroup(
    const Group& g, const ClassFunction& chi, int alpha) {
    const Field& F = g.field();
    const ClassData& cd = chi.classes();
    const int p = F.p();
    std::vector<std::pair<fe, long long>> out;
    for (int s = 0; s < F.q(); ++s) {
        // multiplicity of phi_{alpha,s}: (1/q) sum_t chi(x_alpha(t)) conj(phi(st))
        Cyc acc = Cyc::zero(p);
        for (int t = 0; t < F.q(); ++t) {
            const Cyc& v = chi.value(cd.class_of(g, g.x(alpha, (fe)t)));
            acc += v * F.additive_character((fe)s, (fe)t).conj();
        }
        acc = acc.scaled(Rat(1, F.q()));
        if (acc.is_zero()) continue;
        Rat m = acc.rat_value();  // throws if not rational
        if (!m.is_integer() || m.num() < 0)
            throw std::logic_error("restrict_to_root_subgroup: bad multiplicity");
        if (m.num() > 0) out.emplace_back((fe)s, m.num());
    }
    return out;
}

ClassFunction midafi(const Group& g, int alpha, fe s, const ClassData& cd,
                     bool parallel) {
    if (s == 0) throw std::invalid_argument("midafi: s must be nonzero");
    Quotient ctx(cd.killed);
    if (cd.killed.contains(alpha))
        throw std::invalid_argument("midafi: root is killed by the quotient");
    RootSet dom = v_alpha(alpha) - cd.killed;
    PatternSubgroup v(g.field(), dom, ctx);
    std::array<fe, kNumRoots> params{};
    params[(size_t)(alpha - 1)] = s;
    ClassFunction chi = induce(g, linear_character(g, v, params), cd, parallel);
    chi.set_family("midafi");
    return chi;
}

// ---- conjugation action on Irr(A) ----

namespace {

// lookup from the trace profile (Tr(s*b_0), ..., Tr(s*b_{n-1})) back to s,
// where b_j are the power-basis elements; the trace form is nondegenerate
std::vector<fe> trace_profile_table(const Field& F) {
    int n = F.n(), p = F.p();
    std::vector<fe> basis((size_t)n);
    for (int j = 0; j < n; ++j) {
        std::vector<int> c((size_t)n, 0);
        c[(size_t)j] = 1;
        basis[(size_t)j] = F.from_coeffs(c);
    }
    std::size_t keys = 1;
    for (int j = 0; j < n; ++j) keys *= (size_t)p;
    std::vector<fe> table(keys, 0);
    for (int s = 0; s < F.q(); ++s) {
        std::size_t key = 0;
        for (int j = n - 1; j >= 0; --j)
            key = key * (size_t)p +
                  (size_t)F.trace(F.mul((fe)s, basis[(size_t)j]));
        table[key] = (fe)s;
    }
    return table;
}

}  // namespace

std::array<fe, kNumRoots> conj_params(const Group& g, const PatternSubgroup& a,
                                      const std::array<fe, kNumRoots>& params,
                                      const Coords& k) {
    const Field& F = g.field();
    const int n = F.n(), p = F.p();
    // cache keyed by the field's defining data, not its address
    static thread_local int cached_p = 0, cached_n = 0;
    static thread_local std::vector<int> cached_mod;
    static thread_local std::vector<fe> table;
    static thread_local std::vector<fe> basis;
    if (cached_p != F.p() || cached_n != F.n() || cached_mod != F.modulus()) {
        table = trace_profile_table(F);
        basis.clear();
        for (int j = 0; j < n; ++j) {
            std::vector<int> c((size_t)n, 0);
            c[(size_t)j] = 1;
            basis.push_back(F.from_coeffs(c));
        }
        cached_p = F.p();
        cached_n = F.n();
        cached_mod = F.modulus();
    }
    const Quotient& ctx = a.ctx();
    Coords k_inv = g.inv(k);
    LinearChar l{a, params};
    std::array<fe, kNumRoots> out{};
    for (int r : a.roots().members()) {
        std::size_t key = 0;
        for (int j = n - 1; j >= 0; --j) {
            // lambda^k(x_r(b_j)) = lambda(k x_r(b_j) k^-1)
            Coords y = g.conj(g.x(r, basis[(size_t)j]), k_inv, ctx);
            if (!supported_on(y, a.roots()))
                throw std::logic_error("conj_params: A is not normal");
            key = key * (size_t)p + (size_t)linear_exp(g, l, y);
        }
        out[(size_t)(r - 1)] = table[key];
    }
    return out;
}

std::vector<InertiaChar> extend_to_inertia(const Group& g, const LinearChar& l,
                                           const Coords& k0) {
    const Field& F = g.field();
    const Quotient& ctx = l.domain.ctx();
    if (F.p() != 2)
        throw std::invalid_argument("extend_to_inertia: implemented for p = 2");
    if (supported_on(k0, l.domain.roots()))
        throw std::invalid_argument("extend_to_inertia: k0 lies in the domain");
    // index 2: k0^2 must fall back into A
    Coords k0sq = g.mul(k0, k0, ctx);
    if (!supported_on(k0sq, l.domain.roots()))
        throw std::invalid_argument("extend_to_inertia: index != 2");
    // invariance of lambda under k0
    if (conj_params(g, l.domain, l.params, k0) != l.params)
        throw std::invalid_argument("extend_to_inertia: lambda not invariant");
    // mu(k0)^2 = lambda(k0^2); with values in Q the square root must be +-1
    Cyc rhs = linear_value(g, l, k0sq);
    if (!(rhs == Cyc::one(2)))
        throw std::domain_error(
            "extend_to_inertia: lambda(k0^2) != 1, no rational extension");
    return {InertiaChar{l.domain, l.params, k0, +1},
            InertiaChar{l.domain, l.params, k0, -1}};
}

ClassFunction induce_inertia(const Group& g, const InertiaChar& ic,
                             const ClassData& cd,
                             const std::vector<Coords>& transversal,
                             bool parallel) {
    const Field& F = g.field();
    const int p = F.p();
    Quotient ctx(cd.killed);
    RootSet aset = ic.domain_a.roots();
    LinearChar l{ic.domain_a, ic.params};
    Coords k0_inv = g.inv(ic.k0, ctx);

    std::vector<Coords> t_inv;
    t_inv.reserve(transversal.size());
    for (const Coords& t : transversal) t_inv.push_back(g.inv(t, ctx));

    std::vector<Cyc> vals(cd.count(), Cyc::zero(p));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
#endif
    for (long long ci = 0; ci < (long long)cd.count(); ++ci) {
        std::vector<long long> counts((size_t)(2 * p), 0);  // exponent + sign
        const Coords& rep = cd.reps[(size_t)ci];
        for (std::size_t k = 0; k < transversal.size(); ++k) {
            Coords y = conj_pre(g, rep, transversal[k], t_inv[k], ctx);
            if (supported_on(y, aset)) {
                ++counts[(size_t)linear_exp(g, l, y)];
            } else {
                Coords z = g.mul(k0_inv, y, ctx);
                if (supported_on(z, aset))
                    ++counts[(size_t)(p + linear_exp(g, l, z))];
            }
        }
        Cyc v = Cyc::zero(p);
        for (int r = 0; r < p; ++r) {
            long long c = counts[(size_t)r] + ic.mu0 * counts[(size_t)(p + r)];
            if (c) v += Cyc::zeta_pow(p, r).scaled(Rat(c));
        }
        vals[(size_t)ci] = v;
    }
    return ClassFunction(cd, std::move(vals));
}

fe t_cdef(const Field& F, fe c, fe d, fe e, fe ff) {
    if (F.p() != 2) throw std::invalid_argument("t_cdef: even q only");
    std::vector<bool> image((size_t)F.q(), false);
    fe def = F.mul(F.mul(d, e), ff);
    fe cd = F.mul(c, d);
    for (int z = 0; z < F.q(); ++z) {
        fe zz = (fe)z;
        image[F.add(F.mul(def, F.mul(zz, zz)), F.mul(cd, zz))] = true;
    }
    for (int t = 0; t < F.q(); ++t)
        if (!image[(size_t)t]) return (fe)t;
    throw std::logic_error("t_cdef: image is everything");
}

KOrbitReport k_orbit_analysis(const Group& g) {
    const Field& F = g.field();
    const int q = F.q();
    KOrbitReport rep;
    rep.q = q;
    rep.parity = parity_of(q);

    Quotient ctx(RootSet::of({11, 12}));
    const std::array<int, 7> dirs = {3, 5, 6, 7, 8, 9, 10};
    PatternSubgroup A(F, RootSet::of({3, 5, 6, 7, 8, 9, 10}), ctx);

    std::uint64_t nstates = 1;
    for (int i = 0; i < 7; ++i) nstates *= (std::uint64_t)q;
    auto encode = [&](const std::array<fe, kNumRoots>& params) {
        std::uint64_t code = 0;
        for (int i = 6; i >= 0; --i)
            code = code * (std::uint64_t)q + params[(size_t)(dirs[(size_t)i] - 1)];
        return code;
    };
    auto decode = [&](std::uint64_t code) {
        std::array<fe, kNumRoots> params{};
        for (int i = 0; i < 7; ++i) {
            params[(size_t)(dirs[(size_t)i] - 1)] = (fe)(code % (std::uint64_t)q);
            code /= (std::uint64_t)q;
        }
        return params;
    };

    std::vector<Coords> gens;
    for (int i : {1, 2, 4})
        for (int t = 1; t < q; ++t) gens.push_back(g.x(i, (fe)t));

    // orbit partition of the whole parameter space
    std::vector<std::int32_t> orbit_of(nstates, -1);
    std::vector<std::uint64_t> orbit_size;
    std::vector<std::uint64_t> stack;
    for (std::uint64_t seed = 0; seed < nstates; ++seed) {
        if (orbit_of[seed] >= 0) continue;
        std::int32_t id = (std::int32_t)orbit_size.size();
        orbit_size.push_back(0);
        orbit_of[seed] = id;
        stack.push_back(seed);
        while (!stack.empty()) {
            std::uint64_t code = stack.back();
            stack.pop_back();
            ++orbit_size.back();
            auto params = decode(code);
            for (const Coords& k : gens) {
                std::uint64_t img = encode(conj_params(g, A, params, k));
                if (orbit_of[img] < 0) {
                    orbit_of[img] = id;
                    stack.push_back(img);
                }
            }
        }
    }

    auto stab_order = [&](const std::array<fe, kNumRoots>& params) {
        // brute force over all of K = X_1 X_2 X_4
        std::uint64_t count = 0;
        for (int r = 0; r < q; ++r)
            for (int s = 0; s < q; ++s)
                for (int t = 0; t < q; ++t) {
                    Coords k = g.x(1, (fe)r);
                    g.rmul_letter(k, 2, (fe)s);
                    g.rmul_letter(k, 4, (fe)t);
                    if (conj_params(g, A, params, k) == params) ++count;
                }
        return count;
    };

    // the nondegenerate stratum: nontrivial on X_8, X_9, X_10
    auto in_stratum = [&](const std::array<fe, kNumRoots>& p) {
        return p[7] != 0 && p[8] != 0 && p[9] != 0;
    };
    std::vector<bool> covered(orbit_size.size(), false);
    rep.stratum_size = 0;
    for (std::uint64_t code = 0; code < nstates; ++code)
        if (in_stratum(decode(code))) ++rep.stratum_size;

    // parity-specific representative set
    std::vector<std::array<fe, kNumRoots>> reps;
    if (rep.parity == Parity::odd) {
        for (int x = 0; x < q; ++x)
            for (int d = 1; d < q; ++d)
                for (int e = 1; e < q; ++e)
                    for (int f = 1; f < q; ++f) {
                        std::array<fe, kNumRoots> p{};
                        p[2] = (fe)x;
                        p[7] = (fe)d;
                        p[8] = (fe)e;
                        p[9] = (fe)f;
                        reps.push_back(p);
                    }
    } else {
        for (int d = 1; d < q; ++d)
            for (int e = 1; e < q; ++e)
                for (int f = 1; f < q; ++f) {
                    std::array<fe, kNumRoots> p{};
                    p[7] = (fe)d;
                    p[8] = (fe)e;
                    p[9] = (fe)f;
                    reps.push_back(p);
                    for (int c = 1; c < q; ++c) {
                        fe tc = t_cdef(F, (fe)c, (fe)d, (fe)e, (fe)f);
                        for (fe x : {(fe)0, tc}) {
                            std::array<fe, kNumRoots> pe{};
                            pe[2] = x;
                            pe[6] = (fe)c;
                            pe[7] = (fe)d;
                            pe[8] = (fe)e;
                            pe[9] = (fe)f;
                            reps.push_back(pe);
                        }
                    }
                }
    }
    rep.rep_count = reps.size();

    rep.reps_in_stratum = true;
    rep.orbits_disjoint = true;
    rep.stabilizers_ok = true;
    std::uint64_t covered_size = 0;
    for (const auto& p : reps) {
        if (!in_stratum(p)) rep.reps_in_stratum = false;
        std::int32_t id = orbit_of[encode(p)];
        if (covered[(size_t)id])
            rep.orbits_disjoint = false;
        else {
            covered[(size_t)id] = true;
            covered_size += orbit_size[(size_t)id];
        }
        std::uint64_t st = stab_order(p);
        std::uint64_t expected =
            (rep.parity == Parity::odd || p[6] == 0) ? 1 : 2;
        if (st != expected) rep.stabilizers_ok = false;
    }
    // even case: the order-2 stabilizer holds for every x on the c-stratum,
    // not just for the representative x values
    if (rep.parity == Parity::even && rep.stabilizers_ok) {
        for (int x = 0; x < q && rep.stabilizers_ok; ++x)
            for (int c = 1; c < q && rep.stabilizers_ok; ++c) {
                std::array<fe, kNumRoots> p{};
                p[2] = (fe)x;
                p[6] = (fe)c;
                p[7] = p[8] = p[9] = F.one();
                if (stab_order(p) != 2) rep.stabilizers_ok = false;
            }
    }
    // the stratum is invariant under the action (the X_8, X_9, X_10
    // parameters are fixed by conjugation), so disjoint rep orbits matching
    // its cardinality cover it exactly
    rep.orbits_cover = (covered_size == rep.stratum_size);

    for (std::size_t id = 0; id < orbit_size.size(); ++id)
        if (covered[id]) ++rep.orbit_inventory[orbit_size[id]];

    return rep;
}

}  // namespace d4u
