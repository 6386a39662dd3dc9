#include "d4u/ugroup.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace d4u {

Quotient::Quotient(RootSet killed) : killed_(killed) {
    if (!killed.empty() && !is_upper_closed(killed))
        throw std::invalid_argument("Quotient: killed set is not upper-closed");
}

Group::Group(const Field& f) : f_(&f) {
    for (const CommRel& r : comm_table()) {
        rel_[r.i][r.j] = {(std::uint8_t)r.k, (std::int8_t)r.sign};
        rel_[r.j][r.i] = {(std::uint8_t)r.k, (std::int8_t)-r.sign};
    }
    for (int j = 1; j <= kNumRoots; ++j)
        for (int m = j + 1; m <= kNumRoots; ++m)
            if (rel_[m][j].k)
                tail_[(size_t)j].push_back(
                    {(std::uint8_t)m, rel_[m][j].k, rel_[m][j].sign});
}

Coords Group::x(int root, fe t) const {
    if (root < 1 || root > kNumRoots)
        throw std::out_of_range("Group: root index out of range");
    Coords c{};
    c[(size_t)(root - 1)] = t;
    return c;
}

void Group::rmul_letter(Coords& c, int root, fe t) const {
    if (t == 0) return;
    const Field& F = *f_;
    // fast path: nothing in the suffix interacts with x_root
    bool interacting = false;
    for (const TailRel& r : tail_[(size_t)root]) {
        if (c[(size_t)(r.m - 1)] != 0) {
            interacting = true;
            break;
        }
    }
    if (!interacting) {
        fe& d = c[(size_t)(root - 1)];
        d = F.add(d, t);
        return;
    }
    // split off the suffix, merge the letter, reinsert suffix letters each
    // followed by its correction [x_m(d_m), x_root(t)] = x_k(sign*d_m*t)
    fe suffix[kNumRoots];
    for (int m = root + 1; m <= kNumRoots; ++m) {
        suffix[m - 1] = c[(size_t)(m - 1)];
        c[(size_t)(m - 1)] = 0;
    }
    c[(size_t)(root - 1)] = F.add(c[(size_t)(root - 1)], t);
    for (int m = root + 1; m <= kNumRoots; ++m) {
        fe dm = suffix[m - 1];
        if (dm == 0) continue;
        rmul_letter(c, m, dm);
        const Rel& r = rel_[m][root];
        if (r.k) rmul_letter(c, r.k, F.signed_of(r.sign, F.mul(dm, t)));
    }
}

Coords Group::normalize(const Word& w, const Quotient& ctx) const {
    Coords c{};
    for (const Letter& l : w) rmul_letter(c, l.root, l.t);
    ctx.mask(c);
    return c;
}

Coords Group::mul(const Coords& a, const Coords& b, const Quotient& ctx) const {
    Coords c = a;
    for (int r = 1; r <= kNumRoots; ++r)
        if (b[(size_t)(r - 1)]) rmul_letter(c, r, b[(size_t)(r - 1)]);
    ctx.mask(c);
    return c;
}

Coords Group::inv(const Coords& a, const Quotient& ctx) const {
    Coords c{};
    for (int r = kNumRoots; r >= 1; --r)
        if (a[(size_t)(r - 1)]) rmul_letter(c, r, f_->neg(a[(size_t)(r - 1)]));
    ctx.mask(c);
    return c;
}

Coords Group::conj(const Coords& g, const Coords& h, const Quotient& ctx) const {
    Coords c = inv(h);
    for (int r = 1; r <= kNumRoots; ++r)
        if (g[(size_t)(r - 1)]) rmul_letter(c, r, g[(size_t)(r - 1)]);
    for (int r = 1; r <= kNumRoots; ++r)
        if (h[(size_t)(r - 1)]) rmul_letter(c, r, h[(size_t)(r - 1)]);
    ctx.mask(c);
    return c;
}

Coords Group::commutator(const Coords& a, const Coords& b,
                         const Quotient& ctx) const {
    Coords c = mul(inv(a), inv(b));
    c = mul(c, a);
    c = mul(c, b);
    ctx.mask(c);
    return c;
}

RootSet Group::support(const Coords& c) const {
    RootSet s;
    for (int r = 1; r <= kNumRoots; ++r)
        if (c[(size_t)(r - 1)]) s.insert(r);
    return s;
}

PackCodec::PackCodec(const Field& f, RootSet active)
    : q_(f.q()), active_(active), roots_(active.members()) {
    size_ = 1;
    for (size_t i = 0; i < roots_.size(); ++i) size_ *= (std::uint64_t)q_;
}

std::uint64_t PackCodec::pack(const Coords& c) const {
    std::uint64_t code = 0;
    for (size_t i = roots_.size(); i-- > 0;)
        code = code * (std::uint64_t)q_ + c[(size_t)(roots_[i] - 1)];
    return code;
}

Coords PackCodec::unpack(std::uint64_t code) const {
    if (code >= size_) throw std::out_of_range("PackCodec: code out of range");
    Coords c{};
    for (size_t i = 0; i < roots_.size(); ++i) {
        c[(size_t)(roots_[i] - 1)] = (fe)(code % (std::uint64_t)q_);
        code /= (std::uint64_t)q_;
    }
    return c;
}

PatternSubgroup::PatternSubgroup(const Field& f, RootSet roots, Quotient ctx)
    : f_(&f), roots_(roots), ctx_(ctx) {
    if (!(roots & ctx.killed()).empty())
        throw std::invalid_argument("PatternSubgroup: roots overlap killed set");
    if (!is_closed(roots | ctx.killed()))
        throw std::invalid_argument("PatternSubgroup: root set is not closed");
}

std::uint64_t PatternSubgroup::order() const {
    std::uint64_t o = 1;
    for (int i = 0; i < roots_.size(); ++i) o *= (std::uint64_t)f_->q();
    return o;
}

bool PatternSubgroup::contains(const Group& g, const Coords& c) const {
    return (g.support(c) - roots_).empty();
}

void for_each_element(const Group& g, const PatternSubgroup& p,
                      const std::function<void(const Coords&)>& fn) {
    PackCodec codec(g.field(), p.roots());
    for (std::uint64_t code = 0; code < codec.size(); ++code)
        fn(codec.unpack(code));
}

std::vector<Coords> enumerate(const Group& g, const PatternSubgroup& p,
                              std::uint64_t guard) {
    if (p.order() > guard)
        throw std::invalid_argument("enumerate: subgroup exceeds size guard");
    std::vector<Coords> out;
    out.reserve(p.order());
    for_each_element(g, p, [&](const Coords& c) { out.push_back(c); });
    return out;
}

namespace {

// closure of `seed` under right multiplication by `gens`, optionally also
// under conjugation by `conj_gens` (normal closure); all as packed codes
std::vector<std::uint64_t> subgroup_closure(
    const Group& g, const PackCodec& codec, const Quotient& ctx,
    const std::vector<Coords>& seed, const std::vector<Coords>& conj_gens) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> frontier;
    auto push = [&](const Coords& c) {
        std::uint64_t code = codec.pack(c);
        if (seen.insert(code).second) frontier.push_back(code);
    };
    push(g.identity());
    for (const Coords& s : seed) push(s);
    while (!frontier.empty()) {
        std::uint64_t code = frontier.back();
        frontier.pop_back();
        Coords c = codec.unpack(code);
        for (const Coords& s : seed) push(g.mul(c, s, ctx));
        for (const Coords& h : conj_gens) push(g.conj(c, h, ctx));
    }
    std::vector<std::uint64_t> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

namespace {

std::vector<Coords> letter_generators(const Group& g, const PatternSubgroup& p) {
    std::vector<Coords> gens;
    for (int r : p.roots().members())
        for (int t = 1; t < g.field().q(); ++t) gens.push_back(g.x(r, (fe)t));
    return gens;
}

}  // namespace

std::vector<std::uint64_t> derived_subgroup(const Group& g,
                                            const PatternSubgroup& p,
                                            std::uint64_t guard) {
    if (p.order() > guard)
        throw std::invalid_argument("derived_subgroup: size guard exceeded");
    const Quotient& ctx = p.ctx();
    PackCodec codec(g.field(), ctx.active());
    std::vector<Coords> gens = letter_generators(g, p);
    std::vector<Coords> comms;
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j) {
            Coords c = g.commutator(gens[i], gens[j], ctx);
            if (c != g.identity()) comms.push_back(c);
        }
    return subgroup_closure(g, codec, ctx, comms, gens);
}

SubgroupAnalysis derived_and_center(const Group& g, const PatternSubgroup& p,
                                    std::uint64_t guard) {
    if (p.order() > guard)
        throw std::invalid_argument("derived_and_center: size guard exceeded");
    const Field& F = g.field();
    const Quotient& ctx = p.ctx();
    PackCodec codec(F, ctx.active());

    std::vector<Coords> gens = letter_generators(g, p);

    SubgroupAnalysis out;
    out.derived = derived_subgroup(g, p, guard);

    out.exponent = 1;
    PackCodec sub(F, p.roots());
    for (std::uint64_t code = 0; code < sub.size(); ++code) {
        Coords c = sub.unpack(code);
        ctx.mask(c);
        // element order, and centrality against the generators
        std::uint64_t ord = 1;
        Coords pow = c;
        while (pow != g.identity()) {
            pow = g.mul(pow, c, ctx);
            ++ord;
        }
        if (ord > out.exponent) out.exponent = ord;  // orders are p-powers
        bool central = true;
        for (const Coords& h : gens)
            if (g.conj(c, h, ctx) != c) {
                central = false;
                break;
            }
        if (central) out.center.push_back(codec.pack(c));
    }
    std::sort(out.center.begin(), out.center.end());
    return out;
}

}  // namespace d4u
