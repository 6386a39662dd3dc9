#include "d4u/classes.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace d4u {

namespace {

std::vector<Coords> conjugating_generators(const Group& g, const Quotient& ctx) {
    std::vector<Coords> gens;
    for (int i = 1; i <= 4; ++i) {
        if (ctx.killed().contains(i)) continue;
        for (int t = 1; t < g.field().q(); ++t) gens.push_back(g.x(i, (fe)t));
    }
    return gens;
}

ClassData finish(const Group& g, const Quotient& ctx, const PackCodec& codec,
                 std::vector<std::uint16_t> index_of,
                 const std::vector<std::uint64_t>& rep_codes,
                 std::vector<std::uint64_t> sizes) {
    ClassData cd;
    cd.field = &g.field();
    cd.killed = ctx.killed();
    cd.group_order = codec.size();
    cd.index_of = std::move(index_of);
    cd.sizes = std::move(sizes);
    cd.reps.reserve(rep_codes.size());
    for (std::uint64_t code : rep_codes) cd.reps.push_back(codec.unpack(code));
    return cd;
}

}  // namespace

std::uint32_t ClassData::class_of(const Group& g, const Coords& c) const {
    Coords m = c;
    Quotient(killed).mask(m);
    (void)g;
    return index_of[codec().pack(m)];
}

ClassData conjugacy_classes_serial(const Group& g, Quotient ctx,
                                   std::uint64_t state_guard) {
    PackCodec codec(g.field(), ctx.trivial() ? RootSet::all() : ctx.active());
    const std::uint64_t n = codec.size();
    if (n > state_guard)
        throw std::invalid_argument("conjugacy_classes: state guard exceeded");

    std::vector<Coords> gens = conjugating_generators(g, ctx);
    std::vector<std::uint16_t> index_of(n);
    std::vector<bool> visited(n, false);
    std::vector<std::uint64_t> rep_codes, sizes;
    std::vector<std::uint64_t> stack;

    for (std::uint64_t seed = 0; seed < n; ++seed) {
        if (visited[seed]) continue;
        // ascending seed scan: the seed is the minimal code of its orbit
        std::uint16_t id = (std::uint16_t)rep_codes.size();
        rep_codes.push_back(seed);
        std::uint64_t orbit = 0;
        visited[seed] = true;
        stack.push_back(seed);
        while (!stack.empty()) {
            std::uint64_t code = stack.back();
            stack.pop_back();
            index_of[code] = id;
            ++orbit;
            Coords c = codec.unpack(code);
            for (const Coords& h : gens) {
                std::uint64_t img = codec.pack(g.conj(c, h, ctx));
                if (!visited[img]) {
                    visited[img] = true;
                    stack.push_back(img);
                }
            }
        }
        sizes.push_back(orbit);
    }
    return finish(g, ctx, codec, std::move(index_of), rep_codes, std::move(sizes));
}

namespace {

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::uint64_t n) : parent(n) {
        for (std::uint64_t i = 0; i < n; ++i) parent[i] = (std::uint32_t)i;
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];  // path halving
            x = parent[x];
        }
        return x;
    }
    // keep the smaller code as the root, so roots are canonical reps
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b)
            parent[b] = a;
        else
            parent[a] = b;
    }
};

}  // namespace

ClassData conjugacy_classes(const Group& g, Quotient ctx, ClassOptions opts) {
    if (!opts.parallel) return conjugacy_classes_serial(g, ctx, opts.state_guard);

    PackCodec codec(g.field(), ctx.trivial() ? RootSet::all() : ctx.active());
    const std::uint64_t n = codec.size();
    if (n > opts.state_guard)
        throw std::invalid_argument("conjugacy_classes: state guard exceeded");
    if (n > (std::uint64_t)UINT32_MAX)
        throw std::invalid_argument("conjugacy_classes: state space too large");

    std::vector<Coords> gens = conjugating_generators(g, ctx);
    const std::size_t ng = gens.size();
    UnionFind uf(n);

    const std::uint64_t chunk = std::min<std::uint64_t>(n, 1u << 20);
    std::vector<std::uint32_t> images(chunk * ng);
    for (std::uint64_t base = 0; base < n; base += chunk) {
        const std::uint64_t end = std::min(n, base + chunk);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1024)
#endif
        for (long long code = (long long)base; code < (long long)end; ++code) {
            Coords c = codec.unpack((std::uint64_t)code);
            std::uint32_t* row = &images[(std::uint64_t)(code - (long long)base) * ng];
            for (std::size_t k = 0; k < ng; ++k)
                row[k] = (std::uint32_t)codec.pack(g.conj(c, gens[k], ctx));
        }
        for (std::uint64_t code = base; code < end; ++code) {
            const std::uint32_t* row = &images[(code - base) * ng];
            for (std::size_t k = 0; k < ng; ++k)
                uf.unite((std::uint32_t)code, row[k]);
        }
    }

    // classes in ascending order of their minimal code = their root
    std::vector<std::uint16_t> index_of(n);
    std::vector<std::uint64_t> rep_codes, sizes;
    for (std::uint64_t code = 0; code < n; ++code) {
        std::uint32_t root = uf.find((std::uint32_t)code);
        if (root == code) {
            if (rep_codes.size() >= 65535)
                throw std::overflow_error("conjugacy_classes: class id overflow");
            index_of[code] = (std::uint16_t)rep_codes.size();
            rep_codes.push_back(code);
            sizes.push_back(1);
        } else {
            index_of[code] = index_of[root];
            ++sizes[index_of[root]];
        }
    }
    return finish(g, ctx, codec, std::move(index_of), rep_codes, std::move(sizes));
}

long long class_count_polynomial(long long q, Parity parity) {
    if (q < 2) throw std::invalid_argument("class_count_polynomial: q < 2");
    if (parity_of(q) != parity)
        throw std::invalid_argument("class_count_polynomial: parity mismatch");
    long long q2 = q * q, q3 = q2 * q, q4 = q3 * q, q5 = q4 * q;
    if (parity == Parity::odd) return 2 * q5 + 5 * q4 - 4 * q3 - 4 * q2 + 2 * q;
    return 2 * q5 + 8 * q4 - 16 * q3 + 14 * q2 - 10 * q + 3;
}

}  // namespace d4u
