#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "d4u/ugroup.hpp"

namespace d4u {

// Conjugacy classes of U(q) or a quotient U/N. Canonical representative of a
// class is its minimal pack code; classes are numbered by ascending
// representative code, so class 0 is the identity. The partition, the
// representatives and the numbering are deterministic and identical for the
// serial and the parallel kernel.
struct ClassData {
    const Field* field = nullptr;
    RootSet killed;
    std::uint64_t group_order = 0;

    std::vector<Coords> reps;
    std::vector<std::uint64_t> sizes;
    std::vector<std::uint16_t> index_of;  // pack code -> class id

    std::size_t count() const { return reps.size(); }
    RootSet active() const { return RootSet::all() - killed; }
    PackCodec codec() const { return PackCodec(*field, active()); }

    std::uint32_t class_of_code(std::uint64_t code) const { return index_of[code]; }
    std::uint32_t class_of(const Group& g, const Coords& c) const;

    std::uint64_t centralizer_order(std::uint32_t cls) const {
        return group_order / sizes[cls];
    }
};

struct ClassOptions {
    bool parallel = true;
    std::uint64_t state_guard = 300'000'000;  // hard cap on q^(#active roots)
};

// Orbit partition of the state space under conjugation by the simple-root
// generators x_i(t), i in {1,2,3,4}, t != 0 (these generate U, hence the
// quotient). Serial kernel: linear seed scan with per-orbit BFS. Parallel
// kernel: conjugation images computed with OpenMP, merged through a
// union-find; identical output.
ClassData conjugacy_classes(const Group& g, Quotient ctx = {},
                            ClassOptions opts = {});
ClassData conjugacy_classes_serial(const Group& g, Quotient ctx = {},
                                   std::uint64_t state_guard = 300'000'000);

// The class-number polynomials: 2q^5+5q^4-4q^3-4q^2+2q for odd q,
// 2q^5+8q^4-16q^3+14q^2-10q+3 for even q. Throws on a parity mismatch.
enum class Parity { odd, even };
long long class_count_polynomial(long long q, Parity parity);
inline Parity parity_of(long long q) {
    return q % 2 == 0 ? Parity::even : Parity::odd;
}

}  // namespace d4u
