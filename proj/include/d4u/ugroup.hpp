#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "d4u/gf.hpp"
#include "d4u/rootsys.hpp"

namespace d4u {

// Normal form of an element of U(q): coordinate d_i (a field-element index)
// attached to root alpha_i, representing x_1(d_1) x_2(d_2) ... x_12(d_12) in
// ascending index order. The all-zero array is the identity; equality of
// elements is equality of coordinates.
using Coords = std::array<fe, kNumRoots>;

struct Letter {
    int root;  // 1..12
    fe t;
};
using Word = std::vector<Letter>;

// Quotient of U by the pattern subgroup on an upper-closed set of roots.
// Elements are represented by coordinates with the killed positions forced
// to zero; every group operation ends by re-zeroing them.
class Quotient {
public:
    Quotient() = default;  // trivial quotient, i.e. U itself
    explicit Quotient(RootSet killed);

    RootSet killed() const { return killed_; }
    RootSet active() const { return RootSet::all() - killed_; }
    bool trivial() const { return killed_.empty(); }

    void mask(Coords& c) const {
        for (int r = 1; r <= kNumRoots; ++r)
            if (killed_.contains(r)) c[(size_t)(r - 1)] = 0;
    }

private:
    RootSet killed_;
};

// Group arithmetic for U(q) driven by the commutator table. Multiplication
// collects words into the unique ascending normal form by inserting one
// letter at a time: inserting x_j(u) into a normal form splits off the
// suffix of indices > j, merges u into d_j, and reinserts each suffix letter
// x_m(d_m) followed by the correction [x_m(d_m), x_j(u)] = x_k(-c*u*d_m).
// Every recursive insertion has a strictly larger root index, so the
// recursion depth is at most 12.
class Group {
public:
    explicit Group(const Field& f);

    const Field& field() const { return *f_; }

    Coords identity() const { return Coords{}; }
    Coords x(int root, fe t) const;

    // in place: c := c * x_root(t)
    void rmul_letter(Coords& c, int root, fe t) const;

    Coords normalize(const Word& w, const Quotient& ctx = {}) const;
    Coords mul(const Coords& a, const Coords& b, const Quotient& ctx = {}) const;
    Coords inv(const Coords& a, const Quotient& ctx = {}) const;
    // h^-1 g h
    Coords conj(const Coords& g, const Coords& h, const Quotient& ctx = {}) const;
    // a^-1 b^-1 a b
    Coords commutator(const Coords& a, const Coords& b, const Quotient& ctx = {}) const;

    RootSet support(const Coords& c) const;

private:
    const Field* f_;
    // [x_a(t), x_b(u)] = x_k(sign*t*u); k = 0 when the roots commute
    struct Rel {
        std::uint8_t k = 0;
        std::int8_t sign = 0;
    };
    Rel rel_[kNumRoots + 1][kNumRoots + 1];
    // per root j, the relations (m, k, sign) with m > j, ordered by m
    struct TailRel {
        std::uint8_t m, k;
        std::int8_t sign;
    };
    std::array<std::vector<TailRel>, kNumRoots + 1> tail_;
};

// Dense integer codes for coordinate vectors supported on a fixed active
// set: code = sum over active roots (ascending) of d_i * q^position. Code 0
// is the identity; ascending codes give the canonical enumeration order.
class PackCodec {
public:
    PackCodec(const Field& f, RootSet active);

    std::uint64_t size() const { return size_; }
    RootSet active() const { return active_; }

    std::uint64_t pack(const Coords& c) const;
    Coords unpack(std::uint64_t code) const;

private:
    int q_;
    RootSet active_;
    std::vector<int> roots_;  // ascending
    std::uint64_t size_;
};

// Product of root subgroups over a closed set S (closed relative to the
// quotient: S together with the killed set is closed in Phi+). Its elements
// are exactly the coordinate vectors supported on S.
class PatternSubgroup {
public:
    PatternSubgroup(const Field& f, RootSet roots, Quotient ctx = {});

    RootSet roots() const { return roots_; }
    const Quotient& ctx() const { return ctx_; }
    std::uint64_t order() const;
    bool contains(const Group& g, const Coords& c) const;

private:
    const Field* f_;
    RootSet roots_;
    Quotient ctx_;
};

// Calls fn for each element of the subgroup in ascending pack order (pack
// order of the ambient quotient's codec).
void for_each_element(const Group& g, const PatternSubgroup& p,
                      const std::function<void(const Coords&)>& fn);
std::vector<Coords> enumerate(const Group& g, const PatternSubgroup& p,
                              std::uint64_t guard = 10'000'000);

struct SubgroupAnalysis {
    std::vector<std::uint64_t> derived;  // codes in the ambient codec, sorted
    std::vector<std::uint64_t> center;
    std::uint64_t exponent;
};

// Derived subgroup as the normal closure of the generator commutators,
// computed by closure over packed codes in the ambient codec.
std::vector<std::uint64_t> derived_subgroup(const Group& g,
                                            const PatternSubgroup& p,
                                            std::uint64_t guard = 10'000'000);

// Exhaustive derived subgroup, center and exponent of a pattern subgroup.
// Guarded by element count.
SubgroupAnalysis derived_and_center(const Group& g, const PatternSubgroup& p,
                                    std::uint64_t guard = 10'000'000);

}  // namespace d4u
