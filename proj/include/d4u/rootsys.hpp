#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace d4u {

inline constexpr int kNumRoots = 12;

// Positive root of D4 in the fixed CHEVIE numbering 1..12. coeffs are the
// coordinates on the simple roots alpha_1..alpha_4.
struct Root {
    int index;
    std::array<int, 4> coeffs;
    int height;
};

// Subset of the positive roots as a 12-bit mask (bit r-1 for alpha_r).
class RootSet {
public:
    constexpr RootSet() = default;
    constexpr explicit RootSet(std::uint16_t bits) : bits_(bits) {}
    static RootSet of(std::initializer_list<int> roots) {
        RootSet s;
        for (int r : roots) s.insert(r);
        return s;
    }
    static constexpr RootSet all() { return RootSet(0x0fff); }

    bool contains(int r) const { return (bits_ >> (r - 1)) & 1u; }
    void insert(int r) { bits_ |= (std::uint16_t)(1u << (r - 1)); }
    void erase(int r) { bits_ &= (std::uint16_t)~(1u << (r - 1)); }
    int size() const { return __builtin_popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    std::uint16_t bits() const { return bits_; }

    std::vector<int> members() const {
        std::vector<int> v;
        for (int r = 1; r <= kNumRoots; ++r)
            if (contains(r)) v.push_back(r);
        return v;
    }

    friend RootSet operator|(RootSet a, RootSet b) { return RootSet(a.bits_ | b.bits_); }
    friend RootSet operator&(RootSet a, RootSet b) { return RootSet(a.bits_ & b.bits_); }
    friend RootSet operator-(RootSet a, RootSet b) {
        return RootSet((std::uint16_t)(a.bits_ & ~b.bits_));
    }
    friend bool operator==(RootSet a, RootSet b) { return a.bits_ == b.bits_; }
    friend bool operator!=(RootSet a, RootSet b) { return a.bits_ != b.bits_; }
    friend bool operator<(RootSet a, RootSet b) { return a.bits_ < b.bits_; }

private:
    std::uint16_t bits_ = 0;
};

// One commutator relation [x_i(t), x_j(u)] = x_k(sign * t * u), i < j as
// listed; the swapped relation carries the negated sign.
struct CommRel {
    int i, j, k;
    int sign;
};

const std::array<Root, kNumRoots>& roots();
const Root& root(int index);

// The 16 nontrivial relations with i < j.
const std::vector<CommRel>& comm_table();

// Relation for the ordered pair (i, j) in either order, or nullopt when
// alpha_i + alpha_j is not a root. Throws on i == j.
std::optional<CommRel> comm(int i, int j);

// Index of alpha_i + alpha_j when it is a root.
std::optional<int> root_sum(int i, int j);

RootSet hook(int alpha);
RootSet arm(int alpha);
RootSet leg(int alpha);

// Phi+ \ leg(alpha); the base group of the midafi construction.
RootSet v_alpha(int alpha);

// Closure under root addition. Throws on the empty set.
bool is_closed(RootSet s);

// gamma in S and gamma+delta a root (delta any positive root) imply
// gamma+delta in S. Such sets give normal pattern subgroups.
bool is_upper_closed(RootSet s);

}  // namespace d4u
