#include "d4u/rootsys.hpp"

#include <stdexcept>

namespace d4u {

namespace {

constexpr std::array<Root, kNumRoots> kRoots = {{
    {1, {1, 0, 0, 0}, 1},
    {2, {0, 1, 0, 0}, 1},
    {3, {0, 0, 1, 0}, 1},
    {4, {0, 0, 0, 1}, 1},
    {5, {1, 0, 1, 0}, 2},
    {6, {0, 1, 1, 0}, 2},
    {7, {0, 0, 1, 1}, 2},
    {8, {1, 1, 1, 0}, 3},
    {9, {1, 0, 1, 1}, 3},
    {10, {0, 1, 1, 1}, 3},
    {11, {1, 1, 1, 1}, 4},
    {12, {1, 1, 2, 1}, 5},
}};

const std::vector<CommRel> kCommTable = {
    {1, 3, 5, +1},   {1, 6, 8, -1},  {1, 7, 9, +1},   {1, 10, 11, -1},
    {2, 3, 6, +1},   {2, 5, 8, -1},  {2, 7, 10, +1},  {2, 9, 11, -1},
    {3, 4, 7, +1},   {3, 11, 12, -1}, {4, 5, 9, -1},  {4, 6, 10, -1},
    {4, 8, 11, -1},  {5, 10, 12, -1}, {6, 9, 12, -1}, {7, 8, 12, +1},
};

// sum_[i-1][j-1] = index of alpha_i + alpha_j, or 0
struct SumTable {
    int sum[kNumRoots][kNumRoots] = {};
    SumTable() {
        for (int i = 1; i <= kNumRoots; ++i)
            for (int j = 1; j <= kNumRoots; ++j) {
                if (i == j) continue;
                std::array<int, 4> c;
                for (int t = 0; t < 4; ++t)
                    c[(size_t)t] = kRoots[(size_t)(i - 1)].coeffs[(size_t)t] +
                                   kRoots[(size_t)(j - 1)].coeffs[(size_t)t];
                for (const Root& r : kRoots)
                    if (r.coeffs == c) sum[i - 1][j - 1] = r.index;
            }
    }
};

const SumTable& sums() {
    static const SumTable t;
    return t;
}

void check_index(int r) {
    if (r < 1 || r > kNumRoots)
        throw std::out_of_range("root index out of range");
}

}  // namespace

const std::array<Root, kNumRoots>& roots() { return kRoots; }

const Root& root(int index) {
    check_index(index);
    return kRoots[(size_t)(index - 1)];
}

const std::vector<CommRel>& comm_table() { return kCommTable; }

std::optional<CommRel> comm(int i, int j) {
    check_index(i);
    check_index(j);
    if (i == j) throw std::invalid_argument("comm: equal root indices");
    for (const CommRel& r : kCommTable) {
        if (r.i == i && r.j == j) return r;
        if (r.i == j && r.j == i) return CommRel{i, j, r.k, -r.sign};
    }
    return std::nullopt;
}

std::optional<int> root_sum(int i, int j) {
    check_index(i);
    check_index(j);
    int k = sums().sum[i - 1][j - 1];
    if (k == 0) return std::nullopt;
    return k;
}

RootSet hook(int alpha) {
    check_index(alpha);
    RootSet h;
    h.insert(alpha);  // gamma' = 0
    for (int g = 1; g <= kNumRoots; ++g) {
        if (g == alpha) continue;
        for (int gp = 1; gp <= kNumRoots; ++gp)
            if (gp != g && sums().sum[g - 1][gp - 1] == alpha) h.insert(g);
    }
    return h;
}

RootSet arm(int alpha) {
    check_index(alpha);
    if (alpha == 12) return RootSet::of({8, 9, 10, 11});
    RootSet a = hook(alpha) & hook(12);
    a.erase(alpha);
    return a;
}

RootSet leg(int alpha) {
    RootSet l = hook(alpha) - arm(alpha);
    l.erase(alpha);
    return l;
}

RootSet v_alpha(int alpha) { return RootSet::all() - leg(alpha); }

bool is_closed(RootSet s) {
    if (s.empty()) throw std::invalid_argument("is_closed: empty set");
    for (int i = 1; i <= kNumRoots; ++i) {
        if (!s.contains(i)) continue;
        for (int j = i + 1; j <= kNumRoots; ++j) {
            if (!s.contains(j)) continue;
            int k = sums().sum[i - 1][j - 1];
            if (k != 0 && !s.contains(k)) return false;
        }
    }
    return true;
}

bool is_upper_closed(RootSet s) {
    for (int i = 1; i <= kNumRoots; ++i) {
        if (!s.contains(i)) continue;
        for (int j = 1; j <= kNumRoots; ++j) {
            if (j == i) continue;
            int k = sums().sum[i - 1][j - 1];
            if (k != 0 && !s.contains(k)) return false;
        }
    }
    return true;
}

}  // namespace d4u
