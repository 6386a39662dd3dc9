// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout. Exit status 0 iff everything passes.

#include <chrono>
#include <cstdio>
#include <vector>

#include "d4u/verify.hpp"

using namespace d4u;

namespace {

struct Criterion {
    int number;
    std::string title;
    bool pass = true;
    double ms = 0.0;
    std::vector<Check> detail;
};

void fold(Criterion& c, std::vector<Check> checks) {
    for (Check& ch : checks) {
        c.pass = c.pass && ch.pass;
        c.ms += ch.ms;
        c.detail.push_back(std::move(ch));
    }
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    {
        Criterion c{1, "commutator fidelity at q = 2, 3, 4"};
        for (int q : {2, 3, 4})
            fold(c, check_commutator_fidelity(Field::of_order(q)));
        criteria.push_back(std::move(c));
    }
    {
        Criterion c{2, "class counts 103 / 753 / 3259 at q = 2, 3, 4"};
        for (int q : {2, 3, 4}) fold(c, check_class_count(Field::of_order(q)));
        criteria.push_back(std::move(c));
    }
    {
        Criterion c{3, "midafi suite at q = 2, 3"};
        for (int q : {2, 3}) fold(c, check_midafi_suite(Field::of_order(q)));
        criteria.push_back(std::move(c));
    }
    {
        Criterion c{4, "structural lemmas at q = 2, 3"};
        for (int q : {2, 3}) fold(c, check_structural_lemmas(Field::of_order(q)));
        criteria.push_back(std::move(c));
    }
    {
        Criterion c{5, "representative sets: odd q = 3, even q = 2, 4"};
        for (int q : {3, 2, 4})
            fold(c, check_representative_sets(Field::of_order(q)));
        criteria.push_back(std::move(c));
    }
    {
        Criterion c{6, "full character table completeness at q = 2, 3"};
        for (int q : {2, 3}) fold(c, check_full_table(Field::of_order(q)));
        criteria.push_back(std::move(c));
    }
    {
        Criterion c{7, "property suites at q = 2"};
        fold(c, check_property_suite(Field::of_order(2)));
        criteria.push_back(std::move(c));
    }

    bool all = true;
    for (const Criterion& c : criteria) {
        for (const Check& ch : c.detail)
            if (!ch.pass)
                std::printf("    failed: %s\n      expected %s\n      computed %s\n",
                            ch.name.c_str(), ch.expected.c_str(),
                            ch.computed.c_str());
        std::printf("criterion %d: %s — %s (%.0f ms)\n", c.number,
                    c.pass ? "PASS" : "FAIL", c.title.c_str(), c.ms);
        all = all && c.pass;
    }
    std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}
