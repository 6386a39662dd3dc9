#pragma once

#include "d4u/families.hpp"

namespace d4u {

// One verification check: an expected value with its provenance, the
// computed value, and the outcome.
struct Check {
    std::string name;
    std::string expected;  // carries the provenance (polynomial, table row)
    std::string computed;
    bool pass = false;
    double ms = 0.0;
};

struct VerifyReport {
    std::vector<Check> checks;
    bool pass() const {
        for (const Check& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct VerifyOptions {
    bool parallel = true;
    bool fast = false;  // skip nothing; reserved for future use
};

// The individual suites. Each returns one or more checks; all tolerances are
// exact.
std::vector<Check> check_commutator_fidelity(const Field& f);
std::vector<Check> check_class_count(const Field& f, bool parallel = true);
std::vector<Check> check_midafi_suite(const Field& f, bool parallel = true);
std::vector<Check> check_structural_lemmas(const Field& f);
std::vector<Check> check_representative_sets(const Field& f);
std::vector<Check> check_full_table(const Field& f, bool parallel = true);
std::vector<Check> check_property_suite(const Field& f, bool parallel = true);

// Everything above for one q.
VerifyReport run_verify(const Field& f, VerifyOptions opts = {});

}  // namespace d4u
